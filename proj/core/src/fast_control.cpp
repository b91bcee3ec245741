#include "acd/fast_control.hpp"

#include <cmath>
#include <sstream>

#include "acd/error.hpp"
#include "acd/numerics.hpp"

namespace acd {

const char* to_string(FastCase c) {
  switch (c) {
    case FastCase::linear_bang: return "linear-bang";
    case FastCase::quadratic_interior: return "quadratic-interior";
    case FastCase::quadratic_bang: return "quadratic-bang";
  }
  return "unknown";
}

void FastProblem::validate() const {
  params.validate();
  if (!(i0 > 0.0 && i0 < i_e && i_e < 1.0)) {
    throw Error(ErrorKind::invalid_argument, "fast problem needs 0 < i0 < i_e < 1");
  }
}

namespace {

[[noreturn]] void unreachable(const ModelParams& p, double u) {
  std::ostringstream os;
  os << "target unreachable: net rate b + (a - b) u - alpha_R = " << net_rate(u, p)
     << " is not positive at u = " << u;
  throw Error(ErrorKind::unreachable_target, os.str());
}

void require_reachable(const FastProblem& problem) {
  problem.validate();
  if (!(problem.params.a > problem.params.alpha_R)) unreachable(problem.params, 1.0);
}

double log_odds_gap(const FastProblem& pr) { return std::log(odds(pr.i_e) / odds(pr.i0)); }

}  // namespace

double hitting_time(double u, const FastProblem& problem) {
  problem.params.validate();
  if (!(problem.i0 > 0.0 && problem.i0 <= problem.i_e && problem.i_e < 1.0)) {
    throw Error(ErrorKind::invalid_argument, "hitting_time needs 0 < i0 <= i_e < 1");
  }
  if (!(u >= 0.0 && u <= 1.0)) throw Error(ErrorKind::invalid_argument, "control must lie in [0, 1]");
  if (problem.i_e == problem.i0) return 0.0;
  const double r = net_rate(u, problem.params);
  if (!(r > 0.0)) unreachable(problem.params, u);
  return log_odds_gap(problem) / r;
}

double constant_control_cost(double u, const FastProblem& problem) {
  return hitting_time(u, problem) * (1.0 + problem.params.lambda * effort(u, problem.shape));
}

double quadratic_stationary_control(const ModelParams& p) {
  const double c = (p.alpha_R - p.b) / p.span();
  return c + std::sqrt(c * c + 1.0 / p.lambda);
}

bool quadratic_is_interior(const ModelParams& p) {
  if (!(p.span() > 2.0 * (p.alpha_R - p.b))) return false;
  return p.lambda >= p.span() / (p.a + p.b - 2.0 * p.alpha_R);
}

FastControlSolution solve_linear(const FastProblem& problem) {
  require_reachable(problem);
  FastControlSolution s;
  s.control = 1.0;
  s.hitting_time = hitting_time(1.0, problem);
  s.case_tag = FastCase::linear_bang;
  s.boundary_residual = boundary_condition_check(s, problem);
  return s;
}

FastControlSolution solve_quadratic(const FastProblem& problem) {
  require_reachable(problem);
  FastControlSolution s;
  if (quadratic_is_interior(problem.params)) {
    s.control = quadratic_stationary_control(problem.params);
    s.case_tag = FastCase::quadratic_interior;
  } else {
    s.control = 1.0;
    s.case_tag = FastCase::quadratic_bang;
  }
  s.hitting_time = hitting_time(s.control, problem);
  s.boundary_residual = boundary_condition_check(s, problem);
  return s;
}

FastControlSolution solve_fast(const FastProblem& problem) {
  return problem.shape == CostShape::linear ? solve_linear(problem) : solve_quadratic(problem);
}

ConstantMinimum brute_force_constant_minimizer(const FastProblem& problem, int grid_size) {
  problem.validate();
  if (grid_size < 2) throw Error(ErrorKind::invalid_argument, "grid_size must be at least 2");
  const ModelParams& p = problem.params;
  const double u_min = std::max(0.0, (p.alpha_R - p.b) / p.span());
  if (u_min >= 1.0) unreachable(p, 1.0);

  const auto u_at = [&](int k) { return u_min + (1.0 - u_min) * k / grid_size; };
  const auto reachable = [&](int k) { return k >= 0 && k <= grid_size && net_rate(u_at(k), p) > 0.0; };

  int best_k = -1;
  double best = 0.0;
  for (int k = 0; k <= grid_size; ++k) {
    if (!reachable(k)) continue;
    const double j = constant_control_cost(u_at(k), problem);
    if (best_k < 0 || j < best) {
      best_k = k;
      best = j;
    }
  }
  if (best_k < 0) unreachable(p, 1.0);

  ConstantMinimum out{u_at(best_k), best};
  const double lo = reachable(best_k - 1) ? u_at(best_k - 1) : u_at(best_k);
  const double hi = best_k < grid_size ? u_at(best_k + 1) : u_at(best_k);
  if (hi > lo) {
    const auto refined = numerics::golden_section(
        [&](double u) { return constant_control_cost(u, problem); }, lo, hi, 1e-6);
    if (refined.value < out.cost) out = {refined.x, refined.value};
  }
  return out;
}

double boundary_condition_check(const FastControlSolution& solution, const FastProblem& problem) {
  const ModelParams& p = problem.params;
  const double span = p.span();
  const double lam = p.lambda;
  const double y = problem.i_e * (1.0 - problem.i_e);

  // Terminal costate q(T) recovered from the case constant.
  double q = 0.0;
  switch (solution.case_tag) {
    case FastCase::linear_bang: {
      // dH_F/dpi = lambda + q (a - b) y is the negative constant below.
      const double switching = span / (p.a - p.alpha_R) * ((p.b - p.alpha_R) * lam / span - 1.0);
      q = (switching - lam) / (span * y);
      break;
    }
    case FastCase::quadratic_interior: {
      const double c = (p.b - p.alpha_R) / span * lam;
      const double d = 2.0 * c - std::sqrt(4.0 * c * c + 4.0 * lam);
      q = d / (span * y);
      break;
    }
    case FastCase::quadratic_bang: {
      const double d = -span * (lam + 1.0) / (p.a - p.alpha_R);
      q = d / (span * y);
      break;
    }
  }
  const CostShape shape =
      solution.case_tag == FastCase::linear_bang ? CostShape::linear : CostShape::quadratic;
  const double h_f = lam * effort(solution.control, shape) + q * net_rate(solution.control, p) * y;
  return h_f + 1.0;
}

}  // namespace acd
