#include "acd/infinite_horizon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "acd/error.hpp"
#include "acd/numerics.hpp"

namespace acd {

const char* to_string(RootPair::Kind kind) {
  switch (kind) {
    case RootPair::Kind::two_roots: return "two-roots";
    case RootPair::Kind::single_root: return "single-root";
    case RootPair::Kind::no_root: return "no-root";
  }
  return "unknown";
}

const char* to_string(PolicyRegime regime) {
  switch (regime) {
    case PolicyRegime::two_roots: return "two-roots";
    case PolicyRegime::single_root: return "single-root";
    case PolicyRegime::no_root: return "no-root";
    case PolicyRegime::cost_free: return "cost-free";
  }
  return "unknown";
}

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::interior: return "interior";
    case Dominance::defender_dominates: return "defender-dominates";
    case Dominance::attacker_dominates: return "attacker-dominates";
  }
  return "unknown";
}

namespace {

// Relative width of the band treated as the tangent (double-root) case.
constexpr double kTangentTolerance = 1e-12;

enum class Tangency { below, tangent, above };

// Compares cost with the peak scale/4 of scale * i (1 - i).
Tangency classify(double scale, double cost) {
  const double gap = 4.0 * cost - scale;
  if (std::abs(gap) <= kTangentTolerance * scale) return Tangency::tangent;
  return gap < 0.0 ? Tangency::below : Tangency::above;
}

}  // namespace

RootPair logistic_roots(double scale, double cost) {
  if (cost == 0.0) return {RootPair::Kind::two_roots, 0.0, 1.0};
  switch (classify(scale, cost)) {
    case Tangency::tangent: return {RootPair::Kind::single_root, 0.5, 0.5};
    case Tangency::above: return {RootPair::Kind::no_root, 0.0, 0.0};
    case Tangency::below: break;
  }
  const double q = cost / scale;  // i1 * i2
  const double i2 = 0.5 * (1.0 + std::sqrt(1.0 - 4.0 * q));
  // Product form avoids the cancellation in (1 - sqrt(1 - 4q)) / 2 for small q.
  return {RootPair::Kind::two_roots, q / i2, i2};
}

RootPair logistic_roots_bisection(double scale, double cost, double tol) {
  if (cost == 0.0) return {RootPair::Kind::two_roots, 0.0, 1.0};
  switch (classify(scale, cost)) {
    case Tangency::tangent: return {RootPair::Kind::single_root, 0.5, 0.5};
    case Tangency::above: return {RootPair::Kind::no_root, 0.0, 0.0};
    case Tangency::below: break;
  }
  const auto y = [=](double i) { return scale * i * (1.0 - i) - cost; };
  return {RootPair::Kind::two_roots, numerics::bisect(y, 0.0, 0.5, tol),
          numerics::bisect(y, 0.5, 1.0, tol)};
}

double eval_F_B(double i_B, const ModelParams& params) {
  return -i_B * (1.0 - i_B) * params.span() * params.fB_slope - params.k_B * params.z;
}

RootPair roots_F_B(const ModelParams& params) {
  params.validate();
  return logistic_roots(std::abs(params.fB_slope) * params.span(), params.k_B * params.z);
}

double singular_control(const ModelParams& params) {
  params.validate();
  if (params.alpha_R < params.b || params.alpha_R > params.a) {
    std::ostringstream os;
    os << "singular control (alpha_R - b) / (a - b) leaves [0, 1] for alpha_R = "
       << params.alpha_R;
    throw Error(ErrorKind::inadmissible_singular, os.str());
  }
  return (params.alpha_R - params.b) / params.span();
}

InfiniteHorizonPolicy optimal_policy(const ModelParams& params) {
  params.validate();
  InfiniteHorizonPolicy out;
  out.roots = roots_F_B(params);
  if (params.alpha_R <= params.b) {
    out.dominance = Dominance::defender_dominates;
  } else if (params.alpha_R >= params.a) {
    out.dominance = Dominance::attacker_dominates;
  }

  if (params.k_B == 0.0) {
    out.regime = PolicyRegime::cost_free;
    out.policy = FeedbackPolicy::constant(1.0);
    return out;
  }
  switch (out.roots.kind) {
    case RootPair::Kind::no_root:
      out.regime = PolicyRegime::no_root;
      out.policy = FeedbackPolicy::constant(0.0);
      break;
    case RootPair::Kind::single_root: {
      out.regime = PolicyRegime::single_root;
      const double u = singular_control(params);
      out.singular = u;
      out.policy = FeedbackPolicy({out.roots.i1}, {0.0, 0.0}, {{out.roots.i1, u}});
      break;
    }
    case RootPair::Kind::two_roots: {
      out.regime = PolicyRegime::two_roots;
      const double u = singular_control(params);
      out.singular = u;
      out.policy = FeedbackPolicy({out.roots.i1, out.roots.i2}, {0.0, 1.0, 0.0},
                                  {{out.roots.i1, u}, {out.roots.i2, u}});
      break;
    }
  }
  return out;
}

Outcome limit_outcome(double i0, const ModelParams& params) {
  return phase_line_outcome(optimal_policy(params).policy, std::nullopt, params, i0);
}

namespace {

// Adjoint p(0) along the optimal path from i0. The path moves at one constant
// rate until it reaches the next critical state (where it is held) or decays
// towards 0 / 1. On a hold the bounded adjoint is the steady value
// f_B' / z; otherwise p(T) = 0 at the discount horizon. The backward sweep is
// RK4 over the smooth segment only, with the state taken from the closed form.
double costate_along_path(double i0, const FeedbackPolicy& policy, const ModelParams& params,
                          double step) {
  const double aB = params.power(policy(i0));
  const double rate = aB - params.alpha_R;
  const double tol = 1e-12 * std::max(1.0, std::abs(params.a));
  if (std::abs(rate) <= tol) return params.fB_slope / params.z;

  double t_end = discount_horizon(params);
  double p = 0.0;
  const std::vector<double> crit = policy.critical_states();
  std::optional<double> target;
  for (double c : crit) {
    if (rate > 0.0 && c > i0 + kRootBand && (!target || c < *target)) target = c;
    if (rate < 0.0 && c < i0 - kRootBand && (!target || c > *target)) target = c;
  }
  if (target) {
    const double hit = std::log(odds(*target) / odds(i0)) / rate;
    if (hit < t_end) {
      t_end = hit;
      const double held = params.power(policy(*target)) - params.alpha_R;
      p = std::abs(held) <= tol ? params.fB_slope / params.z
                                : costate_along_path(*target, policy, params, step);
    }
  }

  const auto p_dot = [&](double t, double pk) {
    const double x = closed_form_state(t, i0, aB, params.alpha_R);
    return -params.fB_slope + pk * (params.z - rate * (1.0 - 2.0 * x));
  };
  const std::size_t n = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(t_end / step)));
  const double h = t_end / static_cast<double>(n);
  for (std::size_t m = n; m > 0; --m) {
    const double t = static_cast<double>(m) * h;
    const double k1 = p_dot(t, p);
    const double k2 = p_dot(t - 0.5 * h, p - 0.5 * h * k1);
    const double k3 = p_dot(t - 0.5 * h, p - 0.5 * h * k2);
    const double k4 = p_dot(t - h, p - h * k3);
    p -= h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return p;
}

}  // namespace

SwitchingDiagnostics switching_diagnostics(double i_B, const ModelParams& params, double pi_B,
                                           double step) {
  if (!(i_B > 0.0 && i_B < 1.0)) {
    throw Error(ErrorKind::invalid_argument,
                "switching diagnostics need 0 < i_B < 1 (the singular costate is undefined "
                "at the boundary)");
  }
  const InfiniteHorizonPolicy opt = optimal_policy(params);
  const double y = i_B * (1.0 - i_B);
  const double span = params.span();

  const bool on_singular_arc =
      opt.singular && (std::abs(i_B - opt.roots.i1) < kRootBand ||
                       std::abs(i_B - opt.roots.i2) < kRootBand);

  double p = 0.0;
  if (on_singular_arc) {
    p = -params.k_B / (y * span);
  } else {
    p = costate_along_path(i_B, opt.policy, params, step);
  }

  SwitchingDiagnostics d;
  d.p = p;
  d.switching = params.k_B + p * y * span;
  d.hamiltonian = d.switching * pi_B + params.f_B(i_B) + p * params.b * y - p * params.alpha_R * y;
  return d;
}

std::vector<PolicyCandidate> policy_candidates(const PolicyGrid& grid) {
  if (grid.constants < 1 || grid.thresholds < 1) {
    throw Error(ErrorKind::invalid_argument, "policy grid sizes must be positive");
  }
  std::vector<PolicyCandidate> out;
  out.reserve(static_cast<std::size_t>(grid.constants + 1 + grid.thresholds * grid.thresholds));

  const auto fmt = [](double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
  };

  for (int k = 0; k <= grid.constants; ++k) {
    const double u = static_cast<double>(k) / grid.constants;
    out.push_back({"constant " + fmt(u), FeedbackPolicy::constant(u)});
  }
  const int m = grid.thresholds;
  const auto theta = [m](int j) { return static_cast<double>(j + 1) / (m + 1); };
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      if (j < k) {
        out.push_back({"1 on (" + fmt(theta(j)) + "," + fmt(theta(k)) + ")",
                       FeedbackPolicy({theta(j), theta(k)}, {0.0, 1.0, 0.0})});
      } else if (j > k) {
        out.push_back({"0 on (" + fmt(theta(k)) + "," + fmt(theta(j)) + ")",
                       FeedbackPolicy({theta(k), theta(j)}, {1.0, 0.0, 1.0})});
      } else {
        out.push_back({"1 below " + fmt(theta(j)),
                       FeedbackPolicy({theta(j)}, {1.0, 0.0})});
      }
    }
  }
  return out;
}

BruteForceResult brute_force_best_policy(const ModelParams& params, double i0,
                                         const PolicyGrid& grid, const DiscountOptions& opts) {
  BruteForceResult res;
  res.best_cost = std::numeric_limits<double>::infinity();
  res.best_constant_cost = std::numeric_limits<double>::infinity();
  for (auto& cand : policy_candidates(grid)) {
    const double cost = discounted_cost(cand.policy, std::nullopt, params, i0, Player::defender, opts);
    ++res.evaluated;
    if (cand.policy.is_constant() && cost < res.best_constant_cost) {
      res.best_constant_cost = cost;
      res.best_constant = cand.policy.values().front();
    }
    if (cost < res.best_cost) {
      res.best_cost = cost;
      res.best = std::move(cand);
    }
  }
  return res;
}

}  // namespace acd
