#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "acd/error.hpp"
#include "acd/fast_control.hpp"
#include "support.hpp"

using namespace acd;

namespace {

FastProblem problem(double alpha_R, double lambda, CostShape shape, double i0 = 0.25, double i_e = 0.75) {
  FastProblem pr;
  pr.params.a = 1.0;
  pr.params.b = 0.0;
  pr.params.alpha_R = alpha_R;
  pr.params.lambda = lambda;
  pr.shape = shape;
  pr.i0 = i0;
  pr.i_e = i_e;
  return pr;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::verification_failed;
}

}  // namespace

TEST_CASE("hitting time examples") {
  const FastProblem pr = problem(0.5, 1.0, CostShape::linear);
  CHECK(hitting_time(1.0, pr) == doctest::Approx(2.0 * std::log(9.0)).epsilon(1e-15));
  FastProblem same = pr;
  same.i_e = same.i0;
  CHECK(hitting_time(1.0, same) == 0.0);
  CHECK(kind_of([&] { hitting_time(0.5, pr); }) == ErrorKind::unreachable_target);
  CHECK(kind_of([&] { hitting_time(0.2, pr); }) == ErrorKind::unreachable_target);
}

TEST_CASE("hitting time matches the simulated crossing") {
  testing::Draws d(41);
  for (int k = 0; k < 10; ++k) {
    const double alpha_R = d.uniform(0.0, 0.8);
    const double i0 = d.uniform(0.05, 0.5), i_e = d.uniform(i0 + 0.05, 0.95);
    const FastProblem pr = problem(alpha_R, 1.0, CostShape::linear, i0, i_e);
    const double u = d.uniform(alpha_R + 0.15, 1.0);
    const double T = hitting_time(u, pr);
    const Trajectory tr = integrate(FeedbackPolicy::constant(u), std::nullopt, pr.params, i0, T, 1e-4);
    CHECK(std::abs(tr.back().i_B - i_e) <= 1e-4);
    CHECK(tr.back().t == doctest::Approx(T));
  }
}

TEST_CASE("linear problem examples") {
  for (double lambda : {0.01, 1.0, 4.0, 100.0}) {
    const FastProblem pr = problem(0.5, lambda, CostShape::linear);
    const FastControlSolution s = solve_linear(pr);
    CHECK(s.control == 1.0);
    CHECK(s.case_tag == FastCase::linear_bang);
    CHECK(s.hitting_time == doctest::Approx(2.0 * std::log(9.0)).epsilon(1e-15));
    const std::vector<double> path{s.control};
    CHECK(fast_cost(path, s.hitting_time, pr.params, pr.shape) ==
          doctest::Approx(s.hitting_time * (1.0 + lambda)));
    CHECK(constant_control_cost(s.control, pr) == doctest::Approx(s.hitting_time * (1.0 + lambda)));
  }
  CHECK(kind_of([] { solve_linear(problem(1.0, 1.0, CostShape::linear)); }) == ErrorKind::unreachable_target);
}

TEST_CASE("quadratic problem examples") {
  SUBCASE("interior") {
    const FastControlSolution s = solve_quadratic(problem(0.25, 4.0, CostShape::quadratic));
    CHECK(s.case_tag == FastCase::quadratic_interior);
    CHECK(std::abs(s.control - (1.0 + std::sqrt(5.0)) / 4.0) <= 1e-12);
  }
  SUBCASE("bang below the threshold") {
    const FastControlSolution s = solve_quadratic(problem(0.25, 1.0, CostShape::quadratic));
    CHECK(s.case_tag == FastCase::quadratic_bang);
    CHECK(s.control == 1.0);
  }
  SUBCASE("bang when the attacker is too strong for an interior optimum") {
    for (double lambda : {0.5, 4.0, 1000.0}) {
      const FastControlSolution s = solve_quadratic(problem(0.6, lambda, CostShape::quadratic));
      CHECK(s.case_tag == FastCase::quadratic_bang);
      CHECK(s.control == 1.0);
    }
  }
}

TEST_CASE("constant-control oracle examples") {
  SUBCASE("linear cost prefers full power") {
    testing::Draws d(43);
    for (int k = 0; k < 20; ++k) {
      const ConstantMinimum m =
          brute_force_constant_minimizer(problem(d.uniform(0.0, 0.9), d.uniform(0.01, 10.0), CostShape::linear));
      CHECK(m.control == doctest::Approx(1.0).epsilon(1e-6));
    }
  }
  SUBCASE("quadratic interior") {
    const ConstantMinimum m = brute_force_constant_minimizer(problem(0.25, 4.0, CostShape::quadratic));
    CHECK(std::abs(m.control - 0.809017) <= 1e-3);
  }
  SUBCASE("effort nearly free") {
    const ConstantMinimum m = brute_force_constant_minimizer(problem(0.25, 1e-6, CostShape::quadratic));
    CHECK(m.control == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("boundary residual vanishes in every case") {
  CHECK(std::abs(solve_fast(problem(0.5, 1.0, CostShape::linear)).boundary_residual) <= 1e-10);
  CHECK(std::abs(solve_fast(problem(0.25, 4.0, CostShape::quadratic)).boundary_residual) <= 1e-10);
  CHECK(std::abs(solve_fast(problem(0.25, 1.0, CostShape::quadratic)).boundary_residual) <= 1e-10);
  testing::Draws d(47);
  for (int k = 0; k < 200; ++k) {
    FastProblem pr = problem(0.0, d.uniform(0.05, 50.0), k % 2 ? CostShape::linear : CostShape::quadratic,
                             d.uniform(0.05, 0.5), d.uniform(0.55, 0.95));
    pr.params.b = d.uniform(0.0, 0.4);
    pr.params.a = d.uniform(pr.params.b + 0.1, 1.0);
    pr.params.alpha_R = d.uniform(pr.params.b, pr.params.a - 0.01);
    const FastControlSolution s = solve_fast(pr);
    CHECK(std::abs(s.boundary_residual) <= 1e-10);
  }
}

TEST_CASE("interior predicate matches the stationary-point characterization") {
  int disagreements = 0;
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 50; ++j) {
      ModelParams p;
      p.lambda = 0.1 * std::pow(200.0, i / 49.0);
      p.alpha_R = 0.005 + 0.99 * j / 49.0;
      const double u = quadratic_stationary_control(p);
      if ((u > 0.0 && u <= 1.0) != quadratic_is_interior(p)) ++disagreements;
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("interior solution is stationary") {
  testing::Draws d(53);
  int interior = 0;
  for (int k = 0; k < 100; ++k) {
    const FastProblem pr = problem(d.uniform(0.0, 0.45), d.uniform(0.5, 50.0), CostShape::quadratic);
    const FastControlSolution s = solve_quadratic(pr);
    if (s.case_tag != FastCase::quadratic_interior) continue;
    ++interior;
    // Richardson-extrapolated central difference, fourth order in h.
    const auto central = [&](double h) {
      return (constant_control_cost(s.control + h, pr) - constant_control_cost(s.control - h, pr)) / (2 * h);
    };
    const double h = std::min(1e-3, (1.0 - s.control) / 2);
    const double slope = (4 * central(h / 2) - central(h)) / 3;
    CHECK(std::abs(slope) <= 1e-8 * std::max(1.0, constant_control_cost(s.control, pr)));
  }
  CHECK(interior > 20);
}

TEST_CASE("solver agrees with the constant-control oracle over a parameter grid") {
  for (CostShape shape : {CostShape::linear, CostShape::quadratic}) {
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      for (int j = 0; j < 50; ++j) {
        const FastProblem pr = problem(0.005 + 0.99 * j / 49.0, 0.1 * std::pow(200.0, i / 49.0), shape);
        const FastControlSolution s = solve_fast(pr);
        const ConstantMinimum m = brute_force_constant_minimizer(pr);
        const double J = constant_control_cost(s.control, pr);
        if (std::abs(s.control - m.control) > 1e-3 || J - m.cost > 1e-6 * (1.0 + J)) ++bad;
      }
    }
    CAPTURE(to_string(shape));
    CHECK(bad == 0);
  }
}

TEST_CASE("full-power hitting time monotonicity") {
  const auto T1 = [](double a, double alpha_R, double i_e) {
    FastProblem pr = problem(alpha_R, 1.0, CostShape::linear, 0.25, i_e);
    pr.params.a = a;
    return hitting_time(1.0, pr);
  };
  testing::Draws d(59);
  for (int k = 0; k < 100; ++k) {
    const double a = d.uniform(0.5, 0.9), aR = d.uniform(0.0, 0.4), ie = d.uniform(0.3, 0.9);
    CHECK(T1(a + 0.05, aR, ie) < T1(a, aR, ie));
    CHECK(T1(a, aR + 0.05, ie) > T1(a, aR, ie));
    CHECK(T1(a, aR, ie + 0.05) > T1(a, aR, ie));
  }
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(solve_fast(problem(0.5, 1.0, CostShape::linear, 0.75, 0.25)), Error);
  CHECK_THROWS_AS(solve_fast(problem(0.5, 1.0, CostShape::linear, 0.0, 0.5)), Error);
  CHECK_THROWS_AS(brute_force_constant_minimizer(problem(0.5, 1.0, CostShape::linear), 1), Error);
}
