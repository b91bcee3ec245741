#pragma once

// Fast control: drive i_B from i0 up to i_e while minimizing
//
//   J_F = T + lambda * integral_0^T h(pi_B(t)) dt,   h(pi) = pi or pi^2,
//
// with a free hitting time T. The optimum is a constant control in both cases.

#include <string>

#include "acd/dynamics.hpp"
#include "acd/model.hpp"

namespace acd {

struct FastProblem {
  double i0 = 0.25;
  double i_e = 0.75;
  ModelParams params;
  CostShape shape = CostShape::linear;

  /// Requires valid params and 0 < i0 < i_e < 1.
  void validate() const;
};

enum class FastCase { linear_bang, quadratic_interior, quadratic_bang };

const char* to_string(FastCase c);

struct FastControlSolution {
  double control = 1.0;       // constant over [0, T]
  double hitting_time = 0.0;
  FastCase case_tag = FastCase::linear_bang;
  double boundary_residual = 0.0;  // H_F + 1 at the terminal time

  friend bool operator==(const FastControlSolution&, const FastControlSolution&) = default;
};

/// b + (a - b) u - alpha_R
inline double net_rate(double u, const ModelParams& p) noexcept { return p.power(u) - p.alpha_R; }

/// Time for a constant control u to carry i0 to i_e. Zero when i_e == i0.
/// Throws Error(unreachable_target) when the net rate is not positive.
double hitting_time(double u, const FastProblem& problem);

/// J_F of the constant control u: T(u) (1 + lambda h(u)).
double constant_control_cost(double u, const FastProblem& problem);

/// Interior minimizer (alpha_R - b)/(a - b) + sqrt(((b - alpha_R)/(a - b))^2 + 1/lambda)
/// of the quadratic constant-control cost, ignoring the bound pi <= 1.
double quadratic_stationary_control(const ModelParams& params);

/// Case test for the quadratic problem: a - b > 2 (alpha_R - b) and
/// lambda >= (a - b) / (a + b - 2 alpha_R). The companion test runs first so
/// the threshold is never divided by a non-positive number.
bool quadratic_is_interior(const ModelParams& params);

FastControlSolution solve_linear(const FastProblem& problem);
FastControlSolution solve_quadratic(const FastProblem& problem);

/// Dispatches on problem.shape.
FastControlSolution solve_fast(const FastProblem& problem);

struct ConstantMinimum {
  double control = 0.0;
  double cost = 0.0;
};

/// Grid search over reachable constant controls followed by golden-section refinement.
ConstantMinimum brute_force_constant_minimizer(const FastProblem& problem, int grid_size = 1000);

/// H_F + 1 at the terminal state, with the terminal costate recovered from the
/// closed-form constant of the solution's case.
double boundary_condition_check(const FastControlSolution& solution, const FastProblem& problem);

}  // namespace acd
