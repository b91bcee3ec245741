#pragma once

// Infinite-horizon discounted defense against a non-strategic attacker:
//
//   minimize  integral_0^inf e^{-zt} (f_B(i_B) + k_B pi_B) dt
//
// The switching function k_B + p i_B (1 - i_B)(a - b) vanishes on singular
// arcs, which can only sit at zeros of
//
//   F_B(i) = -i (1 - i)(a - b) f_B'(i) - k_B z.

#include <optional>
#include <string>
#include <vector>

#include "acd/dynamics.hpp"
#include "acd/model.hpp"
#include "acd/outcome.hpp"
#include "acd/policy.hpp"

namespace acd {

inline constexpr double kRootTolerance = 1e-12;

struct RootPair {
  enum class Kind { two_roots, single_root, no_root };

  Kind kind = Kind::no_root;
  double i1 = 0.0;  // meaningful unless no_root
  double i2 = 0.0;  // equals i1 for single_root

  friend bool operator==(const RootPair&, const RootPair&) = default;
};

const char* to_string(RootPair::Kind kind);

/// Zeros of y(i) = scale * i (1 - i) - cost with scale > 0, cost >= 0.
/// cost == 0 yields the boundary pair {0, 1}.
RootPair logistic_roots(double scale, double cost);

/// Same zeros located by bisection on [0, 1/2] and [1/2, 1]; independent of the closed form.
RootPair logistic_roots_bisection(double scale, double cost, double tol = kRootTolerance);

double eval_F_B(double i_B, const ModelParams& params);

RootPair roots_F_B(const ModelParams& params);

/// (alpha_R - b) / (a - b): the control that makes alpha_B equal alpha_R.
/// Throws Error(inadmissible_singular) when alpha_R is outside [b, a].
double singular_control(const ModelParams& params);

enum class PolicyRegime {
  two_roots,    // k_B z < |f_B'| (a - b) / 4
  single_root,  // equality
  no_root,      // k_B z > |f_B'| (a - b) / 4: never defend actively
  cost_free,    // k_B = 0: full power everywhere
};

/// Where the fixed attack power sits relative to the control interval.
enum class Dominance {
  interior,            // b < alpha_R < a
  defender_dominates,  // alpha_R <= b: pi = 0 already holds ground
  attacker_dominates,  // alpha_R >= a: pi = 1 can at best hold ground
};

const char* to_string(PolicyRegime regime);
const char* to_string(Dominance d);

struct InfiniteHorizonPolicy {
  PolicyRegime regime = PolicyRegime::no_root;
  Dominance dominance = Dominance::interior;
  RootPair roots;
  std::optional<double> singular;  // u_B, when the policy uses it
  FeedbackPolicy policy;
};

InfiniteHorizonPolicy optimal_policy(const ModelParams& params);

/// Long-run state under the optimal policy.
Outcome limit_outcome(double i0, const ModelParams& params);

struct SwitchingDiagnostics {
  double p = 0.0;          // costate
  double switching = 0.0;  // dH_B / dpi_B
  double hamiltonian = 0.0;
};

/// Costate at i_B: the singular value when i_B is a root of F_B, otherwise the
/// adjoint equation integrated backward along the optimal path, starting from
/// the steady value f_B'/z where the path is held, or from p(T) = 0 at the
/// discount horizon when it never stops. The Hamiltonian is evaluated at pi_B.
SwitchingDiagnostics switching_diagnostics(double i_B, const ModelParams& params, double pi_B,
                                           double step = kDefaultStep);

struct PolicyGrid {
  int constants = 100;  // constant policies k / constants, k = 0..constants
  int thresholds = 20;  // threshold grid (j + 1) / (thresholds + 1)
};

struct PolicyCandidate {
  std::string label;
  FeedbackPolicy policy;
};

/// Constant policies plus every two-threshold bang policy on the grid:
/// 1 inside (lo, hi), 0 inside (lo, hi), and the single-switch 1-then-0 rule.
std::vector<PolicyCandidate> policy_candidates(const PolicyGrid& grid);

struct BruteForceResult {
  PolicyCandidate best;
  double best_cost = 0.0;
  double best_constant = 0.0;       // control of the cheapest constant policy
  double best_constant_cost = 0.0;
  std::size_t evaluated = 0;
};

/// Cheapest grid candidate by discounted defender cost from i0.
BruteForceResult brute_force_best_policy(const ModelParams& params, double i0,
                                         const PolicyGrid& grid = {},
                                         const DiscountOptions& opts = {});

}  // namespace acd
