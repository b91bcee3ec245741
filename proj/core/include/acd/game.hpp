#pragma once

// Strategic attacker and defender sharing the control interval [b, a]:
// alpha_B = b + pi_B (a - b), alpha_R = b + pi_R (a - b). Each player
// minimizes its own discounted cost; equilibria follow the nine-row case table
// indexed by how k_B z and k_R z compare with |f'| (a - b) / 4.

#include <string>

#include "acd/dynamics.hpp"
#include "acd/infinite_horizon.hpp"
#include "acd/model.hpp"
#include "acd/outcome.hpp"
#include "acd/policy.hpp"

namespace acd {

/// F_R(i) = i (1 - i)(a - b) f_R'(i) - k_R z
double eval_F_R(double i_B, const ModelParams& params);

RootPair roots_F_R(const ModelParams& params);

/// Position of a player's cost product k z relative to |f'| (a - b) / 4.
enum class CostLevel { below, at, above };

const char* to_string(CostLevel level);

/// Table row 1..9: defender level major (below, at, above), attacker level minor.
int table_row(CostLevel defender, CostLevel attacker);

struct NashProfile {
  FeedbackPolicy defender_policy;
  FeedbackPolicy attacker_policy;
  int regime_row = 1;
  CostLevel defender_level = CostLevel::below;
  CostLevel attacker_level = CostLevel::below;
  RootPair roots_B;  // i1, i2
  RootPair roots_R;  // i3, i4
  double pi_B0 = 0.0;  // strategy pair at the initial state
  double pi_R0 = 0.0;
  Outcome predicted_outcome;
};

/// Equilibrium feedback pair for the params' table row, with interval
/// boundaries exactly as tabulated, evaluated and phase-line-classified from i_B0.
NashProfile nash_profile(const ModelParams& params, double i_B0);

enum class Ordering {
  defender_outer,  // i1 < i3 < i4 < i2
  attacker_outer,  // i3 < i1 < i2 < i4
  coincident,      // i1 = i3, i2 = i4
};

const char* to_string(Ordering o);

/// Interleaving of both root pairs; both players must be in the two-roots regime.
/// Throws Error(verification_failed) if the interleaving contradicts the cost ordering.
Ordering ordering_check(const ModelParams& params);

/// Both players applying their equilibrium feedback strategies.
Trajectory equilibrium_trajectory(const ModelParams& params, double i_B0, double t_end,
                                  double step = kDefaultStep);

struct DeviationReport {
  Player player = Player::defender;
  double equilibrium_cost = 0.0;
  double best_deviation_cost = 0.0;
  double best_deviation_control = 0.0;
  double max_improvement = 0.0;  // equilibrium_cost - best_deviation_cost
};

/// Certificate against unilateral constant deviations only; feedback
/// deviations are not searched.
struct BestResponseReport {
  DeviationReport defender;
  DeviationReport attacker;
  double tolerance = 1e-4;
  bool passed = false;
};

BestResponseReport best_response_check(const NashProfile& profile, const ModelParams& params,
                                       double i_B0, int deviation_grid = 41,
                                       double tolerance = 1e-4, const DiscountOptions& opts = {});

struct HamiltonianPair {
  double H_B = 0.0;
  double H_R = 0.0;
};

HamiltonianPair hamiltonian_pair(double i_B, double pi_B, double pi_R, double p1, double p2,
                                 const ModelParams& params);

}  // namespace acd
