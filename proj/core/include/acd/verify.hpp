#pragma once

// Numerical certification: fixed-parameter acceptance checks and a property
// suite parameterized by a scenario. Every check is self-contained and
// reports its own pass/fail with the measured numbers.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "acd/dynamics.hpp"
#include "acd/model.hpp"

namespace acd::verify {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;         // measured runtime
  double budget_seconds = 0.0;  // 0 = no runtime bound

  bool within_budget() const { return budget_seconds <= 0.0 || seconds <= budget_seconds; }
  bool ok() const { return passed && within_budget(); }

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// a = 1, b = 0, alpha_R = 0.5, z = 0.5, k_B = 0.25 (k_B z = 1/8).
ModelParams single_player_reference();

/// single_player_reference() with k_R = 1/3 (k_R z = 1/6).
ModelParams game_reference();

/// Game parameters for a table row: the cost products are 1/8 (defender) or
/// 1/6 (attacker) below the threshold, 1/4 at it, and 0.3 above it.
ModelParams table_row_params(int row);

struct AcceptanceCheck {
  std::string id;
  std::string title;
  double budget_seconds;
  std::function<CheckResult()> run;
};

std::vector<AcceptanceCheck> acceptance_checks();

/// Runs every acceptance check, timing each one.
std::vector<CheckResult> run_acceptance_suite();

struct PropertyInputs {
  ModelParams params;
  double i0 = 0.5;
  std::optional<double> i_e;
  CostShape shape = CostShape::linear;
  double step = kDefaultStep;
};

/// Scenario-specific invariants: root certificates, oracle optimality,
/// outcome and switching-sign agreement, fast-control agreement (when i_e is
/// given) and equilibrium checks.
std::vector<CheckResult> run_property_suite(const PropertyInputs& in);

/// The case table transcribed literally: (pi_B, pi_R) at initial state i0 for the row.
/// Independent of the policy construction in nash_profile.
std::pair<double, double> table_strategy(int row, double i1, double i2, double i3, double i4,
                                         double i0);

/// Probe states for a row: every root plus one point per interval, padded to seven.
std::vector<double> table_probes(const ModelParams& params);

}  // namespace acd::verify
