#pragma once

// Per-mode result documents written by the CLI.

#include <optional>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace acd::cli {

struct SimulateReport {
  ModelParams params;
  double i0 = 0.0;
  double t_end = 0.0;
  FeedbackPolicy defender_policy;
  std::optional<FeedbackPolicy> attacker_policy;
  Trajectory trajectory;

  friend bool operator==(const SimulateReport&, const SimulateReport&) = default;
};

struct OracleReport {
  std::string best_label;
  double best_cost = 0.0;
  double best_constant = 0.0;
  double best_constant_cost = 0.0;
  std::size_t evaluated = 0;
  double excess = 0.0;  // policy cost minus the grid's best
  bool passed = false;  // excess <= 1e-4

  friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

struct InfiniteOptReport {
  ModelParams params;
  double i0 = 0.0;
  PolicyRegime regime = PolicyRegime::no_root;
  Dominance dominance = Dominance::interior;
  RootPair roots;
  std::optional<double> singular_control;
  FeedbackPolicy policy;
  double pi_B0 = 0.0;
  Outcome outcome;
  double discounted_cost = 0.0;
  std::optional<OracleReport> oracle;

  friend bool operator==(const InfiniteOptReport&, const InfiniteOptReport&) = default;
};

struct FastOptReport {
  ModelParams params;
  double i0 = 0.0;
  double i_e = 0.0;
  CostShape shape = CostShape::linear;
  FastControlSolution solution;
  double cost = 0.0;

  friend bool operator==(const FastOptReport&, const FastOptReport&) = default;
};

struct NashReport {
  ModelParams params;
  double i0 = 0.0;
  int regime_row = 1;
  CostLevel defender_level = CostLevel::below;
  CostLevel attacker_level = CostLevel::below;
  RootPair roots_B;
  RootPair roots_R;
  std::optional<Ordering> ordering;
  FeedbackPolicy defender_policy;
  FeedbackPolicy attacker_policy;
  double pi_B0 = 0.0;
  double pi_R0 = 0.0;
  Outcome predicted_outcome;
  CostPair equilibrium_costs;
  std::string trajectory_file;  // sidecar CSV name, empty when none was written

  friend bool operator==(const NashReport&, const NashReport&) = default;
};

struct VerifyReport {
  ModelParams params;
  double i0 = 0.0;
  std::optional<double> i_e;
  CostShape shape = CostShape::linear;
  std::vector<verify::CheckResult> checks;
  bool passed = false;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

void to_json(json& j, const SimulateReport& r);
void from_json(const json& j, SimulateReport& r);
void to_json(json& j, const OracleReport& r);
void from_json(const json& j, OracleReport& r);
void to_json(json& j, const InfiniteOptReport& r);
void from_json(const json& j, InfiniteOptReport& r);
void to_json(json& j, const FastOptReport& r);
void from_json(const json& j, FastOptReport& r);
void to_json(json& j, const NashReport& r);
void from_json(const json& j, NashReport& r);
void to_json(json& j, const VerifyReport& r);
void from_json(const json& j, VerifyReport& r);

/// t, i_B, i_R, pi_B, pi_R, running_cost with 12 significant digits; pi_R is
/// blank when the attacker is non-strategic.
std::string trajectory_csv(const Trajectory& tr);

}  // namespace acd::cli
