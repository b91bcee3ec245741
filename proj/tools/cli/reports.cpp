#include "reports.hpp"

#include <cstdio>

namespace acd::cli {

namespace {

template <class T>
std::optional<T> optional_field(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string string_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw ConfigError(std::string("missing string field '") + key + "'");
  }
  return j.at(key).get<std::string>();
}

bool bool_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_boolean()) {
    throw ConfigError(std::string("missing boolean field '") + key + "'");
  }
  return j.at(key).get<bool>();
}

}  // namespace

void to_json(json& j, const SimulateReport& r) {
  j = json{{"mode", "simulate"},
           {"params", r.params},
           {"i0", r.i0},
           {"t_end", r.t_end},
           {"step", r.trajectory.step},
           {"defender_policy", r.defender_policy},
           {"attacker_policy", optional_json(r.attacker_policy)},
           {"samples", r.trajectory.samples}};
}

void from_json(const json& j, SimulateReport& r) {
  r.params = j.at("params").get<ModelParams>();
  r.i0 = require_number(j, "i0");
  r.t_end = require_number(j, "t_end");
  r.defender_policy = j.at("defender_policy").get<FeedbackPolicy>();
  r.attacker_policy = optional_field<FeedbackPolicy>(j, "attacker_policy");
  r.trajectory.step = require_number(j, "step");
  r.trajectory.samples = j.at("samples").get<std::vector<Sample>>();
}

void to_json(json& j, const OracleReport& r) {
  j = json{{"best_label", r.best_label},
           {"best_cost", r.best_cost},
           {"best_constant", r.best_constant},
           {"best_constant_cost", r.best_constant_cost},
           {"evaluated", r.evaluated},
           {"excess", r.excess},
           {"passed", r.passed}};
}

void from_json(const json& j, OracleReport& r) {
  r.best_label = string_field(j, "best_label");
  r.best_cost = require_number(j, "best_cost");
  r.best_constant = require_number(j, "best_constant");
  r.best_constant_cost = require_number(j, "best_constant_cost");
  r.evaluated = j.at("evaluated").get<std::size_t>();
  r.excess = require_number(j, "excess");
  r.passed = bool_field(j, "passed");
}

void to_json(json& j, const InfiniteOptReport& r) {
  j = json{{"mode", "infinite-opt"},
           {"params", r.params},
           {"i0", r.i0},
           {"regime", to_string(r.regime)},
           {"dominance", to_string(r.dominance)},
           {"roots", r.roots},
           {"singular_control", optional_json(r.singular_control)},
           {"policy", r.policy},
           {"pi_B0", r.pi_B0},
           {"outcome", r.outcome},
           {"discounted_cost", r.discounted_cost},
           {"oracle", optional_json(r.oracle)}};
}

void from_json(const json& j, InfiniteOptReport& r) {
  r.params = j.at("params").get<ModelParams>();
  r.i0 = require_number(j, "i0");
  r.regime = parse_regime(string_field(j, "regime"));
  r.dominance = parse_dominance(string_field(j, "dominance"));
  r.roots = j.at("roots").get<RootPair>();
  r.singular_control = optional_field<double>(j, "singular_control");
  r.policy = j.at("policy").get<FeedbackPolicy>();
  r.pi_B0 = require_number(j, "pi_B0");
  r.outcome = j.at("outcome").get<Outcome>();
  r.discounted_cost = require_number(j, "discounted_cost");
  r.oracle = optional_field<OracleReport>(j, "oracle");
}

void to_json(json& j, const FastOptReport& r) {
  j = json{{"mode", "fast-opt"},
           {"params", r.params},
           {"i0", r.i0},
           {"i_e", r.i_e},
           {"cost_shape", to_string(r.shape)},
           {"solution", r.solution},
           {"cost", r.cost}};
}

void from_json(const json& j, FastOptReport& r) {
  r.params = j.at("params").get<ModelParams>();
  r.i0 = require_number(j, "i0");
  r.i_e = require_number(j, "i_e");
  r.shape = parse_cost_shape(string_field(j, "cost_shape"));
  r.solution = j.at("solution").get<FastControlSolution>();
  r.cost = require_number(j, "cost");
}

void to_json(json& j, const NashReport& r) {
  j = json{{"mode", "nash"},
           {"params", r.params},
           {"i0", r.i0},
           {"regime_row", r.regime_row},
           {"defender_level", to_string(r.defender_level)},
           {"attacker_level", to_string(r.attacker_level)},
           {"roots_B", r.roots_B},
           {"roots_R", r.roots_R},
           {"ordering", r.ordering ? json(to_string(*r.ordering)) : json(nullptr)},
           {"defender_policy", r.defender_policy},
           {"attacker_policy", r.attacker_policy},
           {"pi_B0", r.pi_B0},
           {"pi_R0", r.pi_R0},
           {"predicted_outcome", r.predicted_outcome},
           {"equilibrium_costs", r.equilibrium_costs},
           {"trajectory_file", r.trajectory_file}};
}

void from_json(const json& j, NashReport& r) {
  r.params = j.at("params").get<ModelParams>();
  r.i0 = require_number(j, "i0");
  r.regime_row = j.at("regime_row").get<int>();
  r.defender_level = parse_cost_level(string_field(j, "defender_level"));
  r.attacker_level = parse_cost_level(string_field(j, "attacker_level"));
  r.roots_B = j.at("roots_B").get<RootPair>();
  r.roots_R = j.at("roots_R").get<RootPair>();
  const auto ord = optional_field<std::string>(j, "ordering");
  r.ordering = ord ? std::optional<Ordering>(parse_ordering(*ord)) : std::nullopt;
  r.defender_policy = j.at("defender_policy").get<FeedbackPolicy>();
  r.attacker_policy = j.at("attacker_policy").get<FeedbackPolicy>();
  r.pi_B0 = require_number(j, "pi_B0");
  r.pi_R0 = require_number(j, "pi_R0");
  r.predicted_outcome = j.at("predicted_outcome").get<Outcome>();
  r.equilibrium_costs = j.at("equilibrium_costs").get<CostPair>();
  r.trajectory_file = string_field(j, "trajectory_file");
}

void to_json(json& j, const VerifyReport& r) {
  j = json{{"mode", "verify"},
           {"params", r.params},
           {"i0", r.i0},
           {"i_e", optional_json(r.i_e)},
           {"cost_shape", to_string(r.shape)},
           {"checks", r.checks},
           {"passed", r.passed}};
}

void from_json(const json& j, VerifyReport& r) {
  r.params = j.at("params").get<ModelParams>();
  r.i0 = require_number(j, "i0");
  r.i_e = optional_field<double>(j, "i_e");
  r.shape = parse_cost_shape(string_field(j, "cost_shape"));
  r.checks = j.at("checks").get<std::vector<verify::CheckResult>>();
  r.passed = bool_field(j, "passed");
}

std::string trajectory_csv(const Trajectory& tr) {
  std::string out = "t,i_B,i_R,pi_B,pi_R,running_cost\n";
  char buf[256];
  for (const Sample& s : tr.samples) {
    char pr[40] = "";
    if (s.pi_R) std::snprintf(pr, sizeof pr, "%.12g", *s.pi_R);
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%s,%.12g\n", s.t, s.i_B, 1.0 - s.i_B, s.pi_B,
                  pr, s.running_cost);
    out += buf;
  }
  return out;
}

}  // namespace acd::cli
