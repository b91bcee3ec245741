#pragma once

// Scenario configuration: one JSON document with a "mode" discriminator.

#include <optional>
#include <string>

#include "json_io.hpp"

namespace acd::cli {

enum class Mode { simulate, infinite_opt, fast_opt, nash, verify };
enum class Format { csv, json };

const char* to_string(Mode m);
const char* to_string(Format f);
Mode parse_mode(const std::string& s);
Format parse_format(const std::string& s);

/// Defender control for simulate mode: a fixed rule, or the infinite-horizon optimum.
struct ControlSpec {
  bool optimal = false;
  FeedbackPolicy policy;

  friend bool operator==(const ControlSpec&, const ControlSpec&) = default;
};

struct ScenarioConfig {
  Mode mode = Mode::simulate;
  ModelParams params;
  double i0 = 0.5;
  std::optional<double> i_e;
  CostShape cost_shape = CostShape::linear;
  double t_end = 50.0;
  double step = kDefaultStep;

  ControlSpec pi_B;                   // simulate
  std::optional<FeedbackPolicy> pi_R; // simulate; empty = non-strategic attacker
  bool oracle = false;                // infinite-opt
  bool include_acceptance = false;    // verify

  std::optional<std::string> output_path;
  std::optional<Format> output_format;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Throws ConfigError on unknown keys, missing mode-specific fields,
/// non-finite numbers or parameters outside the model's domain.
ScenarioConfig parse_scenario(const json& j);
ScenarioConfig parse_scenario_text(const std::string& text);

json to_json(const ScenarioConfig& c);

}  // namespace acd::cli
