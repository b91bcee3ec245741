#pragma once

// JSON conversions for the core value types. Every to_json has a matching
// from_json so emitted documents parse back into the same value.

#include <json.hpp>

#include "acd/dynamics.hpp"
#include "acd/fast_control.hpp"
#include "acd/game.hpp"
#include "acd/infinite_horizon.hpp"
#include "acd/model.hpp"
#include "acd/outcome.hpp"
#include "acd/policy.hpp"
#include "acd/verify.hpp"

namespace acd {

using json = nlohmann::ordered_json;

/// Raised for malformed or incomplete documents.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite number stored at key, or ConfigError.
double require_number(const json& j, const char* key);
double number_or(const json& j, const char* key, double fallback);

CostShape parse_cost_shape(const std::string& s);
PolicyRegime parse_regime(const std::string& s);
Dominance parse_dominance(const std::string& s);
RootPair::Kind parse_root_kind(const std::string& s);
Outcome::Kind parse_outcome_kind(const std::string& s);
FastCase parse_fast_case(const std::string& s);
CostLevel parse_cost_level(const std::string& s);
Ordering parse_ordering(const std::string& s);

void to_json(json& j, const ModelParams& p);
void from_json(const json& j, ModelParams& p);

void to_json(json& j, const FeedbackPolicy& policy);
void from_json(const json& j, FeedbackPolicy& policy);

void to_json(json& j, const RootPair& r);
void from_json(const json& j, RootPair& r);

void to_json(json& j, const Outcome& o);
void from_json(const json& j, Outcome& o);

void to_json(json& j, const FastControlSolution& s);
void from_json(const json& j, FastControlSolution& s);

void to_json(json& j, const CostPair& c);
void from_json(const json& j, CostPair& c);

void to_json(json& j, const Sample& s);
void from_json(const json& j, Sample& s);

namespace verify {
// Runtime is left out so that reports are reproducible byte for byte.
void to_json(json& j, const CheckResult& r);
void from_json(const json& j, CheckResult& r);
}  // namespace verify

}  // namespace acd
