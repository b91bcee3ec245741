#include "json_io.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "acd/error.hpp"

namespace acd {

namespace {

template <class E>
E parse_enum(const std::string& s, std::initializer_list<E> all, const char* what) {
  for (E e : all) {
    if (s == to_string(e)) return e;
  }
  throw ConfigError(std::string("unknown ") + what + " '" + s + "'");
}

const json& at(const json& j, const char* key) {
  if (!j.is_object()) throw ConfigError(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw ConfigError(std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const json& j, const char* key) {
  const json& v = at(j, key);
  if (!v.is_string()) throw ConfigError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

bool require_bool(const json& j, const char* key) {
  const json& v = at(j, key);
  if (!v.is_boolean()) throw ConfigError(std::string("field '") + key + "' must be true or false");
  return v.get<bool>();
}

std::vector<double> number_array(const json& j, const char* key) {
  const json& v = at(j, key);
  if (!v.is_array()) throw ConfigError(std::string("field '") + key + "' must be an array");
  std::vector<double> out;
  for (const json& x : v) {
    if (!x.is_number() || !std::isfinite(x.get<double>())) {
      throw ConfigError(std::string("field '") + key + "' must hold finite numbers");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

double require_number(const json& j, const char* key) {
  const json& v = at(j, key);
  if (!v.is_number()) throw ConfigError(std::string("field '") + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(std::string("field '") + key + "' must be finite");
  return x;
}

double number_or(const json& j, const char* key, double fallback) {
  return j.contains(key) ? require_number(j, key) : fallback;
}

CostShape parse_cost_shape(const std::string& s) {
  return parse_enum(s, {CostShape::linear, CostShape::quadratic}, "cost shape");
}
PolicyRegime parse_regime(const std::string& s) {
  return parse_enum(s,
                    {PolicyRegime::two_roots, PolicyRegime::single_root, PolicyRegime::no_root,
                     PolicyRegime::cost_free},
                    "policy regime");
}
Dominance parse_dominance(const std::string& s) {
  return parse_enum(s,
                    {Dominance::interior, Dominance::defender_dominates, Dominance::attacker_dominates},
                    "dominance");
}
RootPair::Kind parse_root_kind(const std::string& s) {
  return parse_enum(s, {RootPair::Kind::two_roots, RootPair::Kind::single_root, RootPair::Kind::no_root},
                    "root kind");
}
Outcome::Kind parse_outcome_kind(const std::string& s) {
  return parse_enum(s,
                    {Outcome::Kind::static_state, Outcome::Kind::converges_to,
                     Outcome::Kind::collapses_to_zero, Outcome::Kind::occupies_all},
                    "outcome kind");
}
FastCase parse_fast_case(const std::string& s) {
  return parse_enum(s, {FastCase::linear_bang, FastCase::quadratic_interior, FastCase::quadratic_bang},
                    "fast-control case");
}
CostLevel parse_cost_level(const std::string& s) {
  return parse_enum(s, {CostLevel::below, CostLevel::at, CostLevel::above}, "cost level");
}
Ordering parse_ordering(const std::string& s) {
  return parse_enum(s, {Ordering::defender_outer, Ordering::attacker_outer, Ordering::coincident},
                    "ordering");
}

// ModelParams fields are all optional in input; missing ones keep their defaults.
void to_json(json& j, const ModelParams& p) {
  j = json{{"a", p.a},         {"b", p.b},     {"alpha_R", p.alpha_R},
           {"z", p.z},         {"k_B", p.k_B}, {"k_R", p.k_R},
           {"lambda", p.lambda}, {"fB_slope", p.fB_slope}, {"fR_slope", p.fR_slope}};
}

void from_json(const json& j, ModelParams& p) {
  if (!j.is_object()) throw ConfigError("'params' must be an object");
  static const char* known[] = {"a", "b", "alpha_R", "z", "k_B", "k_R", "lambda", "fB_slope", "fR_slope"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw ConfigError("unknown parameter '" + key + "'");
    }
  }
  ModelParams d;
  p.a = number_or(j, "a", d.a);
  p.b = number_or(j, "b", d.b);
  p.alpha_R = number_or(j, "alpha_R", d.alpha_R);
  p.z = number_or(j, "z", d.z);
  p.k_B = number_or(j, "k_B", d.k_B);
  p.k_R = number_or(j, "k_R", d.k_R);
  p.lambda = number_or(j, "lambda", d.lambda);
  p.fB_slope = number_or(j, "fB_slope", d.fB_slope);
  p.fR_slope = number_or(j, "fR_slope", d.fR_slope);
}

void to_json(json& j, const FeedbackPolicy& policy) {
  json points = json::array();
  for (const PointControl& pc : policy.singular_points()) {
    points.push_back({{"state", pc.state}, {"control", pc.control}});
  }
  // "regions" and "description" are derived, for plotting and reading only.
  json regions = json::array();
  const auto& bps = policy.breakpoints();
  const auto& vals = policy.values();
  for (std::size_t k = 0; k < vals.size(); ++k) {
    const double lo = k == 0 ? 0.0 : bps[k - 1];
    const double hi = k == bps.size() ? 1.0 : bps[k];
    regions.push_back({{"from", lo}, {"to", hi}, {"control", vals[k]}});
  }
  for (const PointControl& pc : policy.singular_points()) {
    regions.push_back({{"from", pc.state}, {"to", pc.state}, {"control", pc.control}});
  }
  j = json{{"breakpoints", bps},
           {"values", vals},
           {"singular_points", points},
           {"regions", regions},
           {"description", policy.describe()}};
}

void from_json(const json& j, FeedbackPolicy& policy) {
  std::vector<PointControl> points;
  if (j.contains("singular_points")) {
    const json& arr = j.at("singular_points");
    if (!arr.is_array()) throw ConfigError("'singular_points' must be an array");
    for (const json& x : arr) points.push_back({require_number(x, "state"), require_number(x, "control")});
  }
  try {
    policy = FeedbackPolicy(number_array(j, "breakpoints"), number_array(j, "values"), std::move(points));
  } catch (const Error& e) {
    throw ConfigError(std::string("invalid policy: ") + e.what());
  }
}

void to_json(json& j, const RootPair& r) {
  j = json{{"kind", to_string(r.kind)}, {"i1", r.i1}, {"i2", r.i2}};
}

void from_json(const json& j, RootPair& r) {
  r.kind = parse_root_kind(require_string(j, "kind"));
  r.i1 = require_number(j, "i1");
  r.i2 = require_number(j, "i2");
}

void to_json(json& j, const Outcome& o) {
  j = json{{"kind", to_string(o.kind)}, {"limit", o.limit}, {"tag", o.tag()}};
}

void from_json(const json& j, Outcome& o) {
  o.kind = parse_outcome_kind(require_string(j, "kind"));
  o.limit = require_number(j, "limit");
}

void to_json(json& j, const FastControlSolution& s) {
  j = json{{"control", s.control},
           {"hitting_time", s.hitting_time},
           {"case", to_string(s.case_tag)},
           {"boundary_residual", s.boundary_residual}};
}

void from_json(const json& j, FastControlSolution& s) {
  s.control = require_number(j, "control");
  s.hitting_time = require_number(j, "hitting_time");
  s.case_tag = parse_fast_case(require_string(j, "case"));
  s.boundary_residual = require_number(j, "boundary_residual");
}

void to_json(json& j, const CostPair& c) { j = json{{"defender", c.defender}, {"attacker", c.attacker}}; }

void from_json(const json& j, CostPair& c) {
  c.defender = require_number(j, "defender");
  c.attacker = require_number(j, "attacker");
}

void to_json(json& j, const Sample& s) {
  j = json{{"t", s.t},
           {"i_B", s.i_B},
           {"pi_B", s.pi_B},
           {"pi_R", s.pi_R ? json(*s.pi_R) : json(nullptr)},
           {"running_cost", s.running_cost},
           {"attacker_cost", s.attacker_cost}};
}

void from_json(const json& j, Sample& s) {
  s.t = require_number(j, "t");
  s.i_B = require_number(j, "i_B");
  s.pi_B = require_number(j, "pi_B");
  s.pi_R = at(j, "pi_R").is_null() ? std::nullopt : std::optional<double>(require_number(j, "pi_R"));
  s.running_cost = require_number(j, "running_cost");
  s.attacker_cost = require_number(j, "attacker_cost");
}

namespace verify {

void to_json(json& j, const CheckResult& r) {
  j = json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}};
}

void from_json(const json& j, CheckResult& r) {
  r = CheckResult{};
  r.id = require_string(j, "id");
  r.title = require_string(j, "title");
  r.passed = require_bool(j, "passed");
  r.detail = require_string(j, "detail");
}

}  // namespace verify

}  // namespace acd
