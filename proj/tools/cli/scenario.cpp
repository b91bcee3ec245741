#include "scenario.hpp"

#include <algorithm>
#include <set>

#include "acd/error.hpp"

namespace acd::cli {

const char* to_string(Mode m) {
  switch (m) {
    case Mode::simulate: return "simulate";
    case Mode::infinite_opt: return "infinite-opt";
    case Mode::fast_opt: return "fast-opt";
    case Mode::nash: return "nash";
    case Mode::verify: return "verify";
  }
  return "unknown";
}

const char* to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

Mode parse_mode(const std::string& s) {
  for (Mode m : {Mode::simulate, Mode::infinite_opt, Mode::fast_opt, Mode::nash, Mode::verify}) {
    if (s == to_string(m)) return m;
  }
  throw ConfigError("unknown mode '" + s + "'");
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw ConfigError("unknown output format '" + s + "' (expected csv or json)");
}

namespace {

std::set<std::string> allowed_keys(Mode m) {
  std::set<std::string> keys{"mode", "params", "i0", "t_end", "step", "output"};
  switch (m) {
    case Mode::simulate: keys.insert({"pi_B", "pi_R"}); break;
    case Mode::infinite_opt: keys.insert("oracle"); break;
    case Mode::fast_opt: keys.insert({"i_e", "cost_shape"}); break;
    case Mode::nash: break;
    case Mode::verify: keys.insert({"i_e", "cost_shape", "include_acceptance"}); break;
  }
  return keys;
}

double fraction(const json& j, const char* key) {
  const double x = require_number(j, key);
  if (x < 0.0 || x > 1.0) throw ConfigError(std::string("'") + key + "' must lie in [0, 1]");
  return x;
}

bool flag(const json& j, const char* key) {
  if (!j.contains(key)) return false;
  if (!j.at(key).is_boolean()) throw ConfigError(std::string("'") + key + "' must be true or false");
  return j.at(key).get<bool>();
}

FeedbackPolicy control_rule(const json& v, const char* key) {
  if (v.is_number()) {
    const double u = v.get<double>();
    if (!(u >= 0.0 && u <= 1.0)) throw ConfigError(std::string("'") + key + "' must lie in [0, 1]");
    return FeedbackPolicy::constant(u);
  }
  if (v.is_object()) return v.get<FeedbackPolicy>();
  throw ConfigError(std::string("'") + key + "' must be a number in [0, 1] or a policy object");
}

}  // namespace

ScenarioConfig parse_scenario(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  if (!j.contains("mode") || !j.at("mode").is_string()) throw ConfigError("missing string field 'mode'");

  ScenarioConfig c;
  c.mode = parse_mode(j.at("mode").get<std::string>());
  const std::set<std::string> allowed = allowed_keys(c.mode);
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) {
      throw ConfigError("field '" + key + "' is not valid in mode " + to_string(c.mode));
    }
  }

  if (!j.contains("params")) throw ConfigError("missing field 'params'");
  c.params = j.at("params").get<ModelParams>();
  try {
    c.params.validate();
  } catch (const Error& e) {
    throw ConfigError(std::string("invalid params: ") + e.what());
  }

  c.i0 = fraction(j, "i0");
  c.t_end = number_or(j, "t_end", c.t_end);
  c.step = number_or(j, "step", c.step);
  if (!(c.t_end > 0.0)) throw ConfigError("'t_end' must be positive");
  if (!(c.step > 0.0 && c.step <= c.t_end)) throw ConfigError("'step' must be positive and at most t_end");

  if (j.contains("i_e")) c.i_e = fraction(j, "i_e");
  if (c.mode == Mode::fast_opt && !c.i_e) throw ConfigError("fast-opt needs 'i_e'");
  if (j.contains("cost_shape")) {
    if (!j.at("cost_shape").is_string()) throw ConfigError("'cost_shape' must be a string");
    c.cost_shape = parse_cost_shape(j.at("cost_shape").get<std::string>());
  }

  if (c.mode == Mode::simulate) {
    if (!j.contains("pi_B")) throw ConfigError("simulate needs 'pi_B'");
    const json& v = j.at("pi_B");
    if (v.is_string()) {
      if (v.get<std::string>() != "optimal") throw ConfigError("'pi_B' string must be \"optimal\"");
      c.pi_B.optimal = true;
    } else {
      c.pi_B.policy = control_rule(v, "pi_B");
    }
    if (j.contains("pi_R")) c.pi_R = control_rule(j.at("pi_R"), "pi_R");
  }
  c.oracle = flag(j, "oracle");
  c.include_acceptance = flag(j, "include_acceptance");

  if (j.contains("output")) {
    const json& o = j.at("output");
    if (!o.is_object()) throw ConfigError("'output' must be an object");
    for (const auto& [key, value] : o.items()) {
      if (key != "path" && key != "format") throw ConfigError("unknown output field '" + key + "'");
    }
    if (o.contains("path")) {
      if (!o.at("path").is_string()) throw ConfigError("'output.path' must be a string");
      c.output_path = o.at("path").get<std::string>();
    }
    if (o.contains("format")) {
      if (!o.at("format").is_string()) throw ConfigError("'output.format' must be a string");
      c.output_format = parse_format(o.at("format").get<std::string>());
    }
  }
  return c;
}

ScenarioConfig parse_scenario_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  return parse_scenario(j);
}

json to_json(const ScenarioConfig& c) {
  json j{{"mode", to_string(c.mode)}, {"params", c.params}, {"i0", c.i0}};
  if (c.i_e) j["i_e"] = *c.i_e;
  if (c.mode == Mode::fast_opt || c.mode == Mode::verify) j["cost_shape"] = to_string(c.cost_shape);
  j["t_end"] = c.t_end;
  j["step"] = c.step;
  if (c.mode == Mode::simulate) {
    j["pi_B"] = c.pi_B.optimal ? json("optimal") : json(c.pi_B.policy);
    if (c.pi_R) j["pi_R"] = *c.pi_R;
  }
  if (c.mode == Mode::infinite_opt) j["oracle"] = c.oracle;
  if (c.mode == Mode::verify) j["include_acceptance"] = c.include_acceptance;
  if (c.output_path || c.output_format) {
    json o = json::object();
    if (c.output_path) o["path"] = *c.output_path;
    if (c.output_format) o["format"] = to_string(*c.output_format);
    j["output"] = o;
  }
  return j;
}

}  // namespace acd::cli
