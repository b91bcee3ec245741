#include "run.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "acd/error.hpp"
#include "reports.hpp"

namespace acd::cli {

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string regions_csv(const FeedbackPolicy& policy, const char* player) {
  std::string out;
  const json j = policy;
  for (const json& r : j.at("regions")) {
    out += std::string(player ? player : "") + (player ? "," : "") + num(r.at("from").get<double>()) + "," +
           num(r.at("to").get<double>()) + "," + num(r.at("control").get<double>()) + "\n";
  }
  return out;
}

Rendered simulate(const ScenarioConfig& c, Format f) {
  SimulateReport r;
  r.params = c.params;
  r.i0 = c.i0;
  r.t_end = c.t_end;
  r.defender_policy = c.pi_B.optimal ? optimal_policy(c.params).policy : c.pi_B.policy;
  r.attacker_policy = c.pi_R;
  r.trajectory = integrate(r.defender_policy, r.attacker_policy, c.params, c.i0, c.t_end, c.step);
  return {f == Format::csv ? trajectory_csv(r.trajectory) : dump(r), std::nullopt, false};
}

Rendered infinite_opt(const ScenarioConfig& c, Format f) {
  const InfiniteHorizonPolicy opt = optimal_policy(c.params);
  InfiniteOptReport r;
  r.params = c.params;
  r.i0 = c.i0;
  r.regime = opt.regime;
  r.dominance = opt.dominance;
  r.roots = opt.roots;
  r.singular_control = opt.singular;
  r.policy = opt.policy;
  r.pi_B0 = opt.policy(c.i0);
  r.outcome = limit_outcome(c.i0, c.params);
  DiscountOptions o;
  o.step = c.step;
  r.discounted_cost = discounted_cost(opt.policy, std::nullopt, c.params, c.i0, Player::defender, o);
  if (c.oracle) {
    const BruteForceResult bf = brute_force_best_policy(c.params, c.i0, {}, o);
    OracleReport q;
    q.best_label = bf.best.label;
    q.best_cost = bf.best_cost;
    q.best_constant = bf.best_constant;
    q.best_constant_cost = bf.best_constant_cost;
    q.evaluated = bf.evaluated;
    q.excess = r.discounted_cost - bf.best_cost;
    q.passed = q.excess <= 1e-4;
    r.oracle = q;
  }
  const bool failed = r.oracle && !r.oracle->passed;
  if (f == Format::json) return {dump(r), std::nullopt, failed};
  return {"from,to,control\n" + regions_csv(r.policy, nullptr), std::nullopt, failed};
}

Rendered fast_opt(const ScenarioConfig& c, Format f) {
  FastProblem pr;
  pr.params = c.params;
  pr.i0 = c.i0;
  pr.i_e = *c.i_e;
  pr.shape = c.cost_shape;
  FastOptReport r;
  r.params = c.params;
  r.i0 = c.i0;
  r.i_e = *c.i_e;
  r.shape = c.cost_shape;
  r.solution = solve_fast(pr);
  r.cost = constant_control_cost(r.solution.control, pr);
  if (f == Format::json) return {dump(r), std::nullopt, false};
  return {"control,hitting_time,case,boundary_residual,cost\n" + num(r.solution.control) + "," +
              num(r.solution.hitting_time) + "," + to_string(r.solution.case_tag) + "," +
              num(r.solution.boundary_residual) + "," + num(r.cost) + "\n",
          std::nullopt, false};
}

Rendered nash(const ScenarioConfig& c, Format f, const std::string& sidecar_name) {
  const NashProfile np = nash_profile(c.params, c.i0);
  NashReport r;
  r.params = c.params;
  r.i0 = c.i0;
  r.regime_row = np.regime_row;
  r.defender_level = np.defender_level;
  r.attacker_level = np.attacker_level;
  r.roots_B = np.roots_B;
  r.roots_R = np.roots_R;
  try {
    r.ordering = ordering_check(c.params);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::regime_mismatch) throw;
  }
  r.defender_policy = np.defender_policy;
  r.attacker_policy = np.attacker_policy;
  r.pi_B0 = np.pi_B0;
  r.pi_R0 = np.pi_R0;
  r.predicted_outcome = np.predicted_outcome;
  DiscountOptions o;
  o.step = c.step;
  r.equilibrium_costs = discounted_costs(np.defender_policy, np.attacker_policy, c.params, c.i0, o);
  r.trajectory_file = sidecar_name;

  Rendered out;
  if (!sidecar_name.empty()) {
    out.sidecar = trajectory_csv(integrate(np.defender_policy, np.attacker_policy, c.params, c.i0, c.t_end, c.step));
  }
  out.body = f == Format::json ? dump(r)
                               : "player,from,to,control\n" + regions_csv(r.defender_policy, "defender") +
                                     regions_csv(r.attacker_policy, "attacker");
  return out;
}

Rendered verify_mode(const ScenarioConfig& c, Format f) {
  verify::PropertyInputs in;
  in.params = c.params;
  in.i0 = c.i0;
  in.i_e = c.i_e;
  in.shape = c.cost_shape;
  in.step = c.step;
  VerifyReport r;
  r.params = c.params;
  r.i0 = c.i0;
  r.i_e = c.i_e;
  r.shape = c.cost_shape;
  r.checks = verify::run_property_suite(in);
  if (c.include_acceptance) {
    for (verify::CheckResult& a : verify::run_acceptance_suite()) r.checks.push_back(std::move(a));
  }
  // Runtimes are machine-dependent; only numerical verdicts enter the report.
  r.passed = true;
  for (verify::CheckResult& ch : r.checks) {
    ch.seconds = 0.0;
    ch.budget_seconds = 0.0;
    r.passed = r.passed && ch.passed;
  }
  if (f == Format::json) return {dump(r), std::nullopt, !r.passed};
  std::string body = "id,title,passed,detail\n";
  for (const verify::CheckResult& ch : r.checks) {
    body += ch.id + "," + csv_field(ch.title) + "," + (ch.passed ? "true" : "false") + "," +
            csv_field(ch.detail) + "\n";
  }
  return {body, std::nullopt, !r.passed};
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << content;
  return static_cast<bool>(f);
}

}  // namespace

Format default_format(Mode m) { return m == Mode::simulate ? Format::csv : Format::json; }

std::string sidecar_path(const std::string& out_path) {
  std::filesystem::path p(out_path);
  p.replace_filename(p.stem().string() + ".trajectory.csv");
  return p.string();
}

Rendered render(const ScenarioConfig& config, Format format, const std::string& sidecar_name) {
  switch (config.mode) {
    case Mode::simulate: return simulate(config, format);
    case Mode::infinite_opt: return infinite_opt(config, format);
    case Mode::fast_opt: return fast_opt(config, format);
    case Mode::nash: return nash(config, format, sidecar_name);
    case Mode::verify: return verify_mode(config, format);
  }
  return {};
}

int run(Mode subcommand, const RunOptions& opts, std::ostream& out, std::ostream& err) {
  ScenarioConfig config;
  try {
    std::ifstream in(opts.config_path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + opts.config_path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    config = parse_scenario_text(text.str());
    if (config.mode != subcommand) {
      throw ConfigError(std::string("config mode '") + to_string(config.mode) + "' does not match subcommand '" +
                        to_string(subcommand) + "'");
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const nlohmann::json::exception& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  const std::optional<std::string> path = opts.out ? opts.out : config.output_path;
  const Format format = opts.format.value_or(config.output_format.value_or(default_format(config.mode)));
  const std::string sidecar = path ? sidecar_path(*path) : std::string();
  const std::string sidecar_name =
      path && config.mode == Mode::nash ? std::filesystem::path(sidecar).filename().string() : std::string();

  Rendered result;
  try {
    result = render(config, format, sidecar_name);
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.is_precondition() ? kExitPrecondition : kExitVerificationFailed;
  }

  if (path) {
    if (!write_file(*path, result.body)) {
      err << "cannot write '" << *path << "'\n";
      return kExitIoError;
    }
    if (result.sidecar && !write_file(sidecar, *result.sidecar)) {
      err << "cannot write '" << sidecar << "'\n";
      return kExitIoError;
    }
  } else {
    out << result.body;
  }
  if (result.verification_failed) {
    err << "verification failed; see the report\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace acd::cli
