#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "reports.hpp"
#include "run.hpp"
#include "scenario.hpp"

using namespace acd;
using namespace acd::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int n = 0;
    path = fs::temp_directory_path() / ("acd_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(n++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name, std::ios::binary) << text;
    return (path / name).string();
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string scenario(const std::string& name) { return std::string(ACD_SCENARIO_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out, err;
};

Run invoke(Mode m, const std::string& config, std::optional<std::string> out = std::nullopt,
           std::optional<Format> f = std::nullopt) {
  std::ostringstream o, e;
  const int code = run(m, {config, std::move(out), f}, o, e);
  return {code, o.str(), e.str()};
}

// Writes into a scratch directory; the scenario files carry their own output paths.
Run invoke_file(Mode m, const std::string& config, std::optional<Format> f = std::nullopt) {
  TempDir t;
  Run r = invoke(m, config, t.file("result"), f);
  if (r.code == kExitOk || r.code == kExitVerificationFailed) r.out = slurp(t.file("result"));
  return r;
}

template <class Report>
void check_round_trip(const std::string& body) {
  const json j = json::parse(body);
  const Report r = j.get<Report>();
  const json back = r;
  CHECK(back.dump(2) + "\n" == body);
  CHECK(back.get<Report>() == r);
}

const char* kSingle = R"({"mode": "infinite-opt", "params": {"a": 1, "b": 0, "alpha_R": 0.5, "z": 0.5, "k_B": 0.25}, "i0": 0.3})";

}  // namespace

TEST_CASE("config parse errors") {
  CHECK_THROWS_AS(parse_scenario_text("{"), ConfigError);
  CHECK_THROWS_AS(parse_scenario_text(R"({"mode": "nope", "i0": 0.5})"), ConfigError);
  CHECK_THROWS_AS(parse_scenario_text(R"({"mode": "infinite-opt", "i0": 0.5, "bogus": 1})"), ConfigError);
  CHECK_THROWS_AS(parse_scenario_text(R"({"mode": "infinite-opt", "params": {"q": 1}, "i0": 0.5})"), ConfigError);
  CHECK_THROWS_AS(parse_scenario_text(R"({"mode": "infinite-opt", "params": {"z": -1}, "i0": 0.5})"), ConfigError);
  CHECK_THROWS_AS(parse_scenario_text(R"({"mode": "infinite-opt", "i0": 1.5})"), ConfigError);
  CHECK_THROWS_AS(parse_scenario_text(R"({"mode": "infinite-opt", "i0": "half"})"), ConfigError);
  CHECK_THROWS_AS(parse_scenario_text(R"({"mode": "fast-opt", "i0": 0.25})"), ConfigError);
  CHECK_THROWS_AS(parse_scenario_text(R"({"mode": "simulate", "i0": 0.25})"), ConfigError);
  CHECK_THROWS_AS(parse_scenario_text(R"({"mode": "simulate", "i0": 0.25, "pi_B": 0.5, "t_end": 1, "step": 2})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_scenario_text(R"({"mode": "simulate", "i0": 0.25, "pi_B": {"breakpoints": [0.5], "values": [1]}})"),
                  ConfigError);
}

TEST_CASE("config round trip") {
  for (const char* name : {"single_infinite_opt.json", "single_simulate.json", "fast_quadratic.json", "fast_linear.json",
                           "game_nash.json", "game_verify.json", "row9_verify.json"}) {
    CAPTURE(name);
    const ScenarioConfig c = parse_scenario_text(slurp(scenario(name)));
    const ScenarioConfig again = parse_scenario(to_json(c));
    CHECK(again == c);
  }
  const ScenarioConfig c = parse_scenario_text(
      R"({"mode": "simulate", "params": {}, "i0": 0.25, "pi_B": {"breakpoints": [0.4], "values": [0, 1], "singular_points": [{"state": 0.4, "control": 0.5}]}, "pi_R": {"breakpoints": [], "values": [0.5]}})");
  CHECK(parse_scenario(to_json(c)) == c);
}

TEST_CASE("exit status on bad config writes nothing") {
  TempDir t;
  const std::string cfg = t.write("bad.json", R"({"mode": "infinite-opt", "i0": 0.3, "oops": true})");
  const Run r = invoke(Mode::infinite_opt, cfg, t.file("out.json"));
  CHECK(r.code == kExitConfigError);
  CHECK_FALSE(fs::exists(t.file("out.json")));
  CHECK(r.err.find("oops") != std::string::npos);

  CHECK(invoke(Mode::infinite_opt, t.file("missing.json")).code == kExitConfigError);
  CHECK(invoke(Mode::nash, t.write("m.json", kSingle)).code == kExitConfigError);
}

TEST_CASE("exit status on precondition violation") {
  TempDir t;
  const std::string cfg = t.write(
      "u.json", R"({"mode": "fast-opt", "params": {"a": 0.5, "b": 0, "alpha_R": 0.6}, "i0": 0.25, "i_e": 0.75})");
  const Run r = invoke(Mode::fast_opt, cfg, t.file("out.json"));
  CHECK(r.code == kExitPrecondition);
  CHECK_FALSE(fs::exists(t.file("out.json")));
  CHECK(r.err.find("unreachable") != std::string::npos);
}

TEST_CASE("exit status on unwritable output") {
  TempDir t;
  CHECK(invoke(Mode::infinite_opt, t.write("c.json", kSingle), t.file("no/such/dir/out.json")).code == kExitIoError);
}

// The reference game does not survive every constant deviation; verify flags it.
TEST_CASE("verify reports failures with its own exit status") {
  const Run r = invoke_file(Mode::verify, scenario("game_verify.json"));
  CHECK(r.code == kExitVerificationFailed);
  const VerifyReport rep = json::parse(r.out).get<VerifyReport>();
  CHECK_FALSE(rep.passed);
  CHECK(rep.checks.size() >= 8);
}

TEST_CASE("verify passes when every check holds") {
  const Run r = invoke(Mode::verify, scenario("row9_verify.json"));
  CHECK(r.code == kExitOk);
  CHECK(json::parse(r.out).at("passed").get<bool>());
}

TEST_CASE("infinite-opt reference policy") {
  const Run r = invoke_file(Mode::infinite_opt, scenario("single_infinite_opt.json"));
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j.at("roots").at("i1").get<double>() == doctest::Approx((1.0 - std::sqrt(0.5)) / 2.0));
  CHECK(j.at("roots").at("i2").get<double>() == doctest::Approx((1.0 + std::sqrt(0.5)) / 2.0));
  CHECK(j.at("singular_control").get<double>() == doctest::Approx(0.5));
  CHECK(j.at("policy").at("regions").size() == 5);
  CHECK(j.at("pi_B0").get<double>() == 1.0);
  CHECK(j.at("oracle").at("passed").get<bool>());
  check_round_trip<InfiniteOptReport>(r.out);

  const Run csv = invoke_file(Mode::infinite_opt, scenario("single_infinite_opt.json"), Format::csv);
  CHECK(csv.out.rfind("from,to,control\n", 0) == 0);
}

TEST_CASE("fast-opt reference solution") {
  const Run r = invoke_file(Mode::fast_opt, scenario("fast_quadratic.json"), Format::json);
  REQUIRE(r.code == kExitOk);
  const FastOptReport rep = json::parse(r.out).get<FastOptReport>();
  CHECK(std::abs(rep.solution.control - 0.809017) <= 1e-6);
  CHECK(rep.solution.case_tag == FastCase::quadratic_interior);
  check_round_trip<FastOptReport>(r.out);

  const Run csv = invoke_file(Mode::fast_opt, scenario("fast_linear.json"), Format::csv);
  CHECK(csv.out.rfind("control,hitting_time,case,boundary_residual,cost\n1,4.39444915467,linear-bang,", 0) == 0);
}

TEST_CASE("simulate output") {
  TempDir t;
  const std::string cfg = t.write(
      "s.json", R"({"mode": "simulate", "params": {"a": 1, "b": 0, "alpha_R": 0.5}, "i0": 0.3, "pi_B": 1, "t_end": 1, "step": 0.25})");
  const Run r = invoke(Mode::simulate, cfg);
  REQUIRE(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  CHECK(header == "t,i_B,i_R,pi_B,pi_R,running_cost");
  CHECK(first.rfind("0,0.3,0.7,1,,", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);

  const Run j = invoke(Mode::simulate, cfg, std::nullopt, Format::json);
  REQUIRE(j.code == kExitOk);
  check_round_trip<SimulateReport>(j.out);
}

TEST_CASE("nash writes the trajectory sidecar") {
  TempDir t;
  const Run r = invoke(Mode::nash, scenario("game_nash.json"), t.file("n.json"));
  REQUIRE(r.code == kExitOk);
  const std::string body = slurp(t.file("n.json"));
  const NashReport rep = json::parse(body).get<NashReport>();
  CHECK(rep.trajectory_file == "n.trajectory.csv");
  CHECK(rep.regime_row == 1);
  CHECK(rep.pi_B0 == 1.0);
  const std::string side = slurp(t.file("n.trajectory.csv"));
  CHECK(side.rfind("t,i_B,i_R,pi_B,pi_R,running_cost\n", 0) == 0);
  check_round_trip<NashReport>(body);

  // Without an output path the report goes to stdout and no sidecar is named.
  json cfg = json::parse(slurp(scenario("game_nash.json")));
  cfg.erase("output");
  const Run s = invoke(Mode::nash, t.write("plain.json", cfg.dump()));
  REQUIRE(s.code == kExitOk);
  CHECK(json::parse(s.out).at("trajectory_file") == "");
}

TEST_CASE("outputs are byte-identical across runs") {
  for (auto [m, name] : {std::pair{Mode::infinite_opt, "single_infinite_opt.json"},
                         std::pair{Mode::simulate, "single_simulate.json"}, std::pair{Mode::nash, "game_nash.json"},
                         std::pair{Mode::fast_opt, "fast_quadratic.json"}}) {
    CAPTURE(name);
    const Run a = invoke_file(m, scenario(name)), b = invoke_file(m, scenario(name));
    CHECK_FALSE(a.out.empty());
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify report round trip") {
  const Run r = invoke_file(Mode::verify, scenario("game_verify.json"));
  check_round_trip<VerifyReport>(r.out);
}
