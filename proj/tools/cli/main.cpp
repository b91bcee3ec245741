#include <iostream>

#include <CLI11.hpp>

#include "run.hpp"

int main(int argc, char** argv) {
  using namespace acd::cli;
  CLI::App app{"Optimal active cyber defense: solvers, simulators and verification"};
  app.require_subcommand(1);

  struct Sub {
    Mode mode;
    const char* help;
    CLI::App* app = nullptr;
    std::string config, out, format;
  };
  std::vector<Sub> subs{
      {Mode::simulate, "integrate the state equation under given feedback controls"},
      {Mode::infinite_opt, "optimal infinite-horizon defense against a fixed attacker"},
      {Mode::fast_opt, "fastest constant control up to a target state"},
      {Mode::nash, "equilibrium strategy pair and its trajectory"},
      {Mode::verify, "property checks for a scenario"},
  };
  for (Sub& s : subs) {
    s.app = app.add_subcommand(to_string(s.mode), s.help);
    s.app->add_option("--config", s.config, "scenario JSON file")->required();
    s.app->add_option("--out", s.out, "output file (default: output.path, else stdout)");
    s.app->add_option("--format", s.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  for (const Sub& s : subs) {
    if (!s.app->parsed()) continue;
    RunOptions opts;
    opts.config_path = s.config;
    if (!s.out.empty()) opts.out = s.out;
    if (!s.format.empty()) opts.format = parse_format(s.format);
    return run(s.mode, opts, std::cout, std::cerr);
  }
  return kExitConfigError;
}
