#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "semicross/builtins.hpp"
#include "semicross/run.hpp"

namespace {

using namespace semicross;

std::string load_scenario_text(const std::string& arg, std::string& name) {
  std::ifstream in(arg);
  if (in) {
    name = arg;
    const auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  const auto& builtins = builtin_scenarios();
  auto it = builtins.find(arg);
  if (it == builtins.end())
    throw Error(ErrorKind::UnresolvedReference,
                "no such file or builtin scenario: " + arg);
  name = arg;
  return it->second;
}

void apply_overrides(Scenario& sc, const CLI::App& cmd, double tol, int bound,
                     std::uint64_t seed, const std::string& mode) {
  if (cmd.count("--tol")) sc.config.tol = tol;
  if (cmd.count("--bound")) sc.config.closure_bound = bound;
  if (cmd.count("--seed")) sc.config.seed = seed;
  if (cmd.count("--mode"))
    sc.config.mode =
        mode == "lax" ? ValidationMode::Lax : ValidationMode::Strict;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Precondition, "cannot write " + path);
  out << content;
}

int fuzz_exit(const FuzzOutcome& outcome, const std::string& family) {
  std::printf("fuzz %s: %d instances, %d checks, max residual %.3e\n",
              family.c_str(), outcome.instances, outcome.checks,
              outcome.max_residual);
  for (const auto& f : outcome.failures)
    std::printf("  [FAIL] %s\n", f.c_str());
  std::printf("%s\n", outcome.failures.empty() ? "ALL PASS"
                                               : "FAILURES PRESENT");
  return outcome.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Finite-scale crossed products by partial actions and inverse "
      "semigroup actions"};
  app.require_subcommand(1);

  double tol = 1e-9;
  int bound = 512;
  std::uint64_t seed = 42;
  std::string mode = "strict";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol, "comparison tolerance");
    cmd->add_option("--bound", bound, "closure size bound");
    cmd->add_option("--seed", seed, "root random seed");
    cmd->add_option("--mode", mode, "strict|lax validation mode")
        ->check(CLI::IsMember({"strict", "lax"}));
  };

  std::string scenario_arg, report_path, machine_path;
  auto* run_cmd = app.add_subcommand("run", "run a scenario file or builtin");
  run_cmd->add_option("scenario", scenario_arg, "path or builtin name")
      ->required();
  add_common(run_cmd);
  run_cmd->add_option("--report", report_path, "write the text report here");
  run_cmd->add_option("--machine-report", machine_path,
                      "write the JSON report here");

  std::string family;
  int count = 100;
  auto* fuzz_cmd =
      app.add_subcommand("fuzz", "run a randomized invariant suite");
  fuzz_cmd->add_option("family", family, "section2|section3|l-algebra")
      ->required()
      ->check(CLI::IsMember({"section2", "section3", "l-algebra"}));
  fuzz_cmd->add_option("--count", count, "number of random instances");
  add_common(fuzz_cmd);

  auto* builtins_cmd =
      app.add_subcommand("builtins", "list the bundled scenarios");

  CLI11_PARSE(app, argc, argv);

  try {
    if (builtins_cmd->parsed()) {
      for (const auto& [name, text] : builtin_scenarios())
        std::printf("%s\n", name.c_str());
      return 0;
    }

    if (run_cmd->parsed()) {
      std::string name;
      const std::string text = load_scenario_text(scenario_arg, name);
      Scenario sc = parse_scenario(text);
      apply_overrides(sc, *run_cmd, tol, bound, seed, mode);
      RunReport report = run_scenario(sc, name);
      std::fputs(report.to_text().c_str(), stdout);
      if (!report_path.empty()) write_file(report_path, report.to_text());
      if (!machine_path.empty()) write_file(machine_path, report.to_json());
      return report.exit_code();
    }

    if (fuzz_cmd->parsed()) {
      if (count < 1) {
        std::fprintf(stderr, "error: count must be >= 1\n");
        return 2;
      }
      Config cfg;
      cfg.tol = tol;
      cfg.closure_bound = bound;
      cfg.seed = seed;
      cfg.mode = mode == "lax" ? ValidationMode::Lax : ValidationMode::Strict;
      if (family == "section2")
        return fuzz_exit(fuzz_section2(count, cfg.seed, cfg), family);
      if (family == "section3")
        return fuzz_exit(fuzz_section3(count, cfg.seed, cfg), family);
      // l-algebra runs over the pair action of the bundled shift scenario.
      Scenario sc = parse_scenario(builtin_scenarios().at("example_6_3"));
      const auto& cv = sc.covreps.at("cv").partial();
      auto pair = pair_semigroup_action(cv, cfg);
      auto cov = pair.covrep(cv.rep, ValidationMode::Strict);
      return fuzz_exit(fuzz_l_algebra(cov, count, cfg.seed, cfg), family);
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
