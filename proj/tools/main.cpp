#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ttp/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Traveling tournament schedules: solve, validate, score"};
  app.require_subcommand(1);

  ttp::RunConfig solve_cfg;
  long long solve_steps = 0;
  std::uint64_t solve_seed = 0;
  int solve_chains = 0;
  auto* solve = app.add_subcommand("solve", "Anneal a schedule for an instance");
  solve->add_option("instance", solve_cfg.instance_path, "instance file")
      ->required();
  solve->add_option("--out", solve_cfg.out_path,
                    "output schedule path (machine copy at <out>.sol)");
  auto* steps_opt = solve->add_option("--steps", solve_steps,
                                      "proposals per chain");
  auto* seed_opt = solve->add_option("--seed", solve_seed, "random seed");
  auto* chains_opt = solve->add_option("--chains", solve_chains,
                                       "parallel chain count");
  solve->add_option("--config", solve_cfg.config_path,
                    "key=value parameter file");
  solve->add_flag("--progress", solve_cfg.progress,
                  "report progress on stderr");

  std::string v_instance, v_schedule;
  auto* validate =
      app.add_subcommand("validate", "Check a schedule against an instance");
  validate->add_option("instance", v_instance, "instance file")->required();
  validate->add_option("schedule", v_schedule, "schedule file")->required();

  std::string s_instance, s_schedule;
  auto* score = app.add_subcommand("score", "Print per-team travel distances");
  score->add_option("instance", s_instance, "instance file")->required();
  score->add_option("schedule", s_schedule, "schedule file")->required();

  std::string b_dir, b_seeds = "1";
  long long b_steps = 0;
  std::string b_config;
  auto* bench =
      app.add_subcommand("bench", "Run every instance in a directory");
  bench->add_option("dir", b_dir, "directory of instance files")->required();
  bench->add_option("--seeds", b_seeds, "comma-separated seed list");
  bench->add_option("--steps", b_steps, "proposals per run");
  bench->add_option("--config", b_config, "key=value parameter file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ttp::kExitInputError;
  }

  if (solve->parsed()) {
    if (*steps_opt) solve_cfg.steps = solve_steps;
    if (*seed_opt) solve_cfg.seed = solve_seed;
    if (*chains_opt) solve_cfg.chains = solve_chains;
    return ttp::cmd_solve(solve_cfg, std::cout, std::cerr);
  }
  if (validate->parsed()) {
    return ttp::cmd_validate(v_instance, v_schedule, std::cout, std::cerr);
  }
  if (score->parsed()) {
    return ttp::cmd_score(s_instance, s_schedule, std::cout, std::cerr);
  }
  if (bench->parsed()) {
    std::vector<std::uint64_t> seeds;
    std::istringstream ss(b_seeds);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        seeds.push_back(std::stoull(part));
      } catch (const std::exception&) {
        std::cerr << "error: malformed seed '" << part << "'\n";
        return ttp::kExitInputError;
      }
    }
    return ttp::cmd_bench(b_dir, seeds, b_steps, b_config, std::cout,
                          std::cerr);
  }
  return ttp::kExitInputError;
}
