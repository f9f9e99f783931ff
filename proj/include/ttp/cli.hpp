#ifndef TTP_CLI_HPP
#define TTP_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ttp/annealer.hpp"

namespace ttp {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNoFeasible = 2;
inline constexpr int kExitInvalid = 3;

/// Options for the solve subcommand. Flags override the config file,
/// which overrides the AnnealParams defaults.
struct RunConfig {
  std::string instance_path;
  std::string out_path;     // empty: derived from the instance file name
  std::string config_path;  // empty: no config file
  std::optional<long long> steps;
  std::optional<std::uint64_t> seed;
  std::optional<int> chains;
  bool progress = false;
};

/// Applies a flat key=value config file (fields of AnnealParams; the
/// weights key takes 7 comma-separated values in MoveKind order).
void apply_config_file(AnnealParams& params, const std::string& path);

AnnealParams resolve_params(const RunConfig& cfg);

/// Anneals an instance, writes the best schedule in the tabular format to
/// the output path and in the machine format to the same path + ".sol",
/// and prints "distance=<d> feasible=<bool> proposals=<k>".
int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Prints "drr=<bool> atmost=<k> norepeat=<k>"; exit 0 only for a feasible
/// double round-robin.
int cmd_validate(const std::string& instance_path,
                 const std::string& schedule_path, std::ostream& out,
                 std::ostream& err);

/// Prints the per-team travel distances and "total=<d>".
int cmd_score(const std::string& instance_path,
              const std::string& schedule_path, std::ostream& out,
              std::ostream& err);

/// Runs every instance file in a directory against every seed and prints
/// one record per line: <file> <seed> <distance> <feasible> <seconds>.
int cmd_bench(const std::string& dir, const std::vector<std::uint64_t>& seeds,
              long long steps, const std::string& config_path,
              std::ostream& out, std::ostream& err);

}  // namespace ttp

#endif  // TTP_CLI_HPP
