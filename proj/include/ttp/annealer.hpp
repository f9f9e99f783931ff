#ifndef TTP_ANNEALER_HPP
#define TTP_ANNEALER_HPP

#include <cstdint>
#include <functional>

#include "ttp/neighborhood.hpp"
#include "ttp/schedule.hpp"

namespace ttp {

/// Search configuration. Non-positive t0, beta or w select instance-scaled
/// defaults when the run starts.
struct AnnealParams {
  double t0 = -1.0;    // initial temperature; auto: n * mean distance
  double beta = -1.0;  // geometric decay per proposal; auto: temperature
                       // spans four orders of magnitude over the budget
  long long steps = 200000;  // proposals per chain
  double w = -1.0;           // violation weight; auto: 4000 * mean distance
  MoveWeights weights = MoveWeights::defaults();
  double p_look = 2.0;  // plan penalty for the preconditioning home swap
  double p_exit = 3.0;  // plan penalty for the early-exit repair
  std::uint64_t seed = 1;
  int chains = 1;
  long long progress_stride = 0;  // 0 disables the progress callback
};

struct MoveStats {
  long long proposed = 0;
  long long accepted = 0;
};

struct AnnealResult {
  Schedule best;
  long long best_distance = 0;
  bool best_feasible = false;
  long long proposals = 0;
  long long acceptances = 0;
  bool budget_exhausted = false;  // the step budget ran out (no other stop rule)
  std::array<MoveStats, kMoveKindCount> by_kind{};
};

/// Observer sample emitted every progress_stride proposals. best_distance
/// is the chain's best feasible distance so far, or -1 before the first
/// feasible incumbent. Chains run independently, so callbacks from
/// different chains may interleave.
struct ProgressSample {
  int chain = 0;
  long long step = 0;
  double temperature = 0.0;
  double current_cost = 0.0;
  long long best_distance = -1;
};

using ProgressFn = std::function<void(const ProgressSample&)>;

/// A double round-robin schedule that is usually infeasible: circle-method
/// single round robin under a random team permutation, mirrored with
/// flipped venues, then shuffled by a burst of round and home swaps.
Schedule random_schedule(const Instance& inst, Rng& rng);

/// Metropolis rule: always accept improvements, otherwise accept with
/// probability exp(-delta / temperature).
bool accept(double delta, double temperature, Rng& rng);

/// Runs `chains` independent annealing chains with distinct sub-seeds and
/// reduces them to the best feasible schedule seen (best by objective when
/// no chain found a feasible one). Deterministic for a fixed (params,
/// seed); with chains == 1 the run is reproducible bit for bit.
AnnealResult run_anneal(const Instance& inst, const AnnealParams& params,
                        const ProgressFn& progress = {});

}  // namespace ttp

#endif  // TTP_ANNEALER_HPP
