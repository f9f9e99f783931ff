#ifndef TTP_NEIGHBORHOOD_HPP
#define TTP_NEIGHBORHOOD_HPP

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "ttp/schedule.hpp"

namespace ttp {

using Rng = std::mt19937_64;

/// Flips the home/away status of the two games between ti and tj.
Schedule swap_homes(const Schedule& s, int ti, int tj);

/// Exchanges two whole rounds across all teams.
Schedule swap_rounds(const Schedule& s, int rk, int rl);

/// Exchanges the schedules of ti and tj except where they meet, updating
/// every displaced opponent. With violation_neutral set, the mutual games
/// also swap venue, which leaves the violation counts of the input
/// schedule unchanged.
Schedule swap_teams(const Schedule& s, int ti, int tj,
                    bool violation_neutral = false);

/// Exchanges rounds rk and rl for ti and for the closure of teams whose
/// games must move with it to keep the rounds consistent.
Schedule partial_swap_rounds(const Schedule& s, int ti, int rk, int rl);

/// One step of a partial team swap as seen from tj: the round visited and
/// the game tj gives up there.
struct SwapEntry {
  int round = -1;
  int opponent = -1;
  Venue venue = Venue::Home;

  friend bool operator==(const SwapEntry&, const SwapEntry&) = default;
};

/// The games of tj visited by a simulated partial team swap, in chain
/// order. The last entry is always the game ti lost in the first
/// exchange; the rounds are pairwise distinct.
struct SwapList {
  std::vector<SwapEntry> entries;

  int size() const { return static_cast<int>(entries.size()); }
  std::vector<int> rounds() const;
};

/// Walks the partial-swap chain of partial_swap_teams(ti, tj, round)
/// without modifying the schedule and returns tj's games in visit order.
/// ti and tj must not meet in the starting round.
SwapList simulate_pst(const Schedule& s, int ti, int tj, int round);

/// A way of terminating a partial team swap: optionally precondition with
/// a look-ahead opponent (skipping the games framed by its two swaplist
/// occurrences) and optionally stop early at a wrong-venue match against
/// the chain's terminal opponent, followed by a venue repair.
struct LookaheadPlan {
  std::optional<int> lookahead;         // team whose venues flip around the swap
  std::optional<int> early_exit_index;  // swaplist position of the early stop
  int gap = 0;                          // index distance of the chosen occurrences
  int predicted_swaps = 0;              // exchanges the executed chain performs
  double cost = 0.0;                    // predicted_swaps plus penalties
};

/// All candidate terminations for a swaplist: the full chain, the early
/// exit when the terminal opponent also occurs earlier with flipped
/// venue, one plan per duplicated team (widest occurrence pair), and the
/// look-ahead/early-exit combinations that remain reachable after the
/// look-ahead jump.
std::vector<LookaheadPlan> enumerate_plans(const SwapList& sl, double p_look,
                                           double p_exit);

/// Picks from candidate plans: look-ahead candidates are first narrowed
/// to the widest gap, then the cheapest plan wins overall; cost ties are
/// resolved uniformly at random.
LookaheadPlan choose_plan(const std::vector<LookaheadPlan>& plans, Rng& rng);

LookaheadPlan select_plan(const SwapList& sl, double p_look, double p_exit,
                          Rng& rng);

/// Executes the partial team swap chain seeded at (ti, tj, round). With
/// allow_early_exit the chain stops at the first wrong-venue match
/// against the lost opponent and repairs the venues of the three affected
/// teams, flipping one game of each duplicate pair at random.
Schedule partial_swap_teams(const Schedule& s, int ti, int tj, int round,
                            bool allow_early_exit, Rng& rng);

struct PlanExecution {
  Schedule schedule;
  std::vector<int> exchanged_rounds;
  bool early_exited = false;
};

/// Runs a plan: precondition swap_homes(tj, lookahead), the chain with
/// the plan's early-exit setting, the reverting swap_homes, and the
/// repair when the chain exited early.
PlanExecution execute_plan(const Schedule& s, int ti, int tj, int round,
                           const LookaheadPlan& plan, Rng& rng);

/// The full look-ahead partial team swap: simulate, plan, execute.
Schedule lpst(const Schedule& s, int ti, int tj, int round, double p_look,
              double p_exit, Rng& rng);

enum class MoveKind : int {
  SwapHomes = 0,
  SwapRounds,
  SwapTeams,
  SwapTeamsVN,
  PartialSwapRounds,
  PartialSwapTeams,
  Lpst,
};

inline constexpr int kMoveKindCount = 7;

const char* move_kind_name(MoveKind kind);

/// A sampled move instruction. Argument use per kind:
///   SwapHomes / SwapTeams / SwapTeamsVN: (a, b) = teams
///   SwapRounds: (a, b) = rounds
///   PartialSwapRounds: (a, b, c) = team, round, round
///   PartialSwapTeams / Lpst: (a, b, c) = team, team, round
struct MoveSpec {
  MoveKind kind = MoveKind::SwapHomes;
  int a = -1;
  int b = -1;
  int c = -1;
};

struct MoveWeights {
  std::array<double, kMoveKindCount> by_kind{};

  double& operator[](MoveKind k) { return by_kind[static_cast<int>(k)]; }
  double operator[](MoveKind k) const { return by_kind[static_cast<int>(k)]; }
  double sum() const;

  /// The shipped proposal distribution: 0.66 for the look-ahead swap and
  /// the remainder split equally over the five plain moves.
  static MoveWeights defaults();
};

/// Draws a move kind from the weights, then uniformly valid arguments for
/// it. Argument tuples that violate the move's precondition are
/// resampled; after a bounded number of retries the sampler falls back to
/// a home swap.
MoveSpec sample_move(const Schedule& s, const MoveWeights& weights, Rng& rng);

Schedule apply_move(const Schedule& s, const MoveSpec& spec, double p_look,
                    double p_exit, Rng& rng);

}  // namespace ttp

#endif  // TTP_NEIGHBORHOOD_HPP
