// Test-only oracles kept independent of the library code they check.
#ifndef TTP_TESTS_ORACLES_HPP
#define TTP_TESTS_ORACLES_HPP

#include <functional>
#include <string>
#include <vector>

#include "ttp/instance.hpp"
#include "ttp/neighborhood.hpp"
#include "ttp/schedule.hpp"

namespace ttp::testing {

std::string fixture_path(const std::string& name);
Instance load_instance_file(const std::string& name);
Schedule load_schedule_file(const std::string& name, const Instance& inst);

/// Straight-line recomputation of one team's travel from its full
/// location sequence; written separately from the library's accounting.
long long walk_team_distance(const Schedule& s, const Instance& inst, int t);

/// Visits every 4-team double round-robin schedule exactly once.
void enumerate_n4(const std::function<void(const Schedule&)>& visit);

struct N4Summary {
  long long count = 0;
  long long best_feasible = -1;  // min distance over feasible schedules
  long long best_any = -1;
};

N4Summary summarize_n4(const Instance& inst);

bool n4_contains(const Schedule& s);

/// Two fixed team columns (teams 0 and 1 of an 8-team tournament, seven
/// home games then the seven rematches away for team 0) completed to a
/// full double round-robin by backtracking over the remaining teams.
const Schedule& chain_example_schedule();

/// Reapplies the two-round swap to more and more teams until every
/// opponent of a swapped team has also been swapped; the naive fixed
/// point the closure computation must match.
Schedule partial_swap_rounds_fixpoint(const Schedule& s, int ti, int rk,
                                      int rl);

Instance uniform_instance(int n, int d = 1);
Instance zero_instance(int n);
Instance random_metric_instance(int n, Rng& rng);

/// random_schedule followed by a warm-up of partial swaps. The plain
/// generator only permutes rounds and venues of one fixed pairing
/// structure; the warm-up moves games between rounds so tests also see
/// schedules with other pairing structures.
Schedule diversified_schedule(const Instance& inst, Rng& rng);

/// Swaplist literal with ascending dummy rounds.
SwapList make_swaplist(const std::vector<std::pair<int, Venue>>& games);

}  // namespace ttp::testing

#endif  // TTP_TESTS_ORACLES_HPP
