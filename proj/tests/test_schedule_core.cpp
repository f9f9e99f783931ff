#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "ttp/annealer.hpp"
#include "ttp/schedule.hpp"
#include "ttp/schedule_io.hpp"

using namespace ttp;
using namespace ttp::testing;

namespace {

// Pairing-consistent but wildly repetitive: the same two pairings every
// round, with per-round venue control for teams 0 and 2.
Schedule repetitive_schedule(const std::vector<Venue>& venues0,
                             const std::vector<Venue>& venues2) {
  Schedule s = Schedule::empty(4);
  for (int r = 0; r < 6; ++r) {
    if (venues0[r] == Venue::Home) {
      s.set_pair(0, 1, r);
    } else {
      s.set_pair(1, 0, r);
    }
    if (venues2[r] == Venue::Home) {
      s.set_pair(2, 3, r);
    } else {
      s.set_pair(3, 2, r);
    }
  }
  return s;
}

constexpr Venue H = Venue::Home;
constexpr Venue A = Venue::Away;

}  // namespace

TEST_CASE("reference schedule satisfies every structural check") {
  const Instance inst = load_instance_file("galaxy10.txt");
  const Schedule s = load_schedule_file("galaxy10_best.txt", inst);
  CHECK(is_pairing_consistent(s));
  CHECK(is_double_round_robin(s));
  CHECK(count_atmost_violations(s) == 0);
  CHECK(count_norepeat_violations(s) == 0);
}

TEST_CASE("a single flipped venue breaks the round-robin but not pairing") {
  const Instance inst = load_instance_file("galaxy10.txt");
  Schedule s = load_schedule_file("galaxy10_best.txt", inst);
  const int o = s.opponent(0, 0);
  s.venue(0, 0) ^= 1;
  s.venue(o, 0) ^= 1;
  CHECK(is_pairing_consistent(s));
  CHECK_FALSE(is_double_round_robin(s));
}

TEST_CASE("completed chain example is a double round-robin") {
  const Schedule& s = chain_example_schedule();
  CHECK(s.teams() == 8);
  CHECK(s.rounds() == 14);
  CHECK(is_double_round_robin(s));
  // Teams 0 and 1 meet in rounds 0 and 7, so that pair never repeats.
  for (int r = 0; r + 1 < s.rounds(); ++r) {
    CHECK_FALSE((s.opponent(0, r) == 1 && s.opponent(0, r + 1) == 1));
  }
}

TEST_CASE("home-stand run counting") {
  SUBCASE("four in a row costs one per team") {
    const Schedule s = repetitive_schedule({H, H, H, H, A, H},
                                           {H, A, H, A, H, A});
    // team 0 contributes 1, team 1 mirrors with 1, teams 2/3 alternate
    CHECK(count_atmost_violations(s) == 2);
  }
  SUBCASE("six in a row costs three per team") {
    const Schedule s = repetitive_schedule({H, H, H, H, H, H},
                                           {H, A, H, A, H, A});
    CHECK(count_atmost_violations(s) == 6);
  }
  SUBCASE("two separate runs accumulate") {
    const Schedule s = repetitive_schedule({H, H, H, H, A, A},
                                           {A, A, A, A, H, H});
    CHECK(count_atmost_violations(s) == 4);
  }
  SUBCASE("runs do not wrap from the last round to the first") {
    const Schedule s = repetitive_schedule({H, H, A, A, H, H},
                                           {H, A, H, A, H, A});
    CHECK(count_atmost_violations(s) == 0);
  }
}

TEST_CASE("repeat counting is per pair, not per team") {
  const Schedule s = repetitive_schedule({H, A, H, A, H, A},
                                         {A, H, A, H, A, H});
  // Both pairings repeat in all five adjacent round gaps.
  CHECK(count_norepeat_violations(s) == 10);

  const ViolationReport v = count_violations(s);
  CHECK(v.atmost == 0);
  CHECK(v.norepeat == 10);
  CHECK(v.total() == 10);
}

TEST_CASE("adjacent rematch counts once") {
  Rng rng(3);
  const Instance inst = random_metric_instance(6, rng);
  Schedule s = random_schedule(inst, rng);
  // force teams to rematch in rounds 3 and 4 by copying the pairings
  for (int t = 0; t < 6; ++t) {
    const Game g = s.game(t, 3);
    s.set_game(t, 4, g.opponent, opposite(g.venue));
  }
  CHECK(is_pairing_consistent(s));
  CHECK(count_norepeat_violations(s) >= 3);  // three pairings, one each
}

TEST_CASE("travel accounting matches the reference footer") {
  const Instance inst = load_instance_file("galaxy10.txt");
  const Schedule s = load_schedule_file("galaxy10_best.txt", inst);
  const long long expect[10] = {404, 416, 477, 463, 423,
                                435, 452, 500, 462, 503};
  for (int t = 0; t < 10; ++t) {
    CHECK(team_distance(s, inst, t) == expect[t]);
  }
  CHECK(total_distance(s, inst) == 4535);
}

TEST_CASE("zero matrix travels nowhere") {
  const Instance inst = zero_instance(10);
  Rng rng(17);
  const Schedule s = random_schedule(inst, rng);
  CHECK(total_distance(s, inst) == 0);
}

TEST_CASE("travel equals the independent path walk") {
  for (const int n : {4, 6, 10}) {
    Rng rng(40 + n);
    const Instance inst = random_metric_instance(n, rng);
    for (int trial = 0; trial < 100; ++trial) {
      const Schedule s = random_schedule(inst, rng);
      for (int t = 0; t < n; ++t) {
        CHECK(team_distance(s, inst, t) == walk_team_distance(s, inst, t));
      }
      CHECK(total_distance(s, inst) == team_distances(s, inst).sum());
    }
  }
}

TEST_CASE("objective blends distance and violations") {
  CHECK(objective_value(4535, 0, 4000.0) == 4535.0);
  CHECK(objective_value(0, 1, 100.0) == doctest::Approx(100.0));
  CHECK(objective_value(3, 0, 100.0) == 3.0);

  SUBCASE("monotone in the violation count") {
    for (const double w : {10.0, 400.0, 4000.0}) {
      double prev = objective_value(1234, 1, w);
      for (int v = 2; v <= 50; ++v) {
        const double cur = objective_value(1234, v, w);
        CHECK(cur >= prev);
        prev = cur;
      }
    }
  }
  SUBCASE("feasible branch ignores the weight") {
    const Instance inst = load_instance_file("galaxy10.txt");
    const Schedule s = load_schedule_file("galaxy10_best.txt", inst);
    CHECK(objective(s, inst, 1e9) == objective(s, inst, 1.0));
    CHECK(objective(s, inst, 123.0) == 4535.0);
  }
}

TEST_CASE("objective on a schedule matches the value form") {
  Rng rng(9);
  const Instance inst = random_metric_instance(6, rng);
  for (int trial = 0; trial < 20; ++trial) {
    const Schedule s = random_schedule(inst, rng);
    const double expect = objective_value(
        total_distance(s, inst), count_violations(s).total(), 777.0);
    CHECK(objective(s, inst, 777.0) == expect);
  }
}
