#ifndef TTP_SCHEDULE_HPP
#define TTP_SCHEDULE_HPP

#include <cstdint>

#include <Eigen/Dense>

#include "ttp/instance.hpp"

namespace ttp {

enum class Venue : std::uint8_t { Home = 0, Away = 1 };

inline Venue opposite(Venue v) {
  return v == Venue::Home ? Venue::Away : Venue::Home;
}

/// One cell of a schedule: who a team plays and where.
struct Game {
  int opponent = -1;
  Venue venue = Venue::Home;

  friend bool operator==(const Game&, const Game&) = default;
};

/// Dense schedule grid, one row per team and one column per round.
///
/// Pairing consistency (if t lists o in round r, o lists t with the
/// opposite venue) is the only structural property assumed by the
/// evaluation functions. The double round-robin property is checked
/// separately so that broken schedules can still be loaded and diagnosed.
struct Schedule {
  Eigen::MatrixXi opponent;  // n x (2n-2)
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> venue;

  static Schedule empty(int teams);

  int teams() const { return static_cast<int>(opponent.rows()); }
  int rounds() const { return static_cast<int>(opponent.cols()); }

  Game game(int team, int round) const {
    return Game{opponent(team, round), static_cast<Venue>(venue(team, round))};
  }
  Venue venue_at(int team, int round) const {
    return static_cast<Venue>(venue(team, round));
  }
  void set_game(int team, int round, int opp, Venue v) {
    opponent(team, round) = opp;
    venue(team, round) = static_cast<std::uint8_t>(v);
  }
  /// Writes both sides of one pairing.
  void set_pair(int home, int away, int round) {
    set_game(home, round, away, Venue::Home);
    set_game(away, round, home, Venue::Away);
  }

  friend bool operator==(const Schedule& a, const Schedule& b);
};

struct ViolationReport {
  int atmost = 0;
  int norepeat = 0;

  int total() const { return atmost + norepeat; }
};

using DistanceVector = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

bool is_pairing_consistent(const Schedule& s);

/// True iff every ordered pair of distinct teams meets exactly once at
/// each venue (which forces the 2n-2 round structure).
bool is_double_round_robin(const Schedule& s);

/// Sum over teams of max(0, L - 3) for every maximal run of L consecutive
/// same-venue games. Runs do not wrap between the last and first round.
int count_atmost_violations(const Schedule& s);

/// Number of (pair, round) incidences where two teams meet in consecutive
/// rounds; each pairwise repeat counts once, not once per team.
int count_norepeat_violations(const Schedule& s);

ViolationReport count_violations(const Schedule& s);

/// Travel of one team: start at home, move between consecutive game
/// locations, and return home after the last round.
long long team_distance(const Schedule& s, const Instance& inst, int team);

DistanceVector team_distances(const Schedule& s, const Instance& inst);

long long total_distance(const Schedule& s, const Instance& inst);

/// Annealing objective on raw numbers: the plain distance when there are
/// no violations, otherwise sqrt(d^2 + (w * f(v))^2) with
/// f(v) = 1 + sqrt(v) * ln(v) / 2.
double objective_value(long long distance, int violations, double weight);

double objective(const Schedule& s, const Instance& inst, double weight);

}  // namespace ttp

#endif  // TTP_SCHEDULE_HPP
