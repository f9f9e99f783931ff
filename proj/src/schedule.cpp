#include "ttp/schedule.hpp"

#include <cmath>

namespace ttp {

Schedule Schedule::empty(int teams) {
  Schedule s;
  const int rounds = 2 * teams - 2;
  s.opponent = Eigen::MatrixXi::Constant(teams, rounds, -1);
  s.venue.setZero(teams, rounds);
  return s;
}

bool operator==(const Schedule& a, const Schedule& b) {
  return a.opponent.rows() == b.opponent.rows() &&
         a.opponent.cols() == b.opponent.cols() &&
         (a.opponent.array() == b.opponent.array()).all() &&
         (a.venue.array() == b.venue.array()).all();
}

bool is_pairing_consistent(const Schedule& s) {
  const int n = s.teams();
  for (int t = 0; t < n; ++t) {
    for (int r = 0; r < s.rounds(); ++r) {
      const int o = s.opponent(t, r);
      if (o < 0 || o >= n || o == t) return false;
      if (s.opponent(o, r) != t) return false;
      if (s.venue_at(o, r) == s.venue_at(t, r)) return false;
    }
  }
  return true;
}

bool is_double_round_robin(const Schedule& s) {
  if (!is_pairing_consistent(s)) return false;
  const int n = s.teams();
  if (s.rounds() != 2 * n - 2) return false;
  // counts[t][o][v]: how often t hosts/visits o.
  std::vector<int> counts(static_cast<size_t>(n) * n * 2, 0);
  for (int t = 0; t < n; ++t) {
    for (int r = 0; r < s.rounds(); ++r) {
      const Game g = s.game(t, r);
      ++counts[(static_cast<size_t>(t) * n + g.opponent) * 2 +
               static_cast<int>(g.venue)];
    }
  }
  for (int t = 0; t < n; ++t) {
    for (int o = 0; o < n; ++o) {
      if (o == t) continue;
      const size_t base = (static_cast<size_t>(t) * n + o) * 2;
      if (counts[base] != 1 || counts[base + 1] != 1) return false;
    }
  }
  return true;
}

int count_atmost_violations(const Schedule& s) {
  int total = 0;
  for (int t = 0; t < s.teams(); ++t) {
    int run = 0;
    Venue prev = Venue::Home;
    for (int r = 0; r < s.rounds(); ++r) {
      const Venue v = s.venue_at(t, r);
      run = (r > 0 && v == prev) ? run + 1 : 1;
      prev = v;
      if (run > 3) ++total;  // adds L - 3 over a maximal run of length L
    }
  }
  return total;
}

int count_norepeat_violations(const Schedule& s) {
  int total = 0;
  for (int t = 0; t < s.teams(); ++t) {
    for (int r = 0; r + 1 < s.rounds(); ++r) {
      const int o = s.opponent(t, r);
      if (o > t && s.opponent(t, r + 1) == o) ++total;
    }
  }
  return total;
}

ViolationReport count_violations(const Schedule& s) {
  return ViolationReport{count_atmost_violations(s),
                         count_norepeat_violations(s)};
}

long long team_distance(const Schedule& s, const Instance& inst, int team) {
  long long dist = 0;
  int location = team;
  for (int r = 0; r < s.rounds(); ++r) {
    const Game g = s.game(team, r);
    const int next = g.venue == Venue::Away ? g.opponent : team;
    dist += inst.dist(location, next);
    location = next;
  }
  dist += inst.dist(location, team);
  return dist;
}

DistanceVector team_distances(const Schedule& s, const Instance& inst) {
  DistanceVector d(s.teams());
  for (int t = 0; t < s.teams(); ++t) d(t) = team_distance(s, inst, t);
  return d;
}

long long total_distance(const Schedule& s, const Instance& inst) {
  return team_distances(s, inst).sum();
}

double objective_value(long long distance, int violations, double weight) {
  if (violations <= 0) return static_cast<double>(distance);
  const double v = static_cast<double>(violations);
  const double f = 1.0 + std::sqrt(v) * std::log(v) / 2.0;
  const double d = static_cast<double>(distance);
  return std::sqrt(d * d + weight * f * weight * f);
}

double objective(const Schedule& s, const Instance& inst, double weight) {
  return objective_value(total_distance(s, inst), count_violations(s).total(),
                         weight);
}

}  // namespace ttp
