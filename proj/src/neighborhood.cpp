#include "ttp/neighborhood.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace ttp {

namespace {

void require_team(const Schedule& s, int t, const char* role) {
  if (t < 0 || t >= s.teams()) {
    throw std::invalid_argument(std::string(role) + " " + std::to_string(t) +
                                " out of range");
  }
}

void require_round(const Schedule& s, int r) {
  if (r < 0 || r >= s.rounds()) {
    throw std::invalid_argument("round " + std::to_string(r) +
                                " out of range");
  }
}

void require_distinct_teams(const Schedule& s, int ti, int tj) {
  require_team(s, ti, "team");
  require_team(s, tj, "team");
  if (ti == tj) {
    throw std::invalid_argument("teams must be distinct, got " +
                                std::to_string(ti) + " twice");
  }
}

void require_distinct_rounds(const Schedule& s, int rk, int rl) {
  require_round(s, rk);
  require_round(s, rl);
  if (rk == rl) {
    throw std::invalid_argument("rounds must be distinct, got " +
                                std::to_string(rk) + " twice");
  }
}

void require_chain_seed(const Schedule& s, int ti, int tj, int round) {
  require_distinct_teams(s, ti, tj);
  require_round(s, round);
  if (s.opponent(ti, round) == tj) {
    throw std::invalid_argument(
        "teams meet each other in round " + std::to_string(round) +
        "; their mutual game cannot seed a partial team swap");
  }
}

// Flips home/away for every meeting of a and b, on both rows.
void flip_meetings(Schedule& s, int a, int b) {
  for (int r = 0; r < s.rounds(); ++r) {
    if (s.opponent(a, r) == b) {
      s.venue(a, r) ^= 1;
      s.venue(b, r) ^= 1;
    }
  }
}

// Swaps the round-r games of a and b and rewires the two displaced
// opponents to point at their new counterpart. Venues of the displaced
// opponents are untouched. Neither a nor b may be playing the other.
void exchange_round_games(Schedule& s, int a, int b, int r) {
  const Game ga = s.game(a, r);
  const Game gb = s.game(b, r);
  assert(ga.opponent != b && gb.opponent != a);
  s.set_game(a, r, gb.opponent, gb.venue);
  s.set_game(b, r, ga.opponent, ga.venue);
  s.opponent(ga.opponent, r) = b;
  s.opponent(gb.opponent, r) = a;
}

int find_round_with_game(const Schedule& s, int team, const Game& g,
                         int exclude_round) {
  for (int r = 0; r < s.rounds(); ++r) {
    if (r != exclude_round && s.game(team, r) == g) return r;
  }
  return -1;
}

[[noreturn]] void chain_corrupted() {
  throw std::logic_error(
      "partial team swap chain exceeded the round count; the schedule is "
      "not a double round-robin");
}

struct ChainResult {
  std::vector<int> rounds;
  Game lost;
  bool exited = false;
};

// The executing counterpart of simulate_pst. Each step hands tj's game in
// the current round to ti; the duplicate this creates in ti's row decides
// the next round. The chain ends when ti regains the game it lost in the
// first exchange, or (when allowed) exits once the lost opponent comes
// back with the wrong venue.
ChainResult run_chain(Schedule& s, int ti, int tj, int round,
                      bool allow_early_exit) {
  ChainResult res;
  res.lost = s.game(ti, round);
  int cur = round;
  for (int iter = 0; iter <= s.rounds(); ++iter) {
    const Game received = s.game(tj, cur);
    exchange_round_games(s, ti, tj, cur);
    res.rounds.push_back(cur);
    if (received == res.lost) return res;
    if (allow_early_exit && received.opponent == res.lost.opponent) {
      res.exited = true;
      return res;
    }
    cur = find_round_with_game(s, ti, received, cur);
    if (cur < 0) chain_corrupted();
  }
  chain_corrupted();
}

// After an early exit ti holds two same-venue games against the lost
// opponent and tj holds the two complementary ones. Flipping one game of
// each pair (mirrored in the opponent's row) restores the double
// round-robin.
void repair_early_exit(Schedule& s, int ti, int tj, const Game& lost,
                       Rng& rng) {
  const int tx = lost.opponent;
  auto flip_one_of = [&](int team, Venue duplicated) {
    int choices[2];
    int found = 0;
    for (int r = 0; r < s.rounds() && found < 2; ++r) {
      if (s.opponent(team, r) == tx && s.venue_at(team, r) == duplicated) {
        choices[found++] = r;
      }
    }
    if (found != 2) chain_corrupted();
    const int pick = choices[std::uniform_int_distribution<int>(0, 1)(rng)];
    s.venue(team, pick) ^= 1;
    s.venue(tx, pick) ^= 1;
  };
  flip_one_of(ti, opposite(lost.venue));
  flip_one_of(tj, lost.venue);
}

}  // namespace

Schedule swap_homes(const Schedule& s, int ti, int tj) {
  require_distinct_teams(s, ti, tj);
  Schedule out = s;
  flip_meetings(out, ti, tj);
  return out;
}

Schedule swap_rounds(const Schedule& s, int rk, int rl) {
  require_distinct_rounds(s, rk, rl);
  Schedule out = s;
  out.opponent.col(rk).swap(out.opponent.col(rl));
  out.venue.col(rk).swap(out.venue.col(rl));
  return out;
}

Schedule swap_teams(const Schedule& s, int ti, int tj, bool violation_neutral) {
  require_distinct_teams(s, ti, tj);
  Schedule out = s;
  for (int r = 0; r < s.rounds(); ++r) {
    if (out.opponent(ti, r) == tj) continue;  // mutual games stay put
    exchange_round_games(out, ti, tj, r);
  }
  // Swapping the mutual venues as well hands each team the other's exact
  // home/away pattern, so the violation counts carry over unchanged.
  if (violation_neutral) flip_meetings(out, ti, tj);
  return out;
}

Schedule partial_swap_rounds(const Schedule& s, int ti, int rk, int rl) {
  require_team(s, ti, "team");
  require_distinct_rounds(s, rk, rl);

  // Closure of teams whose games in rk/rl must move together.
  std::vector<char> in_closure(s.teams(), 0);
  std::vector<int> stack{ti};
  in_closure[ti] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const int r : {rk, rl}) {
      const int o = s.opponent(x, r);
      if (!in_closure[o]) {
        in_closure[o] = 1;
        stack.push_back(o);
      }
    }
  }

  Schedule out = s;
  for (int t = 0; t < s.teams(); ++t) {
    if (!in_closure[t]) continue;
    const Game a = out.game(t, rk);
    const Game b = out.game(t, rl);
    out.set_game(t, rk, b.opponent, b.venue);
    out.set_game(t, rl, a.opponent, a.venue);
  }
  return out;
}

std::vector<int> SwapList::rounds() const {
  std::vector<int> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.round);
  return out;
}

SwapList simulate_pst(const Schedule& s, int ti, int tj, int round) {
  require_chain_seed(s, ti, tj, round);

  // The walk only reads rounds it has not visited yet, so the original
  // grid doubles as the chain state and nothing needs to be copied.
  SwapList sl;
  const Game lost = s.game(ti, round);
  int cur = round;
  for (int iter = 0; iter <= s.rounds(); ++iter) {
    const Game received = s.game(tj, cur);
    sl.entries.push_back(SwapEntry{cur, received.opponent, received.venue});
    if (received == lost) return sl;
    cur = find_round_with_game(s, ti, received, cur);
    if (cur < 0) chain_corrupted();
  }
  chain_corrupted();
}

std::vector<LookaheadPlan> enumerate_plans(const SwapList& sl, double p_look,
                                           double p_exit) {
  const int len = sl.size();
  std::vector<LookaheadPlan> plans;
  if (len == 0) return plans;

  plans.push_back(LookaheadPlan{std::nullopt, std::nullopt, 0, len,
                                static_cast<double>(len)});

  // The terminal entry is the game lost in the first exchange; an earlier
  // wrong-venue match against the same opponent is the early-exit stop.
  const SwapEntry& terminal = sl.entries.back();
  std::optional<int> exit_index;
  for (int i = 0; i < len - 1; ++i) {
    if (sl.entries[i].opponent == terminal.opponent &&
        sl.entries[i].venue != terminal.venue) {
      exit_index = i;
      break;
    }
  }
  if (exit_index) {
    plans.push_back(LookaheadPlan{std::nullopt, exit_index, 0, *exit_index + 1,
                                  *exit_index + 1 + p_exit});
  }

  for (int first = 0; first < len; ++first) {
    const int team = sl.entries[first].opponent;
    bool already_seen = false;
    for (int k = 0; k < first; ++k) {
      if (sl.entries[k].opponent == team) already_seen = true;
    }
    if (already_seen) continue;
    int last = first;
    for (int k = first + 1; k < len; ++k) {
      if (sl.entries[k].opponent == team) last = k;
    }
    if (last == first) continue;  // occurs once: not a look-ahead candidate

    const int gap = last - first;
    assert(gap >= 2);
    const int predicted = len - gap;
    plans.push_back(LookaheadPlan{team, std::nullopt, gap, predicted,
                                  predicted + p_look});
    // The early exit survives the look-ahead jump only when it lies after
    // the skipped span.
    if (exit_index && *exit_index > last) {
      const int combined = *exit_index + 1 - gap;
      plans.push_back(LookaheadPlan{team, exit_index, gap, combined,
                                    combined + p_look + p_exit});
    }
  }
  return plans;
}

LookaheadPlan choose_plan(const std::vector<LookaheadPlan>& plans, Rng& rng) {
  if (plans.empty()) {
    throw std::invalid_argument("cannot choose from an empty plan set");
  }

  int widest = 0;
  for (const auto& p : plans) {
    if (p.lookahead) widest = std::max(widest, p.gap);
  }

  // Look-ahead plans compete only at the widest gap; plain plans always
  // stay in as the fallback path.
  double best_cost = 0.0;
  bool have_best = false;
  std::vector<const LookaheadPlan*> ties;
  for (const auto& p : plans) {
    if (p.lookahead && p.gap != widest) continue;
    if (!have_best || p.cost < best_cost - 1e-9) {
      best_cost = p.cost;
      have_best = true;
      ties.assign(1, &p);
    } else if (std::abs(p.cost - best_cost) <= 1e-9) {
      ties.push_back(&p);
    }
  }
  if (ties.size() == 1) return *ties.front();
  const int pick = std::uniform_int_distribution<int>(
      0, static_cast<int>(ties.size()) - 1)(rng);
  return *ties[pick];
}

LookaheadPlan select_plan(const SwapList& sl, double p_look, double p_exit,
                          Rng& rng) {
  return choose_plan(enumerate_plans(sl, p_look, p_exit), rng);
}

Schedule partial_swap_teams(const Schedule& s, int ti, int tj, int round,
                            bool allow_early_exit, Rng& rng) {
  require_chain_seed(s, ti, tj, round);
  Schedule out = s;
  const ChainResult res = run_chain(out, ti, tj, round, allow_early_exit);
  if (res.exited) repair_early_exit(out, ti, tj, res.lost, rng);
  return out;
}

PlanExecution execute_plan(const Schedule& s, int ti, int tj, int round,
                           const LookaheadPlan& plan, Rng& rng) {
  require_chain_seed(s, ti, tj, round);
  if (plan.lookahead) {
    require_distinct_teams(s, tj, *plan.lookahead);
    if (*plan.lookahead == ti) {
      throw std::invalid_argument(
          "the seeding team cannot be the look-ahead opponent");
    }
  }

  PlanExecution ex;
  ex.schedule = s;
  if (plan.lookahead) flip_meetings(ex.schedule, tj, *plan.lookahead);
  ChainResult res = run_chain(ex.schedule, ti, tj, round,
                              plan.early_exit_index.has_value());
  if (plan.lookahead) flip_meetings(ex.schedule, tj, *plan.lookahead);
  if (res.exited) repair_early_exit(ex.schedule, ti, tj, res.lost, rng);
  ex.exchanged_rounds = std::move(res.rounds);
  ex.early_exited = res.exited;
  return ex;
}

Schedule lpst(const Schedule& s, int ti, int tj, int round, double p_look,
              double p_exit, Rng& rng) {
  const SwapList sl = simulate_pst(s, ti, tj, round);
  const LookaheadPlan plan = select_plan(sl, p_look, p_exit, rng);
  return execute_plan(s, ti, tj, round, plan, rng).schedule;
}

const char* move_kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::SwapHomes: return "swap_homes";
    case MoveKind::SwapRounds: return "swap_rounds";
    case MoveKind::SwapTeams: return "swap_teams";
    case MoveKind::SwapTeamsVN: return "swap_teams_vn";
    case MoveKind::PartialSwapRounds: return "partial_swap_rounds";
    case MoveKind::PartialSwapTeams: return "partial_swap_teams";
    case MoveKind::Lpst: return "lpst";
  }
  return "unknown";
}

double MoveWeights::sum() const {
  double s = 0.0;
  for (const double w : by_kind) s += w;
  return s;
}

MoveWeights MoveWeights::defaults() {
  MoveWeights w;
  w[MoveKind::Lpst] = 0.66;
  for (const MoveKind k :
       {MoveKind::SwapHomes, MoveKind::SwapRounds, MoveKind::SwapTeams,
        MoveKind::PartialSwapRounds, MoveKind::PartialSwapTeams}) {
    w[k] = 0.068;
  }
  return w;
}

namespace {

// Distinct uniform pair from [0, n).
std::pair<int, int> sample_pair(int n, Rng& rng) {
  const int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
  int b = std::uniform_int_distribution<int>(0, n - 2)(rng);
  if (b >= a) ++b;
  return {a, b};
}

}  // namespace

MoveSpec sample_move(const Schedule& s, const MoveWeights& weights, Rng& rng) {
  if (std::abs(weights.sum() - 1.0) > 1e-6) {
    throw std::invalid_argument("move weights must sum to 1");
  }
  const int n = s.teams();
  const int rounds = s.rounds();

  std::discrete_distribution<int> kind_dist(weights.by_kind.begin(),
                                            weights.by_kind.end());
  const MoveKind kind = static_cast<MoveKind>(kind_dist(rng));

  switch (kind) {
    case MoveKind::SwapHomes:
    case MoveKind::SwapTeams:
    case MoveKind::SwapTeamsVN: {
      const auto [a, b] = sample_pair(n, rng);
      return MoveSpec{kind, a, b, -1};
    }
    case MoveKind::SwapRounds: {
      const auto [a, b] = sample_pair(rounds, rng);
      return MoveSpec{kind, a, b, -1};
    }
    case MoveKind::PartialSwapRounds: {
      const int t = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const auto [a, b] = sample_pair(rounds, rng);
      return MoveSpec{kind, t, a, b};
    }
    case MoveKind::PartialSwapTeams:
    case MoveKind::Lpst:
      break;
  }

  // The swap chain cannot start in a round where the two teams meet;
  // resample those, then give up on the kind rather than loop forever.
  for (int attempt = 0; attempt < 16; ++attempt) {
    const auto [ti, tj] = sample_pair(n, rng);
    const int r = std::uniform_int_distribution<int>(0, rounds - 1)(rng);
    if (s.opponent(ti, r) != tj) return MoveSpec{kind, ti, tj, r};
  }
  const auto [a, b] = sample_pair(n, rng);
  return MoveSpec{MoveKind::SwapHomes, a, b, -1};
}

Schedule apply_move(const Schedule& s, const MoveSpec& spec, double p_look,
                    double p_exit, Rng& rng) {
  switch (spec.kind) {
    case MoveKind::SwapHomes:
      return swap_homes(s, spec.a, spec.b);
    case MoveKind::SwapRounds:
      return swap_rounds(s, spec.a, spec.b);
    case MoveKind::SwapTeams:
      return swap_teams(s, spec.a, spec.b, false);
    case MoveKind::SwapTeamsVN:
      return swap_teams(s, spec.a, spec.b, true);
    case MoveKind::PartialSwapRounds:
      return partial_swap_rounds(s, spec.a, spec.b, spec.c);
    case MoveKind::PartialSwapTeams:
      return partial_swap_teams(s, spec.a, spec.b, spec.c, false, rng);
    case MoveKind::Lpst:
      return lpst(s, spec.a, spec.b, spec.c, p_look, p_exit, rng);
  }
  throw std::invalid_argument("unknown move kind");
}

}  // namespace ttp
