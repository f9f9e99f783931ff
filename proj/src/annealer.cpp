#include "ttp/annealer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace ttp {

Schedule random_schedule(const Instance& inst, Rng& rng) {
  const int n = inst.n;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);

  // Circle method: one team is the hub, the others rotate around it. Each
  // rotation is a round of the single round robin; the mirrored second
  // half flips every venue, which gives a double round-robin by
  // construction.
  Schedule s = Schedule::empty(n);
  const int ring = n - 1;
  for (int k = 0; k < ring; ++k) {
    const int hub = perm[ring];
    const int rim = perm[k % ring];
    if (k % 2 == 0) {
      s.set_pair(rim, hub, k);
    } else {
      s.set_pair(hub, rim, k);
    }
    for (int i = 1; i <= n / 2 - 1; ++i) {
      const int x = perm[(k + i) % ring];
      const int y = perm[(k - i + ring) % ring];
      if ((k + i) % 2 == 0) {
        s.set_pair(x, y, k);
      } else {
        s.set_pair(y, x, k);
      }
    }
  }
  for (int k = 0; k < ring; ++k) {
    for (int t = 0; t < n; ++t) {
      const Game g = s.game(t, k);
      s.set_game(t, ring + k, g.opponent, opposite(g.venue));
    }
  }

  // A burst of round and home swaps decorrelates seeds while keeping the
  // double round-robin intact.
  std::uniform_int_distribution<int> pick_round(0, s.rounds() - 1);
  std::uniform_int_distribution<int> pick_team(0, n - 1);
  for (int i = 0; i < 8 * n; ++i) {
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
      const int a = pick_round(rng);
      int b = pick_round(rng);
      if (a == b) b = (b + 1) % s.rounds();
      s = swap_rounds(s, a, b);
    } else {
      const int a = pick_team(rng);
      int b = pick_team(rng);
      if (a == b) b = (b + 1) % n;
      s = swap_homes(s, a, b);
    }
  }
  return s;
}

bool accept(double delta, double temperature, Rng& rng) {
  if (delta <= 0.0) return true;
  if (temperature <= 0.0) return false;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return u(rng) < std::exp(-delta / temperature);
}

namespace {

struct ResolvedParams {
  double t0;
  double beta;
  double w;
};

ResolvedParams resolve(const Instance& inst, const AnnealParams& p) {
  if (p.steps < 0) throw std::invalid_argument("steps must be non-negative");
  if (p.chains < 1) throw std::invalid_argument("chains must be at least 1");
  if (p.beta >= 1.0) throw std::invalid_argument("beta must be below 1");

  ResolvedParams r{};
  const double mean = std::max(1.0, inst.mean_distance());
  r.t0 = p.t0 > 0.0 ? p.t0 : mean * inst.n;
  r.w = p.w > 0.0 ? p.w : 4000.0 * mean;
  if (p.beta > 0.0) {
    r.beta = p.beta;
  } else if (p.steps > 0) {
    // Default decay covers about four orders of magnitude over the budget.
    r.beta = std::pow(1e-4, 1.0 / static_cast<double>(p.steps));
  } else {
    r.beta = 0.5;
  }
  return r;
}

struct Evaluation {
  long long distance = 0;
  int violations = 0;
  double cost = 0.0;
};

Evaluation evaluate(const Schedule& s, const Instance& inst, double w) {
  Evaluation e;
  e.distance = total_distance(s, inst);
  e.violations = count_violations(s).total();
  e.cost = objective_value(e.distance, e.violations, w);
  return e;
}

struct ChainOutcome {
  bool has_feasible = false;
  Schedule best_feasible;
  long long best_feasible_distance = 0;
  Schedule best_any;
  double best_any_cost = 0.0;
  long long proposals = 0;
  long long acceptances = 0;
  std::array<MoveStats, kMoveKindCount> by_kind{};
};

ChainOutcome run_one_chain(const Instance& inst, const AnnealParams& params,
                           const ResolvedParams& rp, int chain,
                           const ProgressFn& progress) {
  // seed_seq keeps 32 bits per word, so feed the seed in halves.
  std::seed_seq seq{static_cast<std::uint32_t>(params.seed),
                    static_cast<std::uint32_t>(params.seed >> 32),
                    static_cast<std::uint32_t>(chain)};
  Rng rng(seq);

  ChainOutcome out;
  Schedule s = random_schedule(inst, rng);
  Evaluation cur = evaluate(s, inst, rp.w);

  bool have_any = false;
  // Every evaluated schedule counts as seen, accepted or not.
  auto record = [&](const Schedule& sched, const Evaluation& e) {
    if (e.violations == 0 &&
        (!out.has_feasible || e.distance < out.best_feasible_distance)) {
      out.has_feasible = true;
      out.best_feasible = sched;
      out.best_feasible_distance = e.distance;
    }
    if (!have_any || e.cost < out.best_any_cost) {
      have_any = true;
      out.best_any = sched;
      out.best_any_cost = e.cost;
    }
  };
  record(s, cur);

  double temp = rp.t0;
  for (long long step = 0; step < params.steps; ++step) {
    const MoveSpec spec = sample_move(s, params.weights, rng);
    const int kind = static_cast<int>(spec.kind);
    Schedule cand = apply_move(s, spec, params.p_look, params.p_exit, rng);
    const Evaluation ce = evaluate(cand, inst, rp.w);

    ++out.proposals;
    ++out.by_kind[kind].proposed;
    record(cand, ce);
    if (accept(ce.cost - cur.cost, temp, rng)) {
      s = std::move(cand);
      cur = ce;
      ++out.acceptances;
      ++out.by_kind[kind].accepted;
    }
    temp *= rp.beta;

    if (progress && params.progress_stride > 0 &&
        (step + 1) % params.progress_stride == 0) {
      progress(ProgressSample{
          chain, step + 1, temp, cur.cost,
          out.has_feasible ? out.best_feasible_distance : -1});
    }
  }
  return out;
}

}  // namespace

AnnealResult run_anneal(const Instance& inst, const AnnealParams& params,
                        const ProgressFn& progress) {
  if (std::abs(params.weights.sum() - 1.0) > 1e-6) {
    throw std::invalid_argument("move weights must sum to 1");
  }
  const ResolvedParams rp = resolve(inst, params);

  std::vector<ChainOutcome> outcomes(params.chains);
  if (params.chains == 1) {
    outcomes[0] = run_one_chain(inst, params, rp, 0, progress);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(params.chains);
    for (int c = 0; c < params.chains; ++c) {
      workers.emplace_back([&, c] {
        outcomes[c] = run_one_chain(inst, params, rp, c, progress);
      });
    }
    for (auto& w : workers) w.join();
  }

  // Reduce in chain order so the result does not depend on scheduling.
  AnnealResult result;
  int best_feasible_chain = -1;
  int best_any_chain = 0;
  for (int c = 0; c < params.chains; ++c) {
    const ChainOutcome& o = outcomes[c];
    result.proposals += o.proposals;
    result.acceptances += o.acceptances;
    for (int k = 0; k < kMoveKindCount; ++k) {
      result.by_kind[k].proposed += o.by_kind[k].proposed;
      result.by_kind[k].accepted += o.by_kind[k].accepted;
    }
    if (o.has_feasible &&
        (best_feasible_chain < 0 ||
         o.best_feasible_distance <
             outcomes[best_feasible_chain].best_feasible_distance)) {
      best_feasible_chain = c;
    }
    if (o.best_any_cost < outcomes[best_any_chain].best_any_cost) {
      best_any_chain = c;
    }
  }

  if (best_feasible_chain >= 0) {
    result.best = outcomes[best_feasible_chain].best_feasible;
    result.best_feasible = true;
  } else {
    result.best = outcomes[best_any_chain].best_any;
    result.best_feasible = false;
  }
  result.best_distance = total_distance(result.best, inst);
  result.budget_exhausted = true;
  return result;
}

}  // namespace ttp
