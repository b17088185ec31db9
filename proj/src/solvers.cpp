#include "gpq/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace gpq {

namespace {

/** Budget-gated list reads with client-side caching: a cached list costs
 * nothing (the algorithm remembers responses); a fresh read goes through the
 * oracle at full price and is permitted only while the counter is below the
 * cap. Returns nullptr once the cap is reached. */
class CachedReader {
 public:
  CachedReader(AdjOracle& o, std::int64_t cap) : o_(o), cap_(cap) {}

  const std::vector<std::int64_t>* read(std::int64_t label) {
    auto it = cache_.find(label);
    if (it != cache_.end()) return &it->second;
    if (o_.queries() >= cap_) return nullptr;
    auto [ins, fresh] = cache_.emplace(label, o_.read_list(label));
    (void)fresh;
    return &ins->second;
  }

 private:
  AdjOracle& o_;
  std::int64_t cap_;
  std::unordered_map<std::int64_t, std::vector<std::int64_t>> cache_;
};

bool is_exit_degree(std::size_t deg) { return deg == 2 || deg == 5; }

}  // namespace

Stage1Result stage1_find_entrance(AdjOracle& o, Rng& rng, std::int64_t budget) {
  const GluedTrees& g = o.instance();
  if (g.variant() == GluedVariant::Bare)
    throw std::invalid_argument("stage 1 requires a modified instance");
  const int k = g.k();
  if (budget <= 0) budget = 500LL * k * k;

  Stage1Result st;
  st.budget = budget;
  const std::int64_t entry = o.queries();
  const std::int64_t n = g.vertex_count();
  CachedReader lists(o, budget);

  auto note_witness = [&](std::int64_t label, std::size_t deg) {
    if (st.witness_label == 0 && is_exit_degree(deg)) {
      st.witness_label = label;
      st.witness_degree = static_cast<int>(deg);
    }
  };
  auto out_of_budget = [&]() {
    st.failure = "query budget exhausted";
    st.queries = o.queries() - entry;
    return st;
  };

  std::int64_t entrance = 0;
  std::int64_t arrived_from = 0;

  while (entrance == 0) {
    const std::int64_t probe = 1 + static_cast<std::int64_t>(rng.below(
                                       static_cast<std::uint64_t>(n)));
    const auto* pl = lists.read(probe);
    if (!pl) return out_of_budget();
    ++st.probes;
    note_witness(probe, pl->size());
    if (pl->size() == 4) {
      entrance = probe;
      break;
    }
    if (pl->size() != 1) continue;

    // Climb from the leaf; path is always the simple tree path from the
    // original leaf, so a leaf hit after T steps has its turning point at
    // exactly T/2 (all appended-tree leaves sit at depth 2k).
    std::vector<std::int64_t> path{probe};
    while (true) {
      const std::int64_t cur = path.back();
      const auto* cl = lists.read(cur);
      if (!cl) return out_of_budget();
      const std::size_t deg = cl->size();
      note_witness(cur, deg);
      if (deg == 4) {
        entrance = cur;
        arrived_from = path.size() >= 2 ? path[path.size() - 2] : 0;
        break;
      }
      if (is_exit_degree(deg) || deg == 0) break;  // marker probe: abandon, re-probe
      if (deg == 1) {
        if (path.size() == 1) {
          path.push_back((*cl)[0]);
          continue;
        }
        const std::size_t turn = (path.size() - 1) / 2;
        const auto* al = lists.read(path[turn]);
        if (!al) return out_of_budget();
        std::int64_t third = 0;
        for (const std::int64_t nb : *al)
          if (nb != path[turn - 1] && nb != path[turn + 1]) third = nb;
        if (third == 0) {
          st.failure = "climb lost its turning point";
          st.queries = o.queries() - entry;
          return st;
        }
        path.resize(turn + 1);
        path.push_back(third);
        continue;
      }
      // Internal vertex: step away from the previous one, uniformly.
      const std::int64_t prev = path[path.size() - 2];
      std::int64_t fwd[2];
      int f = 0;
      for (const std::int64_t nb : *cl)
        if (nb != prev && f < 2) fwd[f++] = nb;
      if (f == 0) break;
      path.push_back(fwd[f == 1 ? 0 : rng.below_int(2)]);
    }
  }

  // Eliminate directions that reach a leaf within 2k steps (the pointer
  // side); the glued side cannot reach degree 1 that fast.
  const auto* el = lists.read(entrance);
  if (!el) return out_of_budget();
  std::vector<std::int64_t> toward;
  for (const std::int64_t dir : *el) {
    if (dir == arrived_from) continue;
    bool eliminated = false;
    std::int64_t prev = entrance, cur = dir;
    for (int step = 1; step <= 2 * k; ++step) {
      const auto* cl = lists.read(cur);
      if (!cl) return out_of_budget();
      const std::size_t deg = cl->size();
      note_witness(cur, deg);
      if (deg == 1) {
        eliminated = true;
        break;
      }
      if (deg != 3 || step == 2 * k) break;
      std::int64_t fwd[2];
      int f = 0;
      for (const std::int64_t nb : *cl)
        if (nb != prev && f < 2) fwd[f++] = nb;
      prev = cur;
      cur = fwd[f == 1 ? 0 : rng.below_int(2)];
    }
    if (!eliminated) toward.push_back(dir);
  }
  st.queries = o.queries() - entry;
  if (toward.size() != 2) {
    st.failure = "direction elimination was not unique";
    return st;
  }
  st.found = true;
  st.entrance = entrance;
  st.toward_exit = {toward[0], toward[1]};
  return st;
}

SolveReport decide_p5(AdjOracle& o, const DecideConfig& cfg, Rng& rng) {
  const GluedTrees& g = o.instance();
  if (g.variant() == GluedVariant::Bare)
    throw std::invalid_argument("decide_p5 requires a modified instance");
  const int k = g.k();

  SolveReport rep;
  rep.budget = cfg.budget > 0 ? cfg.budget : 500LL * k * k;
  const std::int64_t entry = o.queries();

  auto settle = [&](std::int64_t label, int deg) {
    rep.witnessed = true;
    rep.witness_label = label;
    rep.decision = deg == 5 ? 1 : 0;
  };

  const Stage1Result st = stage1_find_entrance(o, rng, rep.budget);
  rep.stage1_queries = st.queries;

  if (st.witness_label != 0) {
    settle(st.witness_label, st.witness_degree);
  } else if (!st.found) {
    rep.abstained = true;
  } else {
    const ReducedWalk reduced(k);
    const WalkTimeChoice choice = choose_walk_time(reduced);
    rep.walk_time = choice.t;
    const std::int64_t charge = static_cast<std::int64_t>(std::ceil(choice.t));

    std::vector<double> profile;
    SparseAdjacency marked;
    if (cfg.include_marker_edges) {
      marked = glued_subgraph(g, true);
      profile = ctqw_evolve(marked, choice.t, marked.index_of(st.entrance));
    } else {
      profile = reduced.column_profile(choice.t);
    }

    CachedReader lists(o, rep.budget);
    auto sample_vertex = [&]() -> std::int64_t {
      double u = rng.unit();
      std::size_t idx = profile.size() - 1;
      for (std::size_t i = 0; i < profile.size(); ++i) {
        u -= profile[i];
        if (u < 0) {
          idx = i;
          break;
        }
      }
      if (cfg.include_marker_edges) return marked.vertex_label[idx];
      const auto& members = g.column_members(static_cast<int>(idx));
      return members[rng.below(members.size())];
    };

    for (int attempt = 1; attempt <= cfg.max_attempts && !rep.witnessed; ++attempt) {
      if (o.queries() + charge > rep.budget) break;
      o.charge(charge);
      rep.walk_charges += charge;
      rep.attempts = attempt;

      const std::int64_t sample = sample_vertex();
      const auto* sl = lists.read(sample);
      if (!sl) break;
      if (is_exit_degree(sl->size())) {
        settle(sample, static_cast<int>(sl->size()));
        break;
      }
      for (const std::int64_t nb : *sl) {
        const auto* nl = lists.read(nb);
        if (!nl) break;
        if (is_exit_degree(nl->size())) {
          settle(nb, static_cast<int>(nl->size()));
          break;
        }
      }
    }
    if (!rep.witnessed) rep.abstained = true;
  }

  rep.total_queries = o.queries() - entry;
  rep.verify_queries = rep.total_queries - rep.stage1_queries - rep.walk_charges;
  rep.success = !rep.abstained &&
                rep.decision == (g.variant() == GluedVariant::B ? 1 : 0);
  return rep;
}

ClassicalStrategy classical_strategy_by_name(const std::string& name) {
  if (name == "random-walk") return ClassicalStrategy::RandomWalk;
  if (name == "probe-bfs") return ClassicalStrategy::ProbeBfs;
  throw std::invalid_argument("unknown classical strategy: " + name);
}

std::string classical_strategy_name(ClassicalStrategy s) {
  return s == ClassicalStrategy::RandomWalk ? "random-walk" : "probe-bfs";
}

ClassicalReport classical_random_walk(AdjOracle& o, std::int64_t budget, Rng& rng) {
  const GluedTrees& g = o.instance();
  ClassicalReport rep;
  rep.budget = budget;
  const std::int64_t entry = o.queries();

  auto draw = [&]() {
    std::int64_t v;
    do {
      v = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(g.label_space())));
    } while (!g.is_member(v));
    return v;
  };
  std::int64_t cur = draw();
  while (o.queries() - entry < budget) {
    const auto list = o.read_list(cur);
    if (is_exit_degree(list.size())) {
      rep.found = true;
      break;
    }
    if (list.empty()) {
      cur = draw();
      continue;
    }
    cur = list[rng.below(list.size())];
  }
  rep.queries = o.queries() - entry;
  return rep;
}

ClassicalReport classical_probe_bfs(AdjOracle& o, std::int64_t budget, std::int64_t start) {
  const GluedTrees& g = o.instance();
  const std::int64_t space = g.label_space();
  if (!g.is_member(start)) throw std::out_of_range("start label out of range");

  ClassicalReport rep;
  rep.budget = budget;
  const std::int64_t entry = o.queries();

  std::vector<char> seen(static_cast<std::size_t>(space) + 1, 0);
  std::vector<std::int64_t> queue;
  std::size_t head = 0;
  auto enqueue = [&](std::int64_t label) {
    if (!seen[static_cast<std::size_t>(label)]) {
      seen[static_cast<std::size_t>(label)] = 1;
      queue.push_back(label);
    }
  };
  enqueue(start);
  std::int64_t next_probe = 1;

  while (o.queries() - entry < budget) {
    if (head == queue.size()) {
      while (next_probe <= space &&
             (seen[static_cast<std::size_t>(next_probe)] || !g.is_member(next_probe)))
        ++next_probe;
      if (next_probe > space) break;
      enqueue(next_probe);
    }
    const std::int64_t label = queue[head++];
    const auto list = o.read_list(label);
    if (is_exit_degree(list.size())) {
      rep.found = true;
      break;
    }
    for (const std::int64_t nb : list) enqueue(nb);
  }
  rep.queries = o.queries() - entry;
  return rep;
}

ClassicalReport classical_baseline(AdjOracle& o, ClassicalStrategy strategy,
                                   std::int64_t budget, Rng& rng) {
  if (strategy == ClassicalStrategy::RandomWalk)
    return classical_random_walk(o, budget, rng);
  const GluedTrees& g = o.instance();
  std::int64_t start;
  do {
    start = 1 + static_cast<std::int64_t>(
                    rng.below(static_cast<std::uint64_t>(g.label_space())));
  } while (!g.is_member(start));
  return classical_probe_bfs(o, budget, start);
}

double probe_bfs_success_exact(const GluedTrees& g, std::int64_t budget) {
  std::int64_t wins = 0;
  std::int64_t starts = 0;
  for (std::int64_t s = 1; s <= g.label_space(); ++s) {
    if (!g.is_member(s)) continue;
    ++starts;
    AdjOracle o(g, OracleMode::Slot);
    if (classical_probe_bfs(o, budget, s).found) ++wins;
  }
  return static_cast<double>(wins) / static_cast<double>(starts);
}

std::int64_t walk_queries_to_exit(const GluedTrees& g, std::int64_t cap, Rng& rng) {
  AdjOracle o(g, OracleMode::Slot);
  const ClassicalReport rep = classical_random_walk(o, cap, rng);
  return rep.found ? rep.queries : cap;
}

}  // namespace gpq
