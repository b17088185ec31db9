#include "gpq/games.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace gpq {

std::string game_name(GameKind k) {
  switch (k) {
    case GameKind::A: return "A";
    case GameKind::B: return "B";
    case GameKind::C: return "C";
    case GameKind::D: return "D";
  }
  return "?";
}

GameKind game_by_name(const std::string& name) {
  if (name == "A" || name == "a") return GameKind::A;
  if (name == "B" || name == "b") return GameKind::B;
  if (name == "C" || name == "c") return GameKind::C;
  if (name == "D" || name == "d") return GameKind::D;
  throw std::invalid_argument("unknown game: " + name);
}

GameAdvice make_advice(const GluedTrees& g) {
  GameAdvice adv;
  adv.entrance = g.entrance_label();
  int right = 0;
  for (int s = 0; s < g.degree(adv.entrance); ++s) {
    const std::int64_t nb = g.slot(adv.entrance, s);
    adv.entrance_neighbors.push_back(nb);
    if (g.role(nb) == Role::Glued || g.role(nb) == Role::Exit) {
      if (right < 2) adv.toward_exit[static_cast<std::size_t>(right)] = nb;
      ++right;
    }
  }
  if (right != 2) throw std::logic_error("ENTRANCE does not have exactly two EXIT-side neighbors");
  return adv;
}

namespace {

GameView masked_view(GameKind kind, const GluedTrees& g, const GameAdvice& adv) {
  GameView view;
  view.kind = kind;
  view.k = g.k();
  view.label_space = g.label_space();
  switch (kind) {
    case GameKind::A:
      break;
    case GameKind::B:
    case GameKind::C:
      view.advice = adv;
      break;
    case GameKind::D:
      view.advice.entrance = adv.entrance;
      break;
  }
  return view;
}

/** Legality of `subject` given the labels already legal to name. */
class LegalityTracker {
 public:
  LegalityTracker(GameKind kind, const GluedTrees& g, const GameAdvice& adv,
                  const std::vector<std::int64_t>& extra_legal)
      : kind_(kind), g_(&g) {
    if (kind == GameKind::C)
      for (const std::int64_t lab : adv.toward_exit) named_.insert(lab);
    if (kind == GameKind::D) named_.insert(adv.entrance);
    for (const std::int64_t lab : extra_legal) named_.insert(lab);
  }

  bool legal(std::int64_t subject) const {
    if (!g_->is_member(subject)) return false;
    switch (kind_) {
      case GameKind::A:
      case GameKind::B:
        return true;
      case GameKind::C: {
        const Role r = g_->role(subject);
        const bool right_side = r == Role::Glued || r == Role::Exit;
        return right_side && named_.count(subject) > 0;
      }
      case GameKind::D:
        return named_.count(subject) > 0;
    }
    return false;
  }

  void absorb(const std::vector<std::int64_t>& response) {
    for (const std::int64_t lab : response) named_.insert(lab);
  }

 private:
  GameKind kind_;
  const GluedTrees* g_;
  std::unordered_set<std::int64_t> named_;
};

GameResult run_game(GameKind kind, const GluedTrees& g, const Strategy* strategy,
                    const std::vector<std::int64_t>* subjects, std::int64_t budget,
                    Rng* rng, const std::vector<std::int64_t>& extra_legal) {
  const GameAdvice adv = make_advice(g);
  const GameView view = masked_view(kind, g, adv);
  LegalityTracker legality(kind, g, adv, extra_legal);
  AdjOracle oracle(g, OracleMode::Full);

  GameResult res;
  for (std::int64_t step = 0; step < budget; ++step) {
    std::int64_t subject;
    if (strategy) {
      subject = (*strategy)(view, res.transcript, *rng);
    } else {
      if (static_cast<std::size_t>(step) >= subjects->size()) break;
      subject = (*subjects)[static_cast<std::size_t>(step)];
    }
    if (subject <= 0) {
      res.reason = "gave up";
      res.queries = oracle.queries();
      return res;
    }
    if (!legality.legal(subject)) {
      res.illegal = true;
      res.reason = "illegal query: " + std::to_string(subject);
      res.queries = oracle.queries();
      return res;
    }
    QueryRecord rec;
    rec.subject = subject;
    rec.response = oracle.query_all(subject);
    legality.absorb(rec.response);
    res.transcript.push_back(std::move(rec));
    if (g.role(subject) == Role::Exit) {
      res.win = true;
      res.reason = "win";
      res.queries = oracle.queries();
      return res;
    }
  }
  res.reason = "budget exhausted";
  res.queries = oracle.queries();
  return res;
}

}  // namespace

GameResult play_game(GameKind kind, const GluedTrees& g, const Strategy& strategy,
                     std::int64_t budget, Rng& rng) {
  return run_game(kind, g, &strategy, nullptr, budget, &rng, {});
}

GameResult replay_transcript(GameKind kind, const GluedTrees& g,
                             const std::vector<std::int64_t>& subjects, std::int64_t budget,
                             const std::vector<std::int64_t>& extra_legal) {
  return run_game(kind, g, nullptr, &subjects, budget, nullptr, extra_legal);
}

Strategy uniform_walk_strategy() {
  return [](const GameView& view, const Transcript& tr, Rng& rng) -> std::int64_t {
    auto restart = [&]() -> std::int64_t {
      if (view.advice.entrance != 0) return view.advice.entrance;
      return 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(view.label_space)));
    };
    if (tr.empty() || tr.back().response.empty()) return restart();
    const auto& resp = tr.back().response;
    return resp[rng.below(resp.size())];
  };
}

Strategy fresh_probe_strategy() {
  return [](const GameView& view, const Transcript& tr, Rng& rng) -> std::int64_t {
    std::unordered_set<std::int64_t> queried;
    for (const auto& rec : tr) queried.insert(rec.subject);
    std::int64_t pick;
    do {
      pick = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(view.label_space)));
    } while (queried.count(pick) > 0);
    return pick;
  };
}

Strategy right_walk_strategy() {
  return [](const GameView& view, const Transcript& tr, Rng& rng) -> std::int64_t {
    const auto& adv = view.advice;
    auto restart = [&]() { return adv.toward_exit[rng.below(2)]; };
    if (tr.empty()) return restart();
    std::vector<std::int64_t> cands;
    for (const std::int64_t lab : tr.back().response)
      if (lab != adv.entrance) cands.push_back(lab);
    if (cands.empty()) return restart();
    return cands[rng.below(cands.size())];
  };
}

namespace {

/** The adapter's fictional labelling of the left (appended) tree.
 *
 * Heap positions: 0 is ENTRANCE (committed to the real label), children of p
 * are 2p+1 and 2p+2, leaves are p >= 2^{2k}-1; positions 1 and 2 are
 * pre-committed to the two non-EXIT-side advice labels. Fresh labels are
 * drawn uniformly from the never-seen pool, matching the marginal of a
 * uniform consistent bijection.
 */
class LeftFiction {
 public:
  LeftFiction(int k, const GameAdvice& adv) {
    positions_ = (std::int64_t{1} << (2 * k + 1)) - 1;
    first_leaf_ = (std::int64_t{1} << (2 * k)) - 1;
    commit(0, adv.entrance);
    int next_pos = 1;
    for (const std::int64_t nb : adv.entrance_neighbors)
      if (nb != adv.toward_exit[0] && nb != adv.toward_exit[1]) commit(next_pos++, nb);
    if (next_pos != 3) throw std::logic_error("advice does not name two left-side neighbors");
  }

  std::int64_t positions() const { return positions_; }
  std::int64_t unexplored() const {
    return positions_ - 1 - static_cast<std::int64_t>(committed_.size() - 1);
  }
  bool knows(std::int64_t label) const { return label_to_pos_.count(label) > 0; }
  std::int64_t position_of(std::int64_t label) const { return label_to_pos_.at(label); }
  bool is_leaf(std::int64_t pos) const { return pos >= first_leaf_; }

  void commit(std::int64_t pos, std::int64_t label) {
    committed_[pos] = label;
    label_to_pos_[label] = pos;
  }
  std::int64_t label_at(std::int64_t pos) const {
    const auto it = committed_.find(pos);
    return it == committed_.end() ? 0 : it->second;
  }

  std::int64_t draw_unexplored_position(Rng& rng) const {
    std::int64_t pos;
    do {
      pos = 1 + static_cast<std::int64_t>(
                    rng.below(static_cast<std::uint64_t>(positions_ - 1)));
    } while (committed_.count(pos) > 0);
    return pos;
  }

 private:
  std::int64_t positions_ = 0;
  std::int64_t first_leaf_ = 0;
  std::unordered_map<std::int64_t, std::int64_t> committed_;  // position -> label
  std::unordered_map<std::int64_t, std::int64_t> label_to_pos_;
};

double no_collision_prob(std::int64_t u1, std::int64_t fab, std::int64_t m) {
  double p = 1;
  for (std::int64_t i = 0; i < m; ++i) {
    const double denom = static_cast<double>(u1 - i);
    if (denom <= 0) return 0;
    p *= static_cast<double>(u1 - fab - i) / denom;
  }
  return std::max(0.0, p);
}

}  // namespace

AdapterOutcome adapt_b_to_c(const GluedTrees& g, const Strategy& strategy_b,
                            std::int64_t budget, Rng& rng) {
  if (g.variant() == GluedVariant::Bare)
    throw std::invalid_argument("the adapter needs a modified instance");
  const GameAdvice adv = make_advice(g);
  const GameView view = masked_view(GameKind::B, g, adv);
  AdjOracle oracle(g, OracleMode::Full);
  const std::int64_t n = g.vertex_count();

  AdapterOutcome out;
  LeftFiction fiction(g.k(), adv);

  std::unordered_set<std::int64_t> seen;           // every label the strategy has seen
  std::unordered_set<std::int64_t> real_revealed;  // labels whose reality is pinned
  std::unordered_set<std::int64_t> fabricated;     // fiction-drawn labels (E1 collision set)
  std::unordered_set<std::int64_t> c_legal;        // right-side given-or-returned
  seen.insert(adv.entrance);
  real_revealed.insert(adv.entrance);
  for (const std::int64_t nb : adv.entrance_neighbors) {
    seen.insert(nb);
    real_revealed.insert(nb);
  }
  c_legal.insert(adv.toward_exit[0]);
  c_legal.insert(adv.toward_exit[1]);

  auto pool_size = [&]() { return n - static_cast<std::int64_t>(seen.size()); };
  auto draw_fresh_label = [&](Rng& r) {
    std::int64_t lab;
    do {
      lab = 1 + static_cast<std::int64_t>(r.below(static_cast<std::uint64_t>(n)));
    } while (seen.count(lab) > 0);
    return lab;
  };

  /** Fabricate the response at a committed fiction position, drawing fresh
   * labels for any uncommitted neighbor positions. No oracle involved. */
  auto fabricate_response = [&](std::int64_t pos) {
    std::vector<std::int64_t> resp;
    auto emit = [&](std::int64_t nb_pos) {
      std::int64_t lab = fiction.label_at(nb_pos);
      if (lab == 0) {
        lab = draw_fresh_label(rng);
        fiction.commit(nb_pos, lab);
        fabricated.insert(lab);
        seen.insert(lab);
      }
      resp.push_back(lab);
    };
    emit((pos - 1) / 2);
    if (!fiction.is_leaf(pos)) {
      emit(2 * pos + 1);
      emit(2 * pos + 2);
    }
    rng.shuffle(resp);
    return resp;
  };

  auto finish = [&](bool win, const std::string& reason) {
    out.result.win = win;
    out.result.reason = reason;
    out.result.queries = oracle.queries();
    return out;
  };

  for (std::int64_t step = 0; step < budget; ++step) {
    const std::int64_t subject = strategy_b(view, out.result.transcript, rng);
    if (subject <= 0) return finish(false, "gave up");
    ++out.steps;

    QueryRecord rec;
    rec.subject = subject;

    if (c_legal.count(subject) > 0) {
      // Action 1: C-legal, pass through to the oracle.
      ++out.action1;
      rec.response = oracle.query_all(subject);
      rec.fabricated = false;

      // A winning query ends the game before its response is inspected, so
      // it contributes neither an E1 event nor estimator mass.
      const bool exit_hit = g.role(subject) == Role::Exit;
      bool collision = false;
      if (!exit_hit) {
        std::int64_t fresh_in_resp = 0;
        for (const std::int64_t lab : rec.response)
          if (real_revealed.count(lab) == 0) ++fresh_in_resp;
        const std::int64_t u1 = n - static_cast<std::int64_t>(real_revealed.size());
        out.e1_prob_sum +=
            1.0 - no_collision_prob(u1, static_cast<std::int64_t>(fabricated.size()),
                                    fresh_in_resp);
        for (const std::int64_t lab : rec.response)
          if (fabricated.count(lab) > 0) collision = true;
      }

      for (const std::int64_t lab : rec.response) {
        seen.insert(lab);
        real_revealed.insert(lab);
        if (lab != adv.entrance &&
            (g.role(lab) == Role::Glued || g.role(lab) == Role::Exit))
          c_legal.insert(lab);
      }
      out.result.transcript.push_back(std::move(rec));
      if (exit_hit) return finish(true, "win");
      if (collision) {
        ++out.e1_events;
        return finish(false, "E1 collision");
      }
      continue;
    }

    // Action 2: fabricate; the oracle counter must not move.
    ++out.action2;
    const std::int64_t before = oracle.queries();
    rec.fabricated = true;

    if (subject == adv.entrance) {
      rec.response = adv.entrance_neighbors;
    } else if (fiction.knows(subject)) {
      rec.response = fabricate_response(fiction.position_of(subject));
    } else {
      // Fresh label: in a freshly resampled consistent labelling with
      // probability unexplored/pool, else the labelling omits it (E2).
      const std::int64_t u = fiction.unexplored();
      const std::int64_t pool = pool_size();
      const bool fresh_subject = seen.count(subject) == 0;
      if (!fresh_subject) {
        // A seen, real, non-C-legal label (pointer-side advice neighbor is
        // pre-committed; entrance handled above), so this cannot happen.
        throw std::logic_error("seen label escaped every adapter branch");
      }
      const double miss = pool > 0 ? 1.0 - static_cast<double>(u) / static_cast<double>(pool)
                                   : 1.0;
      out.e2_prob_sum += miss;
      seen.insert(subject);
      if (u <= 0 || rng.unit() < miss) {
        ++out.e2_events;
        out.action2_real_queries += oracle.queries() - before;
        out.result.transcript.push_back(std::move(rec));
        return finish(false, "E2 resample miss");
      }
      fiction.commit(fiction.draw_unexplored_position(rng), subject);
      fabricated.insert(subject);
      rec.response = fabricate_response(fiction.position_of(subject));
    }
    out.action2_real_queries += oracle.queries() - before;
    out.result.transcript.push_back(std::move(rec));
  }
  return finish(false, "budget exhausted");
}

std::vector<AdapterStats> measure_adapter(
    int k, GluedVariant variant,
    const std::vector<std::pair<std::string, Strategy>>& strategies, int trials,
    std::int64_t budget, std::uint64_t root_seed) {
  std::vector<AdapterStats> stats(strategies.size());
  for (auto& st : stats) {
    st.trials = trials;
    st.budget = budget;
  }
  for (int trial = 0; trial < trials; ++trial) {
    Rng inst_rng = derive_stream(root_seed, static_cast<std::uint64_t>(trial));
    const std::uint64_t inst_seed = inst_rng.next();
    const GluedTrees g = GluedTrees::build(k, variant, inst_seed);
    for (std::size_t si = 0; si < strategies.size(); ++si) {
      Rng srng = derive_stream(inst_seed, si + 1);
      const AdapterOutcome o = adapt_b_to_c(g, strategies[si].second, budget, srng);
      AdapterStats& st = stats[si];
      st.wins += o.result.win ? 1 : 0;
      st.e1_events += o.e1_events;
      st.e2_events += o.e2_events;
      st.e1_prob_sum += o.e1_prob_sum;
      st.e2_prob_sum += o.e2_prob_sum;
      st.steps += o.steps;
      st.action2_real_queries += o.action2_real_queries;
    }
  }
  return stats;
}

PairedReplay reduce_c_to_d(const GluedTrees& modified, const Strategy& strategy_c,
                           std::int64_t budget, Rng& rng) {
  PairedReplay pr;
  pr.c_result = play_game(GameKind::C, modified, strategy_c, budget, rng);

  std::vector<std::int64_t> subjects;
  subjects.reserve(pr.c_result.transcript.size());
  for (const auto& rec : pr.c_result.transcript) subjects.push_back(rec.subject);

  const GameAdvice adv = make_advice(modified);
  const GluedTrees bare = GluedTrees::bare_from_modified(modified);
  pr.d_result = replay_transcript(GameKind::D, bare, subjects, budget,
                                  {adv.toward_exit[0], adv.toward_exit[1]});
  pr.consistent = pr.c_result.win == pr.d_result.win &&
                  static_cast<std::int64_t>(pr.c_result.transcript.size()) ==
                      static_cast<std::int64_t>(pr.d_result.transcript.size());
  return pr;
}

}  // namespace gpq
