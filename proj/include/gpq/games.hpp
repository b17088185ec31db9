#pragma once

#include "gpq/glued_trees.hpp"
#include "gpq/rng.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gpq {

/** Query games on a modified glued-trees instance, all with unit-cost
 * whole-list queries and win at the first query whose subject is EXIT.
 *
 *  A: no advice, any label may be queried.
 *  B: advice (ENTRANCE, its neighbors, which two lie toward EXIT); any label.
 *  C: same advice; only right-of-ENTRANCE labels previously given or
 *     returned may be queried.
 *  D: bare glued trees; only ENTRANCE or previously returned labels.
 */
enum class GameKind { A, B, C, D };

std::string game_name(GameKind k);
GameKind game_by_name(const std::string& name);

struct GameAdvice {
  std::int64_t entrance = 0;
  std::vector<std::int64_t> entrance_neighbors;     // instance slot order
  std::array<std::int64_t, 2> toward_exit{0, 0};    // the EXIT-side children
};

/** What a strategy is allowed to see. */
struct GameView {
  GameKind kind = GameKind::A;
  int k = 0;
  std::int64_t label_space = 0;
  GameAdvice advice;  // masked per kind: A none, D entrance only
};

struct QueryRecord {
  std::int64_t subject = 0;
  std::vector<std::int64_t> response;
  bool fabricated = false;  // answered by an adapter, not the oracle
};
using Transcript = std::vector<QueryRecord>;

/** Returns the next query subject; a value <= 0 gives up. */
using Strategy = std::function<std::int64_t(const GameView&, const Transcript&, Rng&)>;

struct GameResult {
  bool win = false;
  bool illegal = false;
  std::string reason;        // "", "illegal query", "gave up", "budget exhausted", ...
  std::int64_t queries = 0;  // oracle queries issued
  Transcript transcript;
};

/** Advice computed from the ground truth (validated: ENTRANCE has exactly two
 * EXIT-side neighbors). */
GameAdvice make_advice(const GluedTrees& g);

GameResult play_game(GameKind kind, const GluedTrees& g, const Strategy& strategy,
                     std::int64_t budget, Rng& rng);

/** Replay a fixed subject sequence under `kind` rules on `g`; labels in
 * `extra_legal` count as initially legal (the C->D replay's advice labels). */
GameResult replay_transcript(GameKind kind, const GluedTrees& g,
                             const std::vector<std::int64_t>& subjects, std::int64_t budget,
                             const std::vector<std::int64_t>& extra_legal = {});

/** Walk to a uniform neighbor of the last response (start: ENTRANCE if
 * advised, else a uniform label). */
Strategy uniform_walk_strategy();
/** Query a fresh uniform never-queried label each step. */
Strategy fresh_probe_strategy();
/** Walk like uniform_walk but never step onto ENTRANCE; start at a uniform
 * EXIT-side advice label. Never queries left of ENTRANCE. */
Strategy right_walk_strategy();

/** One adapted Game-B run: Action-1 queries (C-legal) hit the oracle,
 * everything else is fabricated from a consistent left-tree labelling.
 * E1: an oracle response collides with a previously fabricated label.
 * E2: the resampled labelling does not contain the queried fresh label.
 * Both are losses. prob sums are the exact per-step conditional event
 * probabilities (Rao-Blackwell estimator); events are the raw indicators. */
struct AdapterOutcome {
  GameResult result;
  std::int64_t e1_events = 0;
  std::int64_t e2_events = 0;
  double e1_prob_sum = 0;
  double e2_prob_sum = 0;
  std::int64_t action1 = 0;
  std::int64_t action2 = 0;
  std::int64_t action2_real_queries = 0;  // audit: must stay 0
  std::int64_t steps = 0;
};

AdapterOutcome adapt_b_to_c(const GluedTrees& g, const Strategy& strategy_b,
                            std::int64_t budget, Rng& rng);

struct AdapterStats {
  int trials = 0;
  std::int64_t budget = 0;
  std::int64_t wins = 0;
  std::int64_t e1_events = 0;
  std::int64_t e2_events = 0;
  double e1_prob_sum = 0;
  double e2_prob_sum = 0;
  std::int64_t steps = 0;
  std::int64_t action2_real_queries = 0;

  double e1_rate() const { return steps ? e1_prob_sum / static_cast<double>(steps) : 0; }
  double e2_rate() const { return steps ? e2_prob_sum / static_cast<double>(steps) : 0; }
};

/** Run the adapter over seeded trials; one instance per trial, shared by all
 * strategies (strategy streams derived from the instance seed). */
std::vector<AdapterStats> measure_adapter(
    int k, GluedVariant variant,
    const std::vector<std::pair<std::string, Strategy>>& strategies, int trials,
    std::int64_t budget, std::uint64_t root_seed);

struct PairedReplay {
  GameResult c_result;
  GameResult d_result;
  bool consistent = false;  // same win flag and same query count
};

/** Play C on the modified instance, then replay the same subjects under D
 * rules on the bare subgraph (EXIT-side advice labels pre-authorized). */
PairedReplay reduce_c_to_d(const GluedTrees& modified, const Strategy& strategy_c,
                           std::int64_t budget, Rng& rng);

}  // namespace gpq
