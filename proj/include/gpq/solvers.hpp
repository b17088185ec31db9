#pragma once

#include "gpq/ctqw.hpp"
#include "gpq/glued_trees.hpp"
#include "gpq/rng.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace gpq {

/** Stage-1 outcome: ENTRANCE plus the two directions not eliminated by the
 * 2k-step elimination walks (the EXIT-ward tree children). */
struct Stage1Result {
  bool found = false;
  std::int64_t entrance = 0;
  std::array<std::int64_t, 2> toward_exit{0, 0};
  std::int64_t queries = 0;        // slot queries consumed by this stage
  std::int64_t budget = 0;
  std::int64_t probes = 0;         // uniform probes until a leaf/ENTRANCE hit
  std::int64_t witness_label = 0;  // first degree-2/5 vertex seen, 0 if none
  int witness_degree = 0;
  std::string failure;             // empty iff found
};

/** Find ENTRANCE through the slot oracle: probe uniformly until a degree-1
 * leaf, climb non-backtracking with bisection wrong-turn correction (a leaf
 * hit after T steps puts the wrong turn at step T/2), stop at the unique
 * degree-4 vertex, then walk 2k steps in each unexplored direction and
 * eliminate those reaching a leaf. Budget 0 means the default 500 k²; the
 * budget caps the oracle's total counter. */
Stage1Result stage1_find_entrance(AdjOracle& o, Rng& rng, std::int64_t budget = 0);

struct SolveReport {
  int decision = 0;                 // 1 iff a degree-5 vertex was witnessed
  bool witnessed = false;           // saw any degree-2/5 vertex
  std::int64_t witness_label = 0;
  bool abstained = false;           // budget or attempt cap hit
  bool success = false;             // !abstained and decision matches variant
  int attempts = 0;                 // walk evolutions run
  double walk_time = 0;             // chosen evolution time t*
  std::int64_t stage1_queries = 0;
  std::int64_t walk_charges = 0;    // ceil(t*) per evolution
  std::int64_t verify_queries = 0;  // slot queries spent verifying samples
  std::int64_t total_queries = 0;   // equals the oracle counter delta
  std::int64_t budget = 0;
};

struct DecideConfig {
  std::int64_t budget = 0;          // 0 -> 500 k²
  bool include_marker_edges = false;
  int max_attempts = 200;
};

/** Decide "has a degree-5 vertex" on a modified glued-trees instance.
 *
 * Stage 1 locates ENTRANCE; stage 2 repeatedly evolves the walk for time t*
 * (chosen once from the instance-independent column reduction), samples a
 * vertex from the evolved distribution, and verifies the sample and its
 * neighbors through the oracle. Each evolution is charged ceil(t*) oracle
 * queries. Output is one-sided: 1 only when a degree-5 vertex was read.
 * Any degree-2/5 read (including during stage 1) short-circuits: that vertex
 * is EXIT in every instance of the family. */
SolveReport decide_p5(AdjOracle& o, const DecideConfig& cfg, Rng& rng);

enum class ClassicalStrategy { RandomWalk, ProbeBfs };

ClassicalStrategy classical_strategy_by_name(const std::string& name);
std::string classical_strategy_name(ClassicalStrategy s);

struct ClassicalReport {
  bool found = false;       // read a degree-2/5 vertex (EXIT)
  std::int64_t queries = 0;
  std::int64_t budget = 0;
};

/** Memoryless uniform walk: every step re-reads the current vertex's list at
 * full price; restarts at a fresh uniform vertex when stuck (degree 0).
 * Reads are permitted while the counter is below budget. */
ClassicalReport classical_random_walk(AdjOracle& o, std::int64_t budget, Rng& rng);

/** Probe + BFS, deterministic given the starting label: BFS with cached
 * lists, neighbors pushed in slot order; when a component is exhausted,
 * re-probe the lowest unvisited label. */
ClassicalReport classical_probe_bfs(AdjOracle& o, std::int64_t budget, std::int64_t start);

ClassicalReport classical_baseline(AdjOracle& o, ClassicalStrategy strategy,
                                   std::int64_t budget, Rng& rng);

/** Exact probe+BFS success rate: the win indicator averaged over all n
 * equiprobable starting labels (the strategy's only randomness). */
double probe_bfs_success_exact(const GluedTrees& g, std::int64_t budget);

/** Slot queries a memoryless uniform walk needs to read EXIT, capped. */
std::int64_t walk_queries_to_exit(const GluedTrees& g, std::int64_t cap, Rng& rng);

}  // namespace gpq
