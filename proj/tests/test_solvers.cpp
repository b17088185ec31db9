#include "doctest.h"

#include "gpq/solvers.hpp"

#include <algorithm>
#include <set>

using namespace gpq;

TEST_CASE("stage 1 pins the entrance and the two exit-ward directions") {
  for (const GluedVariant v : {GluedVariant::A, GluedVariant::B}) {
    int found = 0;
    for (int seed = 0; seed < 40; ++seed) {
      const GluedTrees g = GluedTrees::build(2, v, 1000 + seed);
      AdjOracle o(g, OracleMode::Slot);
      Rng rng(seed);
      const Stage1Result r = stage1_find_entrance(o, rng);
      if (!r.found) continue;
      ++found;
      CHECK(r.entrance == g.entrance_label());
      std::set<std::int64_t> got{r.toward_exit[0], r.toward_exit[1]};
      std::set<std::int64_t> want;
      for (int s = 0; s < GluedTrees::kArity; ++s) {
        const std::int64_t nb = g.slot(g.entrance_label(), s);
        if (nb != 0 && g.column(nb) == 1) want.insert(nb);
      }
      CHECK(got == want);
      CHECK(r.queries == o.queries());
    }
    CHECK(found >= 38);
  }
}

TEST_CASE("stage 1 respects an explicit budget") {
  const GluedTrees g = GluedTrees::build(4, GluedVariant::A, 5);
  AdjOracle o(g, OracleMode::Slot);
  Rng rng(1);
  const Stage1Result r = stage1_find_entrance(o, rng, 10);
  CHECK(o.queries() <= 10 + 5);  // one read_list may straddle the line
  if (!r.found) CHECK_FALSE(r.failure.empty());
}

TEST_CASE("decide_p5 separates the variants at k=2") {
  int successes = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const GluedVariant v = trial % 2 ? GluedVariant::B : GluedVariant::A;
    const GluedTrees g = GluedTrees::build(2, v, 500 + trial);
    AdjOracle o(g, OracleMode::Slot);
    Rng rng(trial);
    const SolveReport rep = decide_p5(o, DecideConfig{}, rng);
    CHECK(rep.total_queries == o.queries());
    CHECK(rep.total_queries <= rep.budget + GluedTrees::kArity);
    CHECK(rep.stage1_queries + rep.walk_charges + rep.verify_queries == rep.total_queries);
    if (rep.success) {
      ++successes;
      CHECK(rep.decision == (v == GluedVariant::B ? 1 : 0));
      CHECK(rep.witnessed);
    }
  }
  CHECK(successes >= 27);
}

TEST_CASE("a decision always comes from a degree witness") {
  const GluedTrees g = GluedTrees::build(2, GluedVariant::B, 71);
  AdjOracle o(g, OracleMode::Slot);
  Rng rng(3);
  const SolveReport rep = decide_p5(o, DecideConfig{}, rng);
  if (!rep.abstained) {
    CHECK(rep.witnessed);
    const int deg = g.degree(rep.witness_label);
    CHECK((deg == 2 || deg == 5));
    CHECK(rep.witness_label == g.exit_label());
  }
}

TEST_CASE("probe-bfs is deterministic given the start") {
  const GluedTrees g = GluedTrees::build(2, GluedVariant::B, 9);
  AdjOracle o1(g, OracleMode::Slot);
  AdjOracle o2(g, OracleMode::Slot);
  const ClassicalReport a = classical_probe_bfs(o1, 400, g.entrance_label());
  const ClassicalReport b = classical_probe_bfs(o2, 400, g.entrance_label());
  CHECK(a.found == b.found);
  CHECK(a.queries == b.queries);
}

TEST_CASE("classical baselines respect their budget") {
  const GluedTrees g = GluedTrees::build(4, GluedVariant::B, 17);
  for (const ClassicalStrategy s : {ClassicalStrategy::RandomWalk, ClassicalStrategy::ProbeBfs}) {
    AdjOracle o(g, OracleMode::Slot);
    Rng rng(4);
    const ClassicalReport rep = classical_baseline(o, s, 200, rng);
    CHECK(rep.budget == 200);
    CHECK(rep.queries <= 200 + 5);
    CHECK(rep.queries == o.queries());
  }
}

TEST_CASE("strategy names round-trip") {
  CHECK(classical_strategy_by_name("random-walk") == ClassicalStrategy::RandomWalk);
  CHECK(classical_strategy_by_name("probe-bfs") == ClassicalStrategy::ProbeBfs);
  CHECK(classical_strategy_name(ClassicalStrategy::RandomWalk) == "random-walk");
  CHECK(classical_strategy_name(ClassicalStrategy::ProbeBfs) == "probe-bfs");
  CHECK_THROWS(classical_strategy_by_name("nope"));
}

TEST_CASE("exact probe-bfs success is a probability and grows with budget") {
  const GluedTrees g = GluedTrees::build(2, GluedVariant::B, 23);
  const double lo = probe_bfs_success_exact(g, 100);
  const double hi = probe_bfs_success_exact(g, 2000);
  CHECK(lo >= 0.0);
  CHECK(hi <= 1.0);
  CHECK(hi >= lo);
}

TEST_CASE("walk hitting times are capped") {
  const GluedTrees g = GluedTrees::build(2, GluedVariant::B, 29);
  Rng rng(6);
  const std::int64_t q = walk_queries_to_exit(g, 100000, rng);
  CHECK(q > 0);
  CHECK(q <= 100000);
}
