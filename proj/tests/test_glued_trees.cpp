#include "doctest.h"

#include "gpq/glued_trees.hpp"

#include <algorithm>
#include <set>

using namespace gpq;

TEST_CASE("vertex count and pointer fractions") {
  CHECK(modified_vertex_count(2) == 47);
  CHECK(modified_vertex_count(4) == 575);
  for (int k = 2; k <= 8; k += 2) {
    const std::int64_t two_k = std::int64_t{1} << k;
    CHECK(modified_vertex_count(k) == (std::int64_t{1} << (2 * k + 1)) + 4 * two_k - 1);
    // Pre-marker denominator: 2*2^{2k} + 2*(2^{k+1} - 2).
    const Rational want(std::int64_t{1} << (2 * k),
                        2 * (std::int64_t{1} << (2 * k)) + 2 * (2 * two_k - 2));
    CHECK(pointer_fraction_pre_marker(k) == want);
  }
  CHECK(pointer_fraction_pre_marker(2) == Rational(16, 44));
}

TEST_CASE("degree census for both variants at k=2") {
  const GluedTrees a = GluedTrees::build(2, GluedVariant::A, 7);
  const GluedTrees b = GluedTrees::build(2, GluedVariant::B, 7);
  CHECK(a.vertex_count() == 47);
  CHECK(b.vertex_count() == 47);
  // A: three isolated markers, 16 pointer leaves, EXIT at degree 2.
  CHECK(a.degree_census() == std::array<std::int64_t, 6>{3, 16, 1, 26, 1, 0});
  // B: markers hang off EXIT, which reaches degree 5.
  CHECK(b.degree_census() == std::array<std::int64_t, 6>{0, 19, 0, 26, 1, 1});
  CHECK_FALSE(a.has_degree5());
  CHECK(b.has_degree5());
  CHECK(a.pointer_count() == 16);
  CHECK(a.pointer_hit_probability() == Rational(16, 47));
}

TEST_CASE("entrance and exit are recognizable by degree") {
  for (const GluedVariant v : {GluedVariant::A, GluedVariant::B}) {
    const GluedTrees g = GluedTrees::build(4, v, 99);
    CHECK(g.degree(g.entrance_label()) == 4);
    CHECK(g.role(g.entrance_label()) == Role::Entrance);
    CHECK(g.role(g.exit_label()) == Role::Exit);
    CHECK(g.degree(g.exit_label()) == (v == GluedVariant::B ? 5 : 2));
  }
}

TEST_CASE("columns slice the glued trees by depth") {
  const int k = 4;
  const GluedTrees g = GluedTrees::build(k, GluedVariant::A, 3);
  CHECK(g.column_count() == 2 * k + 2);
  REQUIRE(g.column_members(0).size() == 1);
  CHECK(g.column_members(0)[0] == g.entrance_label());
  REQUIRE(g.column_members(2 * k + 1).size() == 1);
  CHECK(g.column_members(2 * k + 1)[0] == g.exit_label());
  for (int j = 1; j <= k; ++j) {
    CHECK(g.column_members(j).size() == (std::size_t{1} << j));
    CHECK(g.column_members(2 * k + 1 - j).size() == (std::size_t{1} << j));
  }
  for (int j = 0; j < g.column_count(); ++j)
    for (const std::int64_t lab : g.column_members(j)) CHECK(g.column(lab) == j);
}

TEST_CASE("adjacency is symmetric and respects declared degrees") {
  const GluedTrees g = GluedTrees::build(2, GluedVariant::B, 21);
  for (std::int64_t v = 1; v <= g.label_space(); ++v) {
    if (!g.is_member(v)) continue;
    int listed = 0;
    for (int s = 0; s < GluedTrees::kArity; ++s) {
      const std::int64_t nb = g.slot(v, s);
      if (nb == 0) continue;
      ++listed;
      bool back = false;
      for (int t = 0; t < GluedTrees::kArity; ++t) back |= g.slot(nb, t) == v;
      CHECK(back);
    }
    CHECK(listed == g.degree(v));
  }
}

TEST_CASE("cycle edges glue leaves of the two trees alternately") {
  const int k = 2;
  const GluedTrees g = GluedTrees::build(k, GluedVariant::A, 15);
  // Leaf columns k and k+1; every leaf has one tree parent and two cycle edges.
  for (const std::int64_t leaf : g.column_members(k)) {
    CHECK(g.degree(leaf) == 3);
    int cross = 0;
    for (int s = 0; s < GluedTrees::kArity; ++s) {
      const std::int64_t nb = g.slot(leaf, s);
      if (nb != 0 && g.column(nb) == k + 1) ++cross;
    }
    CHECK(cross == 2);
  }
}

TEST_CASE("serialization is deterministic in the seed") {
  const GluedTrees g1 = GluedTrees::build(2, GluedVariant::B, 5);
  const GluedTrees g2 = GluedTrees::build(2, GluedVariant::B, 5);
  const GluedTrees g3 = GluedTrees::build(2, GluedVariant::B, 6);
  CHECK(g1.serialize() == g2.serialize());
  CHECK(g1.serialize() != g3.serialize());
}

TEST_CASE("bare instance keeps only the glued trees") {
  const int k = 2;
  const GluedTrees g = GluedTrees::build(k, GluedVariant::B, 33);
  const GluedTrees bare = GluedTrees::bare_from_modified(g);
  CHECK(bare.variant() == GluedVariant::Bare);
  std::int64_t members = 0;
  for (std::int64_t v = 1; v <= bare.label_space(); ++v) {
    if (!bare.is_member(v)) continue;
    ++members;
    CHECK(g.is_member(v));
    CHECK(bare.column(v) == g.column(v));
    // Neighbor lists keep original slot order, filtered to survivors.
    std::vector<std::int64_t> expect;
    for (int s = 0; s < GluedTrees::kArity; ++s) {
      const std::int64_t nb = g.slot(v, s);
      if (nb != 0 && bare.is_member(nb)) expect.push_back(nb);
    }
    std::vector<std::int64_t> got;
    for (int s = 0; s < GluedTrees::kArity; ++s)
      if (bare.slot(v, s) != 0) got.push_back(bare.slot(v, s));
    CHECK(got == expect);
  }
  CHECK(members == 2 * ((std::int64_t{1} << (k + 1)) - 1));
  CHECK(bare.entrance_label() == g.entrance_label());
  CHECK(bare.exit_label() == g.exit_label());
  CHECK(bare.degree(bare.entrance_label()) == 2);
  CHECK(bare.degree(bare.exit_label()) == 2);
}

TEST_CASE("oracle counts queries and charges") {
  const GluedTrees g = GluedTrees::build(2, GluedVariant::A, 2);
  SUBCASE("slot mode bills each slot and caps a full read at arity") {
    AdjOracle o(g, OracleMode::Slot);
    CHECK(o.queries() == 0);
    o.query(g.entrance_label(), 0);
    CHECK(o.queries() == 1);
    const std::vector<std::int64_t> nbs = o.read_list(g.entrance_label());
    CHECK(nbs.size() == 4);
    CHECK(o.queries() == 1 + 5);  // four hits plus the terminating empty slot
    o.charge(10);
    CHECK(o.queries() == 16);
  }
  SUBCASE("full mode returns the whole list for one query") {
    AdjOracle o(g, OracleMode::Full);
    const std::vector<std::int64_t> nbs = o.query_all(g.exit_label());
    CHECK(nbs.size() == 2);
    CHECK(o.queries() == 1);
  }
}
