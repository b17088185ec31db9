#include "doctest.h"

#include "gpq/edge_indexer.hpp"
#include "gpq/hypergraph.hpp"
#include "gpq/vertex_map.hpp"

#include <vector>

using namespace gpq;

TEST_CASE("documented n=4 l=2 ranking") {
  EdgeIndexer ix(4, 2);
  CHECK(ix.edge_count() == 6);
  CHECK(ix.extended_count() == 10);
  CHECK(ix.rank({1, 2}) == 1);
  CHECK(ix.rank({1, 3}) == 2);
  CHECK(ix.rank({1, 4}) == 3);
  CHECK(ix.rank({2, 3}) == 4);
  CHECK(ix.rank({2, 4}) == 5);
  CHECK(ix.rank({3, 4}) == 6);
  CHECK(ix.rank({1}) == 7);
  CHECK(ix.rank({4}) == 10);
  CHECK(ix.unrank(4) == std::vector<int>{2, 3});
  CHECK(ix.unrank(7) == std::vector<int>{1});
}

TEST_CASE("singletons follow pairs at n=3") {
  EdgeIndexer ix(3, 2);
  CHECK(ix.edge_count() == 3);
  CHECK(ix.extended_count() == 6);
  CHECK(ix.rank({1}) == 4);
  CHECK(ix.rank({2}) == 5);
  CHECK(ix.rank({3}) == 6);
}

TEST_CASE("rank and unrank invert each other") {
  EdgeIndexer ix(6, 3);
  CHECK(ix.edge_count() == 20);
  CHECK(ix.extended_count() == 20 + 15 + 6);
  for (EdgeIndex i = 1; i <= ix.extended_count(); ++i) {
    const std::vector<int> verts = ix.unrank(i);
    CHECK(ix.rank(verts) == i);
  }
}

TEST_CASE("lexicographic order within a class") {
  EdgeIndexer ix(5, 3);
  std::vector<int> prev = ix.unrank(1);
  for (EdgeIndex i = 2; i <= ix.edge_count(); ++i) {
    const std::vector<int> cur = ix.unrank(i);
    CHECK(prev < cur);
    prev = cur;
  }
}

TEST_CASE("induced edge map of a permutation permutes the edges") {
  EdgeIndexer ix(4, 2);
  VertexMap f{{2, 3, 4, 1}};
  REQUIRE(f.is_permutation());
  const EdgeMap F = induce_edge_map(ix, f);
  CHECK(F.is_permutation_of_edges());
  // {1,2} -> {2,3}, which is index 4.
  CHECK(F(1) == 4);
}

TEST_CASE("collapsing maps land in the extended range") {
  EdgeIndexer ix(4, 2);
  VertexMap f{{1, 1, 2, 3}};
  const EdgeMap F = induce_edge_map(ix, f);
  CHECK_FALSE(F.is_permutation_of_edges());
  // {1,2} -> {1}, a singleton, so the image exceeds M.
  CHECK(F(1) > ix.edge_count());
  CHECK(F(1) == ix.rank({1}));
  Hypergraph x = Hypergraph::zeros(4, 2);
  x.set_bit(1, 1);
  CHECK_FALSE(apply_map_bit(x, F, 1).has_value());
  // {2,3} -> {1,2}, a real edge, and x has that bit set.
  CHECK(F(4) == 1);
  CHECK(apply_map_bit(x, F, 4).value() == 1);
}

TEST_CASE("hypergraph text form round-trips") {
  Hypergraph x = Hypergraph::zeros(4, 2);
  x.set_bit(1, 1);
  x.set_bit(6, 1);
  const Hypergraph y = Hypergraph::parse(x.serialize());
  CHECK(y.n() == 4);
  CHECK(y.l() == 2);
  CHECK(y.bits() == x.bits());
  CHECK(y.adjacent(1, 2));
  CHECK(y.adjacent(4, 3));
  CHECK_FALSE(y.adjacent(1, 3));
  CHECK(y.degree(1) == 1);
  CHECK(y.degree(3) == 1);
  CHECK(y.degree(4) == 1);
}
