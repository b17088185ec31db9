#pragma once

#include "gpq/edge_indexer.hpp"
#include "gpq/hypergraph.hpp"

#include <optional>
#include <vector>

namespace gpq {

/** A function f: [n] -> [n], 1-based, not necessarily injective. */
struct VertexMap {
  std::vector<int> to;  // to[u-1] = f(u)

  int n() const { return static_cast<int>(to.size()); }
  int operator()(int u) const { return to.at(u - 1); }
  bool is_permutation() const;

  static VertexMap identity(int n);
};

/** A function F: [M] -> [N] on edge indices, 1-based. */
struct EdgeMap {
  std::vector<EdgeIndex> to;  // to[i-1] = F(i)

  EdgeIndex m() const { return to.size(); }
  EdgeIndex operator()(EdgeIndex i) const { return to.at(i - 1); }

  /** True if F maps [M] into [M] bijectively (an induced permutation does). */
  bool is_permutation_of_edges() const;
};

/** The edge map induced by f: each l-subset maps to the set of its images.
 *
 * Images with repeated vertices collapse to a lower-cardinality class, hence
 * land in the extended index range (M, N].
 */
EdgeMap induce_edge_map(const EdgeIndexer& indexer, const VertexMap& f);

/** x(F(i)) when F(i) is a genuine edge index, nullopt when it falls outside [M]. */
std::optional<int> apply_map_bit(const Hypergraph& x, const EdgeMap& F, EdgeIndex i);

/** The relabelled hypergraph x∘F, defined when F permutes [M]. */
Hypergraph relabel(const Hypergraph& x, const EdgeMap& F);

}  // namespace gpq
