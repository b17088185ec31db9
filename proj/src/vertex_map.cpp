#include "gpq/vertex_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpq {

bool VertexMap::is_permutation() const {
  std::vector<char> seen(to.size(), 0);
  for (int v : to) {
    if (v < 1 || v > n() || seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  return true;
}

VertexMap VertexMap::identity(int n) {
  VertexMap f;
  f.to.resize(n);
  for (int u = 1; u <= n; ++u) f.to[u - 1] = u;
  return f;
}

bool EdgeMap::is_permutation_of_edges() const {
  std::vector<char> seen(to.size(), 0);
  for (EdgeIndex v : to) {
    if (v < 1 || v > to.size() || seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  return true;
}

EdgeMap induce_edge_map(const EdgeIndexer& indexer, const VertexMap& f) {
  if (f.n() != indexer.n()) throw std::invalid_argument("induce_edge_map: n mismatch");
  for (int v : f.to) {
    if (v < 1 || v > indexer.n()) throw std::invalid_argument("induce_edge_map: f out of range");
  }
  EdgeMap F;
  F.to.resize(indexer.edge_count());
  std::vector<int> image;
  for (EdgeIndex i = 1; i <= indexer.edge_count(); ++i) {
    const std::vector<int> verts = indexer.unrank(i);
    image.clear();
    for (int u : verts) image.push_back(f(u));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    F.to[i - 1] = indexer.rank(image);
  }
  return F;
}

std::optional<int> apply_map_bit(const Hypergraph& x, const EdgeMap& F, EdgeIndex i) {
  const EdgeIndex j = F(i);
  if (j >= 1 && j <= x.edge_count()) return x.bit(j);
  return std::nullopt;
}

Hypergraph relabel(const Hypergraph& x, const EdgeMap& F) {
  if (!F.is_permutation_of_edges() || F.m() != x.edge_count()) {
    throw std::invalid_argument("relabel: F must permute [M]");
  }
  Hypergraph y = x;
  for (EdgeIndex i = 1; i <= x.edge_count(); ++i) {
    y.set_bit(i, x.bit(F(i)));
  }
  return y;
}

}  // namespace gpq
