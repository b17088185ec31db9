#include "gpq/graph_property.hpp"

#include "gpq/vertex_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpq {

InvarianceReport check_invariance(const GraphProperty& p, int max_n) {
  if (p.n > max_n) throw std::invalid_argument("check_invariance: n exceeds guard");
  const EdgeIndexer indexer(p.n, p.l);
  const EdgeIndex m = indexer.edge_count();
  if (m > 24) throw std::invalid_argument("check_invariance: 2^M enumeration too large");

  // Precompute every induced edge permutation.
  std::vector<int> perm(p.n);
  for (int u = 0; u < p.n; ++u) perm[u] = u + 1;
  std::vector<EdgeMap> edge_perms;
  do {
    VertexMap f{perm};
    edge_perms.push_back(induce_edge_map(indexer, f));
  } while (std::next_permutation(perm.begin(), perm.end()));

  InvarianceReport report;
  std::vector<std::uint8_t> bits(m, 0);
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t code = 0; code < total; ++code) {
    for (EdgeIndex i = 0; i < m; ++i) bits[i] = (code >> i) & 1;
    Hypergraph x(indexer, bits);
    if (!p.admits(x)) continue;
    ++report.strings_checked;
    const int vx = p.value(x);
    // Recover pi for the witness lazily via index into edge_perms.
    std::vector<int> pi(p.n);
    for (int u = 0; u < p.n; ++u) pi[u] = u + 1;
    for (const EdgeMap& big_pi : edge_perms) {
      ++report.permutations_checked;
      Hypergraph y = relabel(x, big_pi);
      if (!p.admits(y)) {
        report.witness = InvarianceWitness{x.bits(), pi, "left promise"};
        return report;
      }
      if (p.value(y) != vx) {
        report.witness = InvarianceWitness{x.bits(), pi, "value changed"};
        return report;
      }
      std::next_permutation(pi.begin(), pi.end());
    }
  }
  report.invariant = true;
  return report;
}

GraphProperty triangle_property(int n) {
  GraphProperty p;
  p.name = "triangle";
  p.n = n;
  p.l = 2;
  p.value = [n](const Hypergraph& x) {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c)
          if (x.adjacent(a, b) && x.adjacent(a, c) && x.adjacent(b, c)) return 1;
    return 0;
  };
  return p;
}

GraphProperty parity_property(int n, int l) {
  GraphProperty p;
  p.name = "parity";
  p.n = n;
  p.l = l;
  p.value = [](const Hypergraph& x) {
    int acc = 0;
    for (auto b : x.bits()) acc ^= b;
    return acc;
  };
  return p;
}

GraphProperty first_bit_property(int n, int l) {
  GraphProperty p;
  p.name = "first-bit";
  p.n = n;
  p.l = l;
  p.value = [](const Hypergraph& x) { return x.bit(1); };
  return p;
}

GraphProperty has_degree_property(int n, int d) {
  GraphProperty p;
  p.name = "has-degree-" + std::to_string(d);
  p.n = n;
  p.l = 2;
  p.value = [n, d](const Hypergraph& x) {
    for (int u = 1; u <= n; ++u)
      if (x.degree(u) == d) return 1;
    return 0;
  };
  return p;
}

GraphProperty property_by_name(const std::string& name, int n, int l) {
  if (name == "triangle") return triangle_property(n);
  if (name == "parity") return parity_property(n, l);
  if (name == "first-bit") return first_bit_property(n, l);
  if (name.rfind("has-degree-", 0) == 0) {
    return has_degree_property(n, std::stoi(name.substr(11)));
  }
  throw std::invalid_argument("unknown property: " + name);
}

}  // namespace gpq
