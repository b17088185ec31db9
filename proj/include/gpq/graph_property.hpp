#pragma once

#include "gpq/hypergraph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gpq {

/** A promise problem on l-uniform hypergraphs over [n].
 *
 * in_promise restricts the domain; value is the 0/1 answer. A graph property
 * must be invariant under vertex relabelling on its promise.
 */
struct GraphProperty {
  std::string name;
  int n = 0;
  int l = 0;
  std::function<bool(const Hypergraph&)> in_promise;  // null means every x
  std::function<int(const Hypergraph&)> value;

  bool admits(const Hypergraph& x) const { return !in_promise || in_promise(x); }
};

struct InvarianceWitness {
  std::vector<std::uint8_t> x_bits;
  std::vector<int> permutation;  // pi(u) at position u-1
  std::string reason;            // "value changed" or "left promise"
};

struct InvarianceReport {
  bool invariant = false;
  std::uint64_t strings_checked = 0;
  std::uint64_t permutations_checked = 0;
  std::optional<InvarianceWitness> witness;
};

/** Exhaustive relabelling-invariance check.
 *
 * Enumerates every promise string and every vertex permutation; guarded to
 * n <= max_n (default 6) because the cost is 2^M * n!.
 */
InvarianceReport check_invariance(const GraphProperty& p, int max_n = 6);

/** l = 2: contains a triangle (3-clique). Invariant. */
GraphProperty triangle_property(int n);

/** Any l: parity of the number of present edges. Invariant. */
GraphProperty parity_property(int n, int l);

/** Any l: the first bit x(1). Not invariant; negative control. */
GraphProperty first_bit_property(int n, int l);

/** l = 2: some vertex has degree exactly d. Invariant. */
GraphProperty has_degree_property(int n, int d);

GraphProperty property_by_name(const std::string& name, int n, int l);

}  // namespace gpq
