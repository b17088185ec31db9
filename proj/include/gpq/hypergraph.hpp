#pragma once

#include "gpq/edge_indexer.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gpq {

/** An l-uniform hypergraph on [n], stored as its M-bit indicator string. */
class Hypergraph {
 public:
  Hypergraph(EdgeIndexer indexer, std::vector<std::uint8_t> bits);

  static Hypergraph zeros(int n, int l);

  /** Parse the two-line text form: "n=<n> l=<l>" then M characters of 0/1. */
  static Hypergraph parse(const std::string& text);

  std::string serialize() const;

  const EdgeIndexer& indexer() const { return indexer_; }
  int n() const { return indexer_.n(); }
  int l() const { return indexer_.l(); }
  EdgeIndex edge_count() const { return indexer_.edge_count(); }

  int bit(EdgeIndex index) const { return bits_.at(index - 1); }
  void set_bit(EdgeIndex index, int value) { bits_.at(index - 1) = value ? 1 : 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  /** Graph view for l = 2: is {u, v} an edge. */
  bool adjacent(int u, int v) const;

  /** Degree of vertex u for l = 2. */
  int degree(int u) const;

 private:
  EdgeIndexer indexer_;
  std::vector<std::uint8_t> bits_;
};

}  // namespace gpq
