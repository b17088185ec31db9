#include "gpq/hypergraph.hpp"

#include <sstream>
#include <stdexcept>

namespace gpq {

Hypergraph::Hypergraph(EdgeIndexer indexer, std::vector<std::uint8_t> bits)
    : indexer_(indexer), bits_(std::move(bits)) {
  if (bits_.size() != indexer_.edge_count()) {
    throw std::invalid_argument("Hypergraph: bit string length must equal C(n,l)");
  }
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("Hypergraph: bits must be 0 or 1");
  }
}

Hypergraph Hypergraph::zeros(int n, int l) {
  EdgeIndexer idx(n, l);
  return Hypergraph(idx, std::vector<std::uint8_t>(idx.edge_count(), 0));
}

Hypergraph Hypergraph::parse(const std::string& text) {
  std::istringstream in(text);
  std::string header, row;
  if (!std::getline(in, header) || !std::getline(in, row)) {
    throw std::invalid_argument("Hypergraph::parse: expected header and bit row");
  }
  int n = 0, l = 0;
  if (std::sscanf(header.c_str(), "n=%d l=%d", &n, &l) != 2) {
    throw std::invalid_argument("Hypergraph::parse: bad header, want \"n=<n> l=<l>\"");
  }
  std::vector<std::uint8_t> bits;
  bits.reserve(row.size());
  for (char c : row) {
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != '\r') {
      throw std::invalid_argument("Hypergraph::parse: bit row must be 0/1 characters");
    }
  }
  return Hypergraph(EdgeIndexer(n, l), std::move(bits));
}

std::string Hypergraph::serialize() const {
  std::ostringstream out;
  out << "n=" << n() << " l=" << l() << "\n";
  for (auto b : bits_) out << static_cast<char>('0' + b);
  out << "\n";
  return out.str();
}

bool Hypergraph::adjacent(int u, int v) const {
  if (l() != 2) throw std::logic_error("adjacent: only meaningful for l = 2");
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return bit(indexer_.rank({u, v})) == 1;
}

int Hypergraph::degree(int u) const {
  if (l() != 2) throw std::logic_error("degree: only meaningful for l = 2");
  int d = 0;
  for (int v = 1; v <= n(); ++v) {
    if (v != u && adjacent(u, v)) ++d;
  }
  return d;
}

}  // namespace gpq
