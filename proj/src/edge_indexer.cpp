#include "gpq/edge_indexer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gpq {

EdgeIndexer::EdgeIndexer(int n, int l) : n_(n), l_(l) {
  if (n < 1) throw std::invalid_argument("EdgeIndexer: n must be >= 1");
  if (l < 1 || l > n) throw std::invalid_argument("EdgeIndexer: need 1 <= l <= n");
  choose_.assign(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int a = 0; a <= n; ++a) {
    choose_[a][0] = 1;
    for (int b = 1; b <= a; ++b) {
      choose_[a][b] = choose_[a - 1][b - 1] + (b <= a - 1 ? choose_[a - 1][b] : 0);
    }
  }
  class_offset_.assign(l + 1, 0);
  EdgeIndex acc = 0;
  for (int c = l; c >= 1; --c) {
    class_offset_[c] = acc;
    acc += choose_[n][c];
  }
  m_ = choose_[n][l];
  ext_ = acc;
}

EdgeIndex EdgeIndexer::rank(const std::vector<int>& verts) const {
  const int c = static_cast<int>(verts.size());
  if (c < 1 || c > l_) throw std::invalid_argument("rank: subset size must be in [1, l]");
  for (int i = 0; i < c; ++i) {
    if (verts[i] < 1 || verts[i] > n_) throw std::invalid_argument("rank: vertex out of [n]");
    if (i > 0 && verts[i] <= verts[i - 1]) {
      throw std::invalid_argument("rank: vertices must be sorted and distinct");
    }
  }
  // Lexicographic rank among c-subsets of [n], 1-based.
  EdgeIndex lex = 1;
  int prev = 0;
  for (int i = 0; i < c; ++i) {
    for (int u = prev + 1; u < verts[i]; ++u) {
      lex += choose_[n_ - u][c - i - 1];
    }
    prev = verts[i];
  }
  return class_offset_[c] + lex;
}

std::vector<int> EdgeIndexer::unrank(EdgeIndex index) const {
  if (index < 1 || index > ext_) throw std::invalid_argument("unrank: index out of [N]");
  int c = l_;
  while (c > 1 && index > class_offset_[c] + choose_[n_][c]) --c;
  EdgeIndex lex = index - class_offset_[c];  // 1-based within the class
  std::vector<int> verts(c);
  int u = 1;
  for (int i = 0; i < c; ++i) {
    while (true) {
      const std::uint64_t block = choose_[n_ - u][c - i - 1];
      if (lex <= block) break;
      lex -= block;
      ++u;
    }
    verts[i] = u;
    ++u;
  }
  return verts;
}

}  // namespace gpq
