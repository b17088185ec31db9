#pragma once

#include <cstdint>
#include <vector>

namespace gpq {

using EdgeIndex = std::uint64_t;

/** Ranking scheme for hyperedges on vertex set [n] = {1, ..., n}.
 *
 * An l-uniform hypergraph is a bit string indexed by the M = C(n,l) l-subsets.
 * The extended index space of size N = sum_{c=1..l} C(n,c) covers all subsets
 * of cardinality 1..l: class l occupies indices 1..M, then class l-1, down to
 * the singletons. Within a class, subsets are ranked lexicographically by
 * their sorted vertex lists. All external indices are 1-based.
 *
 * Example (n=4, l=2): 1<->{1,2}, 2<->{1,3}, 3<->{1,4}, 4<->{2,3}, 5<->{2,4},
 * 6<->{3,4}, then 7<->{1}, ..., 10<->{4}.
 */
class EdgeIndexer {
 public:
  EdgeIndexer(int n, int l);

  int n() const { return n_; }
  int l() const { return l_; }
  EdgeIndex edge_count() const { return m_; }       // M
  EdgeIndex extended_count() const { return ext_; } // N

  /** Rank of a sorted list of distinct vertices with 1 <= size <= l. */
  EdgeIndex rank(const std::vector<int>& verts) const;

  /** Inverse of rank; returns the sorted vertex list. */
  std::vector<int> unrank(EdgeIndex index) const;

 private:
  int n_, l_;
  EdgeIndex m_, ext_;
  std::vector<EdgeIndex> class_offset_;  // class_offset_[c] = #indices before class c
  std::vector<std::vector<std::uint64_t>> choose_;  // choose_[a][b] = C(a,b)
};

}  // namespace gpq
