#pragma once

#include "gpq/rational.hpp"
#include "gpq/rng.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gpq {

enum class GluedVariant { A, B, Bare };

enum class Role : std::uint8_t { Pointer, Tree, Entrance, Glued, Exit, Marker, Absent };

std::string variant_name(GluedVariant v);
GluedVariant variant_by_name(const std::string& name);

/** A modified glued-trees instance.
 *
 * Two depth-k binary trees rooted at ENTRANCE and EXIT are glued at their
 * leaves by a uniformly random alternating cycle; a depth-2k binary tree
 * whose 2^{2k} leaves are POINTERs is appended at ENTRANCE; three MARKERs are
 * isolated (variant A) or attached to EXIT (variant B). Labels are a uniform
 * bijection onto [n] and each vertex's neighbor slots are in a fresh uniform
 * order. Max degree is 5 (EXIT in variant B); adjacency-list arity is 5.
 *
 * The Bare variant (via bare_from_modified) is the glued-trees subgraph only,
 * keeping the parent instance's labels; its label space is sparse.
 */
class GluedTrees {
 public:
  static constexpr int kArity = 5;

  /** k even, 2 <= k <= 12 (memory guard). */
  static GluedTrees build(int k, GluedVariant variant, std::uint64_t seed);

  /** Glued-trees subgraph of a modified instance: no appended tree, no
   * markers, same labels. ENTRANCE keeps only its two tree children. */
  static GluedTrees bare_from_modified(const GluedTrees& g);

  int k() const { return k_; }
  GluedVariant variant() const { return variant_; }
  std::uint64_t seed() const { return seed_; }
  std::int64_t vertex_count() const { return member_count_; }
  std::int64_t label_space() const { return static_cast<std::int64_t>(deg_.size()); }
  bool is_member(std::int64_t label) const {
    return label >= 1 && label <= label_space() && role(label) != Role::Absent;
  }

  /** Slot oracle value: the slot-th neighbor label of u, or 0 for the star
   * sentinel. u in [1, label_space], slot in [0, 5). Uncounted raw access;
   * solvers must go through AdjOracle. */
  std::int64_t slot(std::int64_t label, int slot) const {
    return neighbors_[static_cast<std::size_t>(label - 1)][static_cast<std::size_t>(slot)];
  }
  int degree(std::int64_t label) const { return deg_[static_cast<std::size_t>(label - 1)]; }
  Role role(std::int64_t label) const {
    return static_cast<Role>(role_[static_cast<std::size_t>(label - 1)]);
  }
  /** Column 0..2k+1 on the glued-trees subgraph, -1 elsewhere. */
  int column(std::int64_t label) const { return column_[static_cast<std::size_t>(label - 1)]; }

  std::int64_t entrance_label() const { return entrance_; }
  std::int64_t exit_label() const { return exit_; }
  std::int64_t pointer_count() const { return pointer_count_; }
  bool has_degree5() const { return variant_ == GluedVariant::B; }

  const std::vector<std::int32_t>& column_members(int col) const {
    return columns_[static_cast<std::size_t>(col)];
  }
  int column_count() const { return static_cast<int>(columns_.size()); }

  /** Vertex counts by degree 0..5. */
  std::array<std::int64_t, 6> degree_census() const;

  /** Header line then one "label: n1 n2 ..." line per member label. */
  std::string serialize() const;

  /** #POINTERs / n for the actual instance (markers included). */
  Rational pointer_hit_probability() const;

 private:
  GluedTrees() = default;

  int k_ = 0;
  GluedVariant variant_ = GluedVariant::A;
  std::uint64_t seed_ = 0;
  std::int64_t member_count_ = 0;
  std::int64_t entrance_ = 0;
  std::int64_t exit_ = 0;
  std::int64_t pointer_count_ = 0;
  std::vector<std::array<std::int32_t, 5>> neighbors_;  // by label-1, slot-packed
  std::vector<std::uint8_t> deg_;
  std::vector<std::uint8_t> role_;
  std::vector<std::int8_t> column_;
  std::vector<std::vector<std::int32_t>> columns_;  // glued columns, member labels
};

/** Exact POINTER fraction among non-marker vertices:
 * 2^{2k} / (2*2^{2k} + 2(2^{k+1} - 2)); tends to 1/2. */
Rational pointer_fraction_pre_marker(int k);

/** n(k) = 2^{2k+1} + 2^{k+2} - 1. */
std::int64_t modified_vertex_count(int k);

enum class OracleMode { Slot, Full };

/** Query-counting adjacency-list oracle. The counter increases by exactly 1
 * per query in either mode: one slot read (slot mode) or one whole-list read
 * (full mode, the Games A-D convention). */
class AdjOracle {
 public:
  AdjOracle(const GluedTrees& g, OracleMode mode) : g_(&g), mode_(mode) {}

  const GluedTrees& instance() const { return *g_; }
  OracleMode mode() const { return mode_; }
  std::int64_t queries() const { return count_; }
  void charge(std::int64_t amount) { count_ += amount; }

  /** Slot mode only. Returns 0 for the star sentinel. */
  std::int64_t query(std::int64_t label, int slot);

  /** Full mode only: the whole neighbor list at unit cost. */
  std::vector<std::int64_t> query_all(std::int64_t label);

  /** Read the whole list in the oracle's mode: slot mode reads slots until
   * the star (cost min(deg+1, 5)), full mode costs 1. */
  std::vector<std::int64_t> read_list(std::int64_t label);

 private:
  const GluedTrees* g_;
  OracleMode mode_;
  std::int64_t count_ = 0;
};

}  // namespace gpq
