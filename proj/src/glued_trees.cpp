#include "gpq/glued_trees.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gpq {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

int tree_depth_of(std::int64_t heap_pos) {
  int d = 0;
  for (std::int64_t p = heap_pos + 1; p > 1; p >>= 1) ++d;
  return d;
}

}  // namespace

std::string variant_name(GluedVariant v) {
  switch (v) {
    case GluedVariant::A: return "A";
    case GluedVariant::B: return "B";
    case GluedVariant::Bare: return "bare";
  }
  return "?";
}

GluedVariant variant_by_name(const std::string& name) {
  if (name == "A" || name == "a") return GluedVariant::A;
  if (name == "B" || name == "b") return GluedVariant::B;
  if (name == "bare") return GluedVariant::Bare;
  throw std::invalid_argument("unknown variant: " + name);
}

std::int64_t modified_vertex_count(int k) {
  return (std::int64_t{1} << (2 * k + 1)) + (std::int64_t{1} << (k + 2)) - 1;
}

Rational pointer_fraction_pre_marker(int k) {
  const BigInt pointers = pow_big(2, 2 * k);
  const BigInt denom = 2 * pointers + 2 * (pow_big(2, k + 1) - 2);
  return Rational(pointers, denom);
}

GluedTrees GluedTrees::build(int k, GluedVariant variant, std::uint64_t seed) {
  require(k >= 2 && k % 2 == 0, "k must be even and at least 2");
  require(k <= 12, "k exceeds the construction memory guard (k <= 12)");
  require(variant != GluedVariant::Bare, "bare instances come from bare_from_modified");

  const std::int64_t tree_n = (std::int64_t{1} << (k + 1)) - 1;    // per glued tree
  const std::int64_t leaf_count = std::int64_t{1} << k;
  const std::int64_t app_n = (std::int64_t{1} << (2 * k + 1)) - 1;  // appended tree incl. root
  const std::int64_t n = modified_vertex_count(k);

  // Structural ids: left glued heap [0, tree_n) rooted at ENTRANCE = 0; right
  // glued heap [tree_n, 2 tree_n) rooted at EXIT; appended heap positions
  // 1..app_n-1 at offset_app + (pos - 1) (position 0 is ENTRANCE itself);
  // markers last.
  const std::int64_t offset_right = tree_n;
  const std::int64_t offset_app = 2 * tree_n;
  const std::int64_t offset_marker = offset_app + app_n - 1;

  std::vector<std::array<std::int32_t, 5>> adj(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> deg(static_cast<std::size_t>(n), 0);
  for (auto& row : adj) row.fill(0);

  auto add_edge = [&](std::int64_t a, std::int64_t b) {
    adj[static_cast<std::size_t>(a)][deg[static_cast<std::size_t>(a)]++] =
        static_cast<std::int32_t>(b);
    adj[static_cast<std::size_t>(b)][deg[static_cast<std::size_t>(b)]++] =
        static_cast<std::int32_t>(a);
  };

  for (std::int64_t p = 0; p + 1 < leaf_count; ++p) {
    add_edge(p, 2 * p + 1);
    add_edge(p, 2 * p + 2);
    add_edge(offset_right + p, offset_right + 2 * p + 1);
    add_edge(offset_right + p, offset_right + 2 * p + 2);
  }

  Rng rng(seed);

  // Alternating gluing cycle from two spliced uniform permutations.
  std::vector<std::int64_t> left_leaf(static_cast<std::size_t>(leaf_count));
  std::vector<std::int64_t> right_leaf(static_cast<std::size_t>(leaf_count));
  for (std::int64_t i = 0; i < leaf_count; ++i) {
    left_leaf[static_cast<std::size_t>(i)] = (leaf_count - 1) + i;
    right_leaf[static_cast<std::size_t>(i)] = offset_right + (leaf_count - 1) + i;
  }
  rng.shuffle(left_leaf);
  rng.shuffle(right_leaf);
  for (std::int64_t i = 0; i < leaf_count; ++i) {
    add_edge(left_leaf[static_cast<std::size_t>(i)], right_leaf[static_cast<std::size_t>(i)]);
    add_edge(right_leaf[static_cast<std::size_t>(i)],
             left_leaf[static_cast<std::size_t>((i + 1) % leaf_count)]);
  }

  // Appended depth-2k tree rooted at ENTRANCE.
  auto app_id = [&](std::int64_t pos) { return pos == 0 ? 0 : offset_app + pos - 1; };
  const std::int64_t app_leaf_start = (std::int64_t{1} << (2 * k)) - 1;
  for (std::int64_t p = 0; p < app_leaf_start; ++p) {
    add_edge(app_id(p), app_id(2 * p + 1));
    add_edge(app_id(p), app_id(2 * p + 2));
  }

  if (variant == GluedVariant::B)
    for (int m = 0; m < 3; ++m) add_edge(offset_right, offset_marker + m);

  // Uniform label bijection.
  std::vector<std::int32_t> label(static_cast<std::size_t>(n));
  for (std::int64_t s = 0; s < n; ++s) label[static_cast<std::size_t>(s)] =
      static_cast<std::int32_t>(s + 1);
  rng.shuffle(label);

  GluedTrees g;
  g.k_ = k;
  g.variant_ = variant;
  g.seed_ = seed;
  g.member_count_ = n;
  g.pointer_count_ = std::int64_t{1} << (2 * k);
  g.neighbors_.assign(static_cast<std::size_t>(n), {});
  g.deg_.assign(static_cast<std::size_t>(n), 0);
  g.role_.assign(static_cast<std::size_t>(n), static_cast<std::uint8_t>(Role::Absent));
  g.column_.assign(static_cast<std::size_t>(n), -1);
  g.columns_.assign(static_cast<std::size_t>(2 * k + 2), {});
  g.entrance_ = label[0];
  g.exit_ = label[static_cast<std::size_t>(offset_right)];

  std::vector<std::int64_t> scratch;
  for (std::int64_t s = 0; s < n; ++s) {
    const std::int64_t lab = label[static_cast<std::size_t>(s)];
    const std::size_t li = static_cast<std::size_t>(lab - 1);

    scratch.assign(deg[static_cast<std::size_t>(s)], 0);
    for (int j = 0; j < deg[static_cast<std::size_t>(s)]; ++j)
      scratch[static_cast<std::size_t>(j)] =
          label[static_cast<std::size_t>(adj[static_cast<std::size_t>(s)][j])];
    rng.shuffle(scratch);
    g.neighbors_[li].fill(0);
    for (std::size_t j = 0; j < scratch.size(); ++j)
      g.neighbors_[li][j] = static_cast<std::int32_t>(scratch[j]);
    g.deg_[li] = deg[static_cast<std::size_t>(s)];

    Role role;
    int col = -1;
    if (s == 0) {
      role = Role::Entrance;
      col = 0;
    } else if (s < tree_n) {
      role = Role::Glued;
      col = tree_depth_of(s);
    } else if (s == offset_right) {
      role = Role::Exit;
      col = 2 * k + 1;
    } else if (s < 2 * tree_n) {
      role = Role::Glued;
      col = 2 * k + 1 - tree_depth_of(s - offset_right);
    } else if (s < offset_marker) {
      const std::int64_t pos = s - offset_app + 1;
      role = pos >= app_leaf_start ? Role::Pointer : Role::Tree;
    } else {
      role = Role::Marker;
    }
    g.role_[li] = static_cast<std::uint8_t>(role);
    g.column_[li] = static_cast<std::int8_t>(col);
    if (col >= 0) g.columns_[static_cast<std::size_t>(col)].push_back(
        static_cast<std::int32_t>(lab));
  }
  return g;
}

GluedTrees GluedTrees::bare_from_modified(const GluedTrees& src) {
  require(src.variant_ != GluedVariant::Bare, "already bare");
  GluedTrees g;
  g.k_ = src.k_;
  g.variant_ = GluedVariant::Bare;
  g.seed_ = src.seed_;
  g.entrance_ = src.entrance_;
  g.exit_ = src.exit_;
  g.pointer_count_ = 0;
  const std::int64_t space = src.label_space();
  g.neighbors_.assign(static_cast<std::size_t>(space), {});
  g.deg_.assign(static_cast<std::size_t>(space), 0);
  g.role_.assign(static_cast<std::size_t>(space), static_cast<std::uint8_t>(Role::Absent));
  g.column_.assign(static_cast<std::size_t>(space), -1);
  g.columns_ = src.columns_;
  for (auto& row : g.neighbors_) row.fill(0);

  auto keeps = [&](std::int64_t lab) {
    const Role r = src.role(lab);
    return r == Role::Entrance || r == Role::Glued || r == Role::Exit;
  };
  for (std::int64_t lab = 1; lab <= space; ++lab) {
    if (!keeps(lab)) continue;
    const std::size_t li = static_cast<std::size_t>(lab - 1);
    int d = 0;
    for (int j = 0; j < src.degree(lab); ++j) {
      const std::int64_t nb = src.slot(lab, j);
      if (keeps(nb)) g.neighbors_[li][d++] = static_cast<std::int32_t>(nb);
    }
    g.deg_[li] = static_cast<std::uint8_t>(d);
    g.role_[li] = src.role_[li];
    g.column_[li] = src.column_[li];
    ++g.member_count_;
  }
  return g;
}

std::array<std::int64_t, 6> GluedTrees::degree_census() const {
  std::array<std::int64_t, 6> census{};
  for (std::int64_t lab = 1; lab <= label_space(); ++lab)
    if (role(lab) != Role::Absent) ++census[static_cast<std::size_t>(degree(lab))];
  return census;
}

std::string GluedTrees::serialize() const {
  std::ostringstream out;
  out << "glued-trees k=" << k_ << " variant=" << variant_name(variant_) << " seed=" << seed_
      << " n=" << member_count_ << "\n";
  for (std::int64_t lab = 1; lab <= label_space(); ++lab) {
    if (role(lab) == Role::Absent) continue;
    out << lab << ":";
    for (int j = 0; j < degree(lab); ++j) out << " " << slot(lab, j);
    out << "\n";
  }
  return out.str();
}

Rational GluedTrees::pointer_hit_probability() const {
  return Rational(BigInt(pointer_count_), BigInt(member_count_));
}

std::int64_t AdjOracle::query(std::int64_t label, int slot) {
  if (mode_ != OracleMode::Slot) throw std::logic_error("slot query on a full-mode oracle");
  if (!g_->is_member(label)) throw std::out_of_range("label out of range");
  if (slot < 0 || slot >= GluedTrees::kArity) throw std::out_of_range("slot out of range");
  ++count_;
  return g_->slot(label, slot);
}

std::vector<std::int64_t> AdjOracle::query_all(std::int64_t label) {
  if (mode_ != OracleMode::Full) throw std::logic_error("full query on a slot-mode oracle");
  if (!g_->is_member(label)) throw std::out_of_range("label out of range");
  ++count_;
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(g_->degree(label)));
  for (int j = 0; j < g_->degree(label); ++j) out.push_back(g_->slot(label, j));
  return out;
}

std::vector<std::int64_t> AdjOracle::read_list(std::int64_t label) {
  if (mode_ == OracleMode::Full) return query_all(label);
  std::vector<std::int64_t> out;
  for (int j = 0; j < GluedTrees::kArity; ++j) {
    const std::int64_t v = query(label, j);
    if (v == 0) break;
    out.push_back(v);
  }
  return out;
}

}  // namespace gpq
