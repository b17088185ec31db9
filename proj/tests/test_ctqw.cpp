#include "doctest.h"

#include "gpq/ctqw.hpp"
#include "gpq/glued_trees.hpp"

#include <cmath>

using namespace gpq;

TEST_CASE("reduced walk hamiltonian is the weighted line") {
  const int k = 2;
  const ReducedWalk w(k);
  CHECK(w.dim() == 2 * k + 2);
  const Eigen::MatrixXd h = w.hamiltonian();
  for (int i = 0; i < w.dim(); ++i)
    for (int j = 0; j < w.dim(); ++j) {
      if (std::abs(i - j) > 1) CHECK(h(i, j) == 0);
      if (i == j) CHECK(h(i, j) == 0);
    }
  for (int j = 0; j + 1 < w.dim(); ++j) {
    const double want = j == k ? 2.0 : std::sqrt(2.0);
    CHECK(h(j, j + 1) == doctest::Approx(want));
    CHECK(h(j + 1, j) == doctest::Approx(want));
  }
}

TEST_CASE("reduced profile starts at the entrance column and stays normalized") {
  const ReducedWalk w(3);
  const std::vector<double> p0 = w.column_profile(0.0);
  CHECK(p0[0] == doctest::Approx(1.0));
  for (const double t : {0.7, 3.0, 11.0}) {
    const std::vector<double> p = w.column_profile(t);
    double sum = 0;
    for (const double v : p) {
      CHECK(v >= -1e-12);
      sum += v;
    }
    CHECK(sum == doctest::Approx(1.0));
    CHECK(w.exit_probability(t) == doctest::Approx(p.back()));
    const auto tail = w.tail_probabilities(t);
    CHECK(tail[0] == doctest::Approx(p[p.size() - 2]));
    CHECK(tail[1] == doctest::Approx(p.back()));
  }
}

TEST_CASE("full walk on the instance matches the column reduction") {
  for (const int k : {2, 4}) {
    const GluedTrees g = GluedTrees::build(k, GluedVariant::A, 12345 + k);
    const SparseAdjacency a = glued_subgraph(g, false);
    a.validate();
    CHECK(a.dim == 2 * ((std::int64_t{1} << (k + 1)) - 1));
    CHECK(a.max_degree == 3);
    const ReducedWalk w(k);
    const std::int64_t start = a.index_of(g.entrance_label());
    REQUIRE(start >= 0);
    for (const double t : {1.0, 5.0}) {
      const std::vector<double> prob = ctqw_evolve(a, t, start);
      std::vector<double> per_column(static_cast<std::size_t>(2 * k + 2), 0.0);
      for (std::int64_t i = 0; i < a.dim; ++i) {
        const int col = g.column(a.vertex_label[static_cast<std::size_t>(i)]);
        per_column[static_cast<std::size_t>(col)] += prob[static_cast<std::size_t>(i)];
      }
      const std::vector<double> reduced = w.column_profile(t);
      for (std::size_t c = 0; c < per_column.size(); ++c)
        CHECK(per_column[c] == doctest::Approx(reduced[c]).epsilon(1e-9));
    }
  }
}

TEST_CASE("lanczos agrees with the dense evolver") {
  const GluedTrees g = GluedTrees::build(2, GluedVariant::B, 8);
  const SparseAdjacency a = glued_subgraph(g, true);
  a.validate();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(a.dim, a.dim);
  for (std::int64_t i = 0; i < a.dim; ++i)
    for (std::int64_t idx = a.row_start[static_cast<std::size_t>(i)];
         idx < a.row_start[static_cast<std::size_t>(i) + 1]; ++idx)
      h(i, a.col[static_cast<std::size_t>(idx)]) = 1.0;
  const std::int64_t start = a.index_of(g.entrance_label());
  const double t = 4.2;
  const std::vector<double> fast = ctqw_evolve(a, t, start);
  const std::vector<double> slow = ctqw_evolve_dense(h, t, start);
  for (std::size_t i = 0; i < fast.size(); ++i)
    CHECK(std::abs(fast[i] - slow[i]) < 1e-9);
}

TEST_CASE("marker edges change the walk only in variant B") {
  const GluedTrees g = GluedTrees::build(2, GluedVariant::B, 31);
  const SparseAdjacency with = glued_subgraph(g, true);
  const SparseAdjacency without = glued_subgraph(g, false);
  CHECK(with.dim == without.dim + 3);
  CHECK(with.max_degree == 5);
}

TEST_CASE("time zero returns the start basis state") {
  const GluedTrees g = GluedTrees::build(2, GluedVariant::A, 77);
  const SparseAdjacency a = glued_subgraph(g, false);
  const std::vector<double> prob = ctqw_evolve(a, 0.0, 0);
  CHECK(prob[0] == doctest::Approx(1.0));
  for (std::size_t i = 1; i < prob.size(); ++i) CHECK(prob[i] < 1e-12);
}

TEST_CASE("walk-time chooser finds a high-probability window") {
  for (const int k : {2, 4, 6}) {
    const ReducedWalk w(k);
    const WalkTimeChoice c = choose_walk_time(w);
    CHECK(c.t >= 0.5);
    CHECK(c.t <= 20.0 * k);
    CHECK(c.peak_p_exit >= 1.0 / (2 * k));
    CHECK(c.p_exit + c.p_col2k > 0);
    CHECK(c.objective < 1e6);
  }
}
