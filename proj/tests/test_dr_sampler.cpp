#include "doctest.h"

#include "gpq/dr_sampler.hpp"

#include <cmath>
#include <map>

using namespace gpq;

namespace {
Rational single_edge_prob(int n, int l, int r_or_inf) {
  DrSpec spec{n, l, r_or_inf > 0 ? Resolution::finite(r_or_inf) : Resolution::infinity()};
  return exact_constraint_prob(spec, {{1, 1}});
}
}  // namespace

TEST_CASE("frozen single-constraint probabilities at n=3 l=2") {
  // P(F({1,2}) = {1,2}) under D_r, enumerated independently.
  CHECK(single_edge_prob(3, 2, 1) == Rational(0));
  CHECK(single_edge_prob(3, 2, 2) == Rational(1, 6));
  CHECK(single_edge_prob(3, 2, 3) == Rational(2, 9));
  CHECK(single_edge_prob(3, 2, 4) == Rational(1, 4));
  CHECK(single_edge_prob(3, 2, -1) == Rational(1, 3));
}

TEST_CASE("frozen probabilities at n=2 l=1") {
  CHECK(single_edge_prob(2, 1, 2) == Rational(1, 2));
  // Two constraints pin f completely: P = 1/(2r), linear in 1/r.
  for (int r = 1; r <= 3; ++r) {
    DrSpec spec{2, 1, Resolution::finite(r)};
    const Rational p = exact_constraint_prob(spec, {{1, 1}, {2, 1}});
    CHECK(p == Rational(1, 2 * r));
  }
}

TEST_CASE("closed-form f-weight matches enumeration") {
  const int n = 3;
  for (int r = 1; r <= 4; ++r) {
    const auto weights = enumerate_f_weights(n, r);
    // Only maps with |range| <= r carry weight: 3 constants, then 21, then
    // all 27 once r >= n.
    const std::size_t want = r == 1 ? 3 : r == 2 ? 21 : 27;
    CHECK(weights.size() == want);
    Rational total(0);
    for (const auto& [f, w] : weights) {
      std::map<int, int> range;
      for (int u = 1; u <= n; ++u) range[f(u)] = 1;
      CHECK(w == dr_f_weight(n, r, static_cast<int>(range.size())));
      total = total + w;
    }
    CHECK(total == Rational(1));
  }
}

TEST_CASE("permutation weights are uniform") {
  const auto weights = enumerate_permutation_weights(3);
  CHECK(weights.size() == 6);
  for (const auto& [f, w] : weights) {
    CHECK(f.is_permutation());
    CHECK(w == Rational(1, 6));
  }
}

TEST_CASE("sampled maps are consistent with their vertex map") {
  DrSpec spec{4, 2, Resolution::finite(3)};
  Rng rng(42);
  const EdgeIndexer ix(4, 2);
  for (int i = 0; i < 50; ++i) {
    const SampledMap s = sample_dr(spec, rng);
    int range = 0;
    std::map<int, int> hit;
    for (int u = 1; u <= 4; ++u) {
      CHECK(s.f(u) >= 1);
      CHECK(s.f(u) <= 4);
      if (hit.emplace(s.f(u), 1).second) ++range;
    }
    CHECK(range <= 3);
    const EdgeMap F = induce_edge_map(ix, s.f);
    for (EdgeIndex e = 1; e <= ix.edge_count(); ++e) CHECK(F(e) == s.F(e));
  }
}

TEST_CASE("infinite resolution samples permutations") {
  DrSpec spec{5, 2, Resolution::infinity()};
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const SampledMap s = sample_dr(spec, rng);
    CHECK(s.f.is_permutation());
    CHECK(s.F.is_permutation_of_edges());
  }
}

TEST_CASE("sampling frequencies match the exact weights") {
  const int n = 3, r = 2, trials = 20000;
  DrSpec spec{n, 1, Resolution::finite(r)};
  Rng rng(99);
  std::map<std::vector<int>, int> counts;
  for (int i = 0; i < trials; ++i) counts[sample_dr(spec, rng).f.to]++;
  for (const auto& [f, w] : enumerate_f_weights(n, r)) {
    const double expect = to_double(w) * trials;
    const double sigma = std::sqrt(to_double(w) * (1 - to_double(w)) * trials);
    const double got = counts.count(f.to) ? counts.at(f.to) : 0;
    CHECK(std::abs(got - expect) <= 5 * sigma + 5);
  }
}

TEST_CASE("constraint probabilities interpolate exactly as low-degree polynomials") {
  SUBCASE("one constraint, n=4 l=2") {
    const PolyFitReport rep = verify_poly_degree(4, 2, {{1, 1}});
    CHECK(rep.degree_bound == 1);
    CHECK(rep.exact_fit);
    for (const Rational& res : rep.residuals) CHECK(res == Rational(0));
    CHECK(rep.residual_at_infinity == Rational(0));
  }
  SUBCASE("two constraints, n=3 l=1") {
    const PolyFitReport rep = verify_poly_degree(3, 1, {{1, 2}, {2, 2}});
    CHECK(rep.degree_bound == 1);
    CHECK(rep.exact_fit);
  }
}
