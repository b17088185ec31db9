#include "doctest.h"

#include "gpq/dequantizer.hpp"
#include "gpq/qsim.hpp"

#include <cmath>

using namespace gpq;

TEST_CASE("degree parameter and golden s values") {
  CHECK(degree_parameter(1, 1) == 11);
  CHECK(degree_parameter(2, 2) == 47);
  CHECK(s_param(1, 1) == 59114);
  CHECK(s_param(2, 1) == 540376);
  CHECK(s_param(3, 1) == 1904217);
  CHECK(s_param(1, 2) == 540376);
  CHECK(s_param(2, 2) == 4611114);
  CHECK(s_param(3, 2) == 15895980);
}

TEST_CASE("closeness bound formula") {
  const double d = 12.0 * 1 * 1 - 1;
  CHECK(closeness_bound(1, 1, 10.0) == doctest::Approx(M_PI * M_PI * d * d * d / 30.0));
  // Doubling r halves the bound.
  CHECK(closeness_bound(2, 3, 64.0) == doctest::Approx(2.0 * closeness_bound(2, 3, 128.0)));
}

TEST_CASE("dequantized run is the boosted substituted circuit on the drawn map") {
  const EdgeIndexer ix(3, 2);
  Rng crng(41);
  const QueryCircuit base = random_query_circuit(3, 2, 1, crng);
  Hypergraph x = Hypergraph::zeros(3, 2);
  x.set_bit(2, 1);
  for (int trial = 0; trial < 20; ++trial) {
    Rng rng = derive_stream(77, static_cast<std::uint64_t>(trial));
    Rng replay_rng = derive_stream(77, static_cast<std::uint64_t>(trial));
    const DequantizeOutcome out = run_dequantized(base, ix, x, Resolution::finite(4), rng);

    const SampledMap s = sample_dr({3, 2, Resolution::finite(4)}, replay_rng);
    const SubstitutedCircuit sub = substitute_oracles(base, ix, s.F);
    const double p1 = majority3(sub.run(x).p1);
    CHECK(out.p1 == doctest::Approx(p1).epsilon(1e-12));
    CHECK(out.shift_gates == 3 * base.query_count());
    CHECK(out.shift_adjoint_gates == 3 * base.query_count());
    CHECK(out.classical_cost == static_cast<int>(out.support.size()));
    CHECK(out.classical_cost <= static_cast<int>(binomial(out.range_size, 2)));
    for (const EdgeIndex e : out.support) {
      CHECK(e >= 1);
      CHECK(e <= ix.edge_count());
    }
    CHECK((out.output == 0 || out.output == 1));
  }
}

TEST_CASE("infinite resolution reads every edge of a permuted input") {
  const EdgeIndexer ix(3, 2);
  Rng crng(42);
  const QueryCircuit base = random_query_circuit(3, 2, 1, crng);
  const Hypergraph x = Hypergraph::zeros(3, 2);
  Rng rng(9);
  const DequantizeOutcome out = run_dequantized(base, ix, x, Resolution::infinity(), rng);
  CHECK(out.range_size == 3);
  CHECK(out.classical_cost == 3);
}

TEST_CASE("exact closeness shrinks with r and respects the bound") {
  const EdgeIndexer ix(3, 2);
  Rng crng(55);
  const QueryCircuit base = random_query_circuit(3, 2, 1, crng);
  Hypergraph x = Hypergraph::zeros(3, 2);
  x.set_bit(1, 1);
  x.set_bit(3, 1);
  double prev_tv = 1e9;
  for (const int r : {2, 8, 32}) {
    const ClosenessReport rep = closeness_exact(base, ix, x, r);
    CHECK(rep.samples == 0);
    CHECK(rep.sigma == 0);
    CHECK(rep.tv == doctest::Approx(std::abs(rep.p_finite - rep.p_infinite)));
    CHECK(rep.l1 == doctest::Approx(2 * rep.tv));
    CHECK(rep.tv <= rep.bound + 1e-12);
    CHECK(rep.tv <= prev_tv + 1e-12);
    prev_tv = rep.tv;
  }
}

TEST_CASE("sampled closeness agrees with the exact mixture") {
  const EdgeIndexer ix(3, 2);
  Rng crng(60);
  const QueryCircuit base = random_query_circuit(3, 2, 1, crng);
  Hypergraph x = Hypergraph::zeros(3, 2);
  x.set_bit(2, 1);
  const int r = 4;
  const ClosenessReport exact = closeness_exact(base, ix, x, r);
  Rng rng(13);
  const ClosenessReport sampled = closeness_sampled(base, ix, x, r, 4000, rng);
  CHECK(sampled.samples == 4000);
  CHECK(sampled.sigma > 0);
  CHECK(std::abs(sampled.p_finite - exact.p_finite) <= 5 * sampled.sigma);
  CHECK(sampled.p_infinite == doctest::Approx(exact.p_infinite).epsilon(1e-12));
}
