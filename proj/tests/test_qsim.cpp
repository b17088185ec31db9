#include "doctest.h"

#include "gpq/dr_sampler.hpp"
#include "gpq/qsim.hpp"

#include <cmath>
#include <complex>

using namespace gpq;

namespace {

StateVector basis_state(const RegisterLayout& layout, std::int64_t index) {
  StateVector psi(layout.total(), Complex(0, 0));
  psi[static_cast<std::size_t>(index)] = Complex(1, 0);
  return psi;
}

double state_distance(const StateVector& a, const StateVector& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

Hypergraph bits_to_graph(int n, int l, unsigned mask) {
  Hypergraph x = Hypergraph::zeros(n, l);
  for (EdgeIndex i = 1; i <= x.edge_count(); ++i)
    x.set_bit(i, (mask >> (i - 1)) & 1u);
  return x;
}

}  // namespace

TEST_CASE("plain oracle flips the bit register per basis state") {
  const EdgeIndexer ix(3, 2);
  RegisterLayout layout{{static_cast<std::int64_t>(ix.edge_count()), 2}};
  const Hypergraph x = bits_to_graph(3, 2, 0b101);
  for (std::int64_t i = 0; i < 3; ++i) {
    for (std::int64_t b = 0; b < 2; ++b) {
      StateVector psi = basis_state(layout, i * 2 + b);
      apply_plain_oracle(psi, layout, 0, 1, x);
      const std::int64_t want = i * 2 + (b ^ x.bit(static_cast<EdgeIndex>(i + 1)));
      CHECK(state_distance(psi, basis_state(layout, want)) == 0);
    }
  }
}

TEST_CASE("extended oracle: label semantics and the wrap-around label 0") {
  SUBCASE("l=2: labels above M leave the state alone") {
    const EdgeIndexer ix(3, 2);  // M=3, N=6
    RegisterLayout layout{{static_cast<std::int64_t>(ix.extended_count()), 2}};
    Hypergraph x = bits_to_graph(3, 2, 0b111);
    QueryLog log;
    for (std::int64_t v = 0; v < 6; ++v) {
      StateVector psi = basis_state(layout, v * 2);
      apply_extended_oracle(psi, layout, 0, 1, x, &log);
      const EdgeIndex rep = v == 0 ? 6 : static_cast<EdgeIndex>(v);
      const std::int64_t want = rep <= 3 ? v * 2 + 1 : v * 2;
      CHECK(state_distance(psi, basis_state(layout, want)) == 0);
    }
    CHECK(log == QueryLog{1, 2, 3});
  }
  SUBCASE("l=1: label 0 represents index N = M and reads the last bit") {
    const EdgeIndexer ix(3, 1);  // M = N = 3
    RegisterLayout layout{{3, 2}};
    Hypergraph x = Hypergraph::zeros(3, 1);
    x.set_bit(3, 1);
    QueryLog log;
    StateVector psi = basis_state(layout, 0);  // label 0, bit 0
    apply_extended_oracle(psi, layout, 0, 1, x, &log);
    CHECK(state_distance(psi, basis_state(layout, 1)) == 0);
    CHECK(log == QueryLog{3});
  }
}

TEST_CASE("shift oracle adds F and its adjoint subtracts it") {
  const EdgeIndexer ix(3, 2);
  Rng rng(5);
  DrSpec spec{3, 2, Resolution::finite(2)};
  const SampledMap s = sample_dr(spec, rng);
  RegisterLayout layout{{static_cast<std::int64_t>(ix.edge_count()),
                         static_cast<std::int64_t>(ix.extended_count())}};
  const std::int64_t N = ix.extended_count();
  for (std::int64_t i = 0; i < 3; ++i) {
    for (std::int64_t j = 0; j < N; ++j) {
      StateVector psi = basis_state(layout, i * N + j);
      apply_shift_oracle(psi, layout, 0, 1, s.F);
      const std::int64_t want = i * N + (j + static_cast<std::int64_t>(s.F(i + 1))) % N;
      CHECK(state_distance(psi, basis_state(layout, want)) == 0);
      apply_shift_adjoint_oracle(psi, layout, 0, 1, s.F);
      CHECK(state_distance(psi, basis_state(layout, i * N + j)) == 0);
    }
  }
}

TEST_CASE("composed oracle equals the relabelled plain oracle on basis states") {
  const EdgeIndexer ix(3, 2);
  Rng rng(11);
  const std::int64_t M = ix.edge_count(), N = ix.extended_count();
  RegisterLayout layout{{M, N, 2}};
  for (int trial = 0; trial < 50; ++trial) {
    DrSpec spec{3, 2, trial % 2 ? Resolution::finite(2 + trial % 3) : Resolution::infinity()};
    const SampledMap s = sample_dr(spec, rng);
    const Hypergraph x = bits_to_graph(3, 2, static_cast<unsigned>(rng.below(8)));
    for (std::int64_t i = 0; i < M; ++i) {
      for (std::int64_t b = 0; b < 2; ++b) {
        StateVector psi = basis_state(layout, (i * N) * 2 + b);
        apply_composed_oracle(psi, layout, 0, 1, 2, x, s.F, nullptr);
        const auto mapped = apply_map_bit(x, s.F, static_cast<EdgeIndex>(i + 1));
        const std::int64_t flip = mapped ? *mapped : 0;
        CHECK(state_distance(psi, basis_state(layout, (i * N) * 2 + (b ^ flip))) == 0);
      }
    }
  }
}

TEST_CASE("deutsch circuit reads the xor of the two bits with certainty") {
  const QueryCircuit c = deutsch_circuit();
  for (unsigned mask = 0; mask < 4; ++mask) {
    const Hypergraph x = bits_to_graph(2, 1, mask);
    const BitDistribution d = run_circuit(c, x);
    const int want = (x.bit(1) ^ x.bit(2)) ? 1 : 0;
    CHECK(std::abs(d.p1 - want) < 1e-12);
  }
}

TEST_CASE("parity circuit is exact") {
  for (std::int64_t m : {3, 4}) {
    const QueryCircuit c = parity_circuit(m);
    CHECK(c.query_count() == m);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      const Hypergraph x = bits_to_graph(static_cast<int>(m), 1, mask);
      int parity = 0;
      for (EdgeIndex i = 1; i <= x.edge_count(); ++i) parity ^= x.bit(i);
      const BitDistribution d = run_circuit(c, x);
      CHECK(std::abs(d.p1 - parity) < 1e-12);
    }
  }
}

TEST_CASE("coherent majority boost matches the post-processed one") {
  Rng rng(17);
  const QueryCircuit base = random_query_circuit(3, 2, 1, rng);
  base.validate();
  const QueryCircuit coherent = coherent_majority3_circuit(base);
  coherent.validate();
  const BoostedCircuit boosted = boost_majority3(base);
  CHECK(boosted.plain_slot_count() == 3);
  for (unsigned mask = 0; mask < 8; ++mask) {
    const Hypergraph x = bits_to_graph(3, 1, mask);
    const BitDistribution a = boosted.run(x);
    const BitDistribution b = run_circuit(coherent, x);
    CHECK(std::abs(a.p1 - b.p1) < 1e-10);
  }
}

TEST_CASE("substituting an induced permutation relabels the input") {
  const EdgeIndexer ix(3, 2);
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const QueryCircuit base = random_query_circuit(3, 2, 1 + trial % 2, rng);
    for (const auto& [f, w] : enumerate_permutation_weights(3)) {
      const EdgeMap F = induce_edge_map(ix, f);
      const SubstitutedCircuit sub = substitute_oracles(base, ix, F);
      for (unsigned mask = 0; mask < 8; ++mask) {
        const Hypergraph x = bits_to_graph(3, 2, mask);
        const BitDistribution a = sub.run(x);
        const BitDistribution b = run_circuit(base, relabel(x, F));
        CHECK(std::abs(a.p1 - b.p1) < 1e-10);
      }
    }
  }
}

TEST_CASE("substituted query log stays inside the image of F") {
  const EdgeIndexer ix(4, 2);
  Rng rng(31);
  const QueryCircuit base = random_query_circuit(6, 2, 2, rng);
  DrSpec spec{4, 2, Resolution::finite(2)};
  for (int trial = 0; trial < 10; ++trial) {
    const SampledMap s = sample_dr(spec, rng);
    QueryLog support;
    for (EdgeIndex e = 1; e <= ix.edge_count(); ++e)
      if (s.F(e) <= ix.edge_count()) support.insert(s.F(e));
    const SubstitutedCircuit sub = substitute_oracles(base, ix, s.F);
    const Hypergraph x = bits_to_graph(4, 2, static_cast<unsigned>(rng.below(64)));
    QueryLog log;
    sub.run(x, &log);
    for (const EdgeIndex e : log) CHECK(support.count(e) == 1);
  }
}

TEST_CASE("random circuits validate and stay normalized") {
  Rng rng(3);
  const QueryCircuit c = random_query_circuit(4, 3, 2, rng);
  c.validate();
  CHECK(c.query_count() == 2);
  const Hypergraph x = bits_to_graph(4, 1, 0b1010);
  const StateVector out = run_circuit_state(c, x);
  CHECK(std::abs(norm_squared(out) - 1.0) < 1e-10);
  const BitDistribution d = run_circuit(c, x);
  CHECK(std::abs(d.p0 + d.p1 - 1.0) < 1e-10);
}
