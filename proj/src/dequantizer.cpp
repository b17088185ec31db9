#include "gpq/dequantizer.hpp"

#include "gpq/rational.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace gpq {

int degree_parameter(int q, int l) {
  if (q < 1 || l < 1) throw std::invalid_argument("degree_parameter needs q, l >= 1");
  return 12 * q * l - 1;
}

std::int64_t s_param(int q, int l) {
  const double d = static_cast<double>(degree_parameter(q, l));
  const double value = std::ceil(std::numbers::pi * std::numbers::pi * d * d * d * 27.0 / 6.0);
  if (!(value < 9.0e18)) throw std::overflow_error("s_param exceeds 64 bits");
  return static_cast<std::int64_t>(value);
}

double closeness_bound(int q, int l, double r) {
  const double d = static_cast<double>(degree_parameter(q, l));
  return std::numbers::pi * std::numbers::pi * d * d * d / (3.0 * r);
}

namespace {

double boosted_p1(const QueryCircuit& base, const EdgeIndexer& indexer, const Hypergraph& x,
                  const EdgeMap& F, QueryLog* log = nullptr) {
  const SubstitutedCircuit sub(base, indexer, F);
  return majority3(sub.run(x, log).p1);
}

}  // namespace

DequantizeOutcome run_dequantized(const QueryCircuit& base, const EdgeIndexer& indexer,
                                  const Hypergraph& x, Resolution r, Rng& rng) {
  DequantizeOutcome out;
  out.map = sample_dr(DrSpec{indexer.n(), indexer.l(), r}, rng);

  std::vector<char> in_range(indexer.n() + 1, 0);
  for (int v : out.map.f.to) in_range[v] = 1;
  for (int v = 1; v <= indexer.n(); ++v) out.range_size += in_range[v];

  const EdgeIndex m = indexer.edge_count();
  std::vector<char> in_support(m + 1, 0);
  for (EdgeIndex v : out.map.F.to)
    if (v >= 1 && v <= m) in_support[v] = 1;
  for (EdgeIndex i = 1; i <= m; ++i)
    if (in_support[i]) out.support.push_back(i);
  out.classical_cost = static_cast<int>(out.support.size());
  if (static_cast<std::uint64_t>(out.classical_cost) > binomial(out.range_size, indexer.l()))
    throw std::logic_error("support exceeds the C(|Im(f)|, l) cost bound");

  Hypergraph masked = Hypergraph::zeros(indexer.n(), indexer.l());
  for (EdgeIndex i : out.support) masked.set_bit(i, x.bit(i));

  QueryLog log;
  out.p1 = boosted_p1(base, indexer, masked, out.map.F, &log);
  for (EdgeIndex read : log)
    if (read > m || !in_support[read])
      throw std::logic_error("circuit read a bit outside the declared support");

  out.output = rng.bernoulli(out.p1) ? 1 : 0;
  out.shift_gates = 3 * base.query_count();
  out.shift_adjoint_gates = 3 * base.query_count();
  return out;
}

namespace {

double permutation_mixture_p1(const QueryCircuit& base, const EdgeIndexer& indexer,
                              const Hypergraph& x) {
  double acc = 0.0;
  for (const auto& [f, w] : enumerate_permutation_weights(indexer.n()))
    acc += to_double(w) * boosted_p1(base, indexer, x, induce_edge_map(indexer, f));
  return acc;
}

}  // namespace

ClosenessReport closeness_exact(const QueryCircuit& base, const EdgeIndexer& indexer,
                                const Hypergraph& x, int r) {
  ClosenessReport rep;
  rep.r = r;
  rep.bound = closeness_bound(base.query_count(), indexer.l(), static_cast<double>(r));

  double p_fin = 0.0;
  for (const auto& [f, w] : enumerate_f_weights(indexer.n(), r))
    p_fin += to_double(w) * boosted_p1(base, indexer, x, induce_edge_map(indexer, f));
  rep.p_finite = p_fin;
  rep.p_infinite = permutation_mixture_p1(base, indexer, x);
  rep.tv = std::abs(rep.p_finite - rep.p_infinite);
  rep.l1 = 2.0 * rep.tv;
  return rep;
}

ClosenessReport closeness_sampled(const QueryCircuit& base, const EdgeIndexer& indexer,
                                  const Hypergraph& x, int r, int samples, Rng& rng) {
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  ClosenessReport rep;
  rep.r = r;
  rep.samples = samples;
  rep.bound = closeness_bound(base.query_count(), indexer.l(), static_cast<double>(r));

  std::map<std::vector<int>, double> cache;
  double sum = 0.0, sum_sq = 0.0;
  for (int t = 0; t < samples; ++t) {
    const SampledMap sm = sample_dr(DrSpec{indexer.n(), indexer.l(), Resolution::finite(r)}, rng);
    auto it = cache.find(sm.f.to);
    if (it == cache.end())
      it = cache.emplace(sm.f.to, boosted_p1(base, indexer, x, sm.F)).first;
    sum += it->second;
    sum_sq += it->second * it->second;
  }
  const double mean = sum / samples;
  const double var = std::max(0.0, (sum_sq - samples * mean * mean) / (samples - 1));
  rep.p_finite = mean;
  rep.sigma = std::sqrt(var / samples);
  rep.p_infinite = permutation_mixture_p1(base, indexer, x);
  rep.tv = std::abs(rep.p_finite - rep.p_infinite);
  rep.l1 = 2.0 * rep.tv;
  return rep;
}

}  // namespace gpq
