#include "gpq/dr_sampler.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gpq {

namespace {

bool satisfies(const EdgeIndexer& indexer, const VertexMap& f,
               const std::vector<MapConstraint>& constraints) {
  std::vector<int> image;
  for (const MapConstraint& c : constraints) {
    const std::vector<int> verts = indexer.unrank(c.edge);
    image.clear();
    for (int u : verts) image.push_back(f(u));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (indexer.rank(image) != c.target) return false;
  }
  return true;
}

void check_constraints(const EdgeIndexer& indexer, const std::vector<MapConstraint>& constraints) {
  for (const MapConstraint& c : constraints) {
    if (c.edge < 1 || c.edge > indexer.edge_count()) {
      throw std::invalid_argument("constraint edge must lie in [M]");
    }
    if (c.target < 1 || c.target > indexer.extended_count()) {
      throw std::invalid_argument("constraint target must lie in [N]");
    }
  }
}

}  // namespace

SampledMap sample_dr(const DrSpec& spec, Rng& rng) {
  const EdgeIndexer indexer(spec.n, spec.l);
  VertexMap f;
  f.to.resize(spec.n);
  if (spec.resolution.infinite) {
    std::vector<int> perm(spec.n);
    for (int u = 0; u < spec.n; ++u) perm[u] = u + 1;
    rng.shuffle(perm);
    f.to = perm;
  } else {
    const int r = spec.resolution.r;
    if (r < 1) throw std::invalid_argument("sample_dr: r must be >= 1");
    std::vector<int> g(spec.n);
    for (int u = 0; u < spec.n; ++u) g[u] = 1 + rng.below_int(r);
    std::vector<int> s_sorted(g);
    std::sort(s_sorted.begin(), s_sorted.end());
    s_sorted.erase(std::unique(s_sorted.begin(), s_sorted.end()), s_sorted.end());
    // Uniform injection h: S -> [n] via a partial shuffle, assigned to the
    // elements of S in ascending order.
    const std::vector<int> h_values = rng.sample_distinct(spec.n, static_cast<int>(s_sorted.size()));
    std::vector<int> h_of(r + 1, 0);
    for (std::size_t i = 0; i < s_sorted.size(); ++i) h_of[s_sorted[i]] = h_values[i];
    for (int u = 0; u < spec.n; ++u) f.to[u] = h_of[g[u]];
  }
  SampledMap out;
  out.F = induce_edge_map(indexer, f);
  out.f = std::move(f);
  out.resolution = spec.resolution;
  return out;
}

Rational exact_constraint_prob(const DrSpec& spec, const std::vector<MapConstraint>& constraints) {
  const EdgeIndexer indexer(spec.n, spec.l);
  check_constraints(indexer, constraints);
  const int n = spec.n;
  if (spec.resolution.infinite) {
    if (n > 8) throw std::invalid_argument("exact_constraint_prob: n! enumeration guarded to n <= 8");
    std::vector<int> perm(n);
    for (int u = 0; u < n; ++u) perm[u] = u + 1;
    BigInt hits = 0, total = 0;
    do {
      ++total;
      if (satisfies(indexer, VertexMap{perm}, constraints)) ++hits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Rational(hits, total);
  }

  const int r = spec.resolution.r;
  if (r < 1) throw std::invalid_argument("exact_constraint_prob: r must be >= 1");
  if (n > 5 || r > 8) {
    throw std::invalid_argument("exact_constraint_prob: guarded to n <= 5 and r <= 8");
  }

  // Sum over all g in [r]^n; for each, average the constraint indicator over
  // every injection h: range(g) -> [n].
  Rational total = 0;
  std::vector<int> g(n, 1);
  VertexMap f;
  f.to.resize(n);
  while (true) {
    std::vector<int> s_sorted(g);
    std::sort(s_sorted.begin(), s_sorted.end());
    s_sorted.erase(std::unique(s_sorted.begin(), s_sorted.end()), s_sorted.end());
    const int t = static_cast<int>(s_sorted.size());

    // Enumerate ordered t-tuples of distinct values from [n] as h values.
    std::vector<int> sel(t, 0);
    std::vector<char> used(n + 1, 0);
    BigInt hits = 0;
    BigInt count = 0;
    int depth = 0;
    sel[0] = 0;
    while (depth >= 0) {
      if (sel[depth] > 0) used[sel[depth]] = 0;
      int v = sel[depth] + 1;
      while (v <= n && used[v]) ++v;
      if (v > n) {
        sel[depth] = 0;
        --depth;
        continue;
      }
      sel[depth] = v;
      used[v] = 1;
      if (depth + 1 == t) {
        ++count;
        for (int u = 0; u < n; ++u) {
          const int pos = static_cast<int>(std::lower_bound(s_sorted.begin(), s_sorted.end(), g[u]) -
                                           s_sorted.begin());
          f.to[u] = sel[pos];
        }
        if (satisfies(indexer, f, constraints)) ++hits;
      } else {
        ++depth;
        sel[depth] = 0;
      }
    }
    total += Rational(hits, count);

    int pos = n - 1;
    while (pos >= 0 && g[pos] == r) {
      g[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++g[pos];
  }
  return total / Rational(pow_big(r, n));
}

Rational dr_f_weight(int n, int r, int range_size) {
  if (range_size > r) return Rational(0);
  return Rational(falling_factorial_big(r, range_size),
                  pow_big(r, n) * falling_factorial_big(n, range_size));
}

std::vector<std::pair<VertexMap, Rational>> enumerate_f_weights(int n, int r) {
  if (n > 6) throw std::invalid_argument("enumerate_f_weights: guarded to n <= 6");
  std::vector<std::pair<VertexMap, Rational>> out;
  std::vector<int> f(n, 1);
  while (true) {
    std::set<int> range(f.begin(), f.end());
    Rational w = dr_f_weight(n, r, static_cast<int>(range.size()));
    if (!w.is_zero()) out.push_back({VertexMap{f}, w});
    int pos = n - 1;
    while (pos >= 0 && f[pos] == n) {
      f[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++f[pos];
  }
  return out;
}

std::vector<std::pair<VertexMap, Rational>> enumerate_permutation_weights(int n) {
  if (n > 8) throw std::invalid_argument("enumerate_permutation_weights: guarded to n <= 8");
  std::vector<std::pair<VertexMap, Rational>> out;
  std::vector<int> perm(n);
  for (int u = 0; u < n; ++u) perm[u] = u + 1;
  const Rational w(1, factorial_big(n));
  do {
    out.push_back({VertexMap{perm}, w});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

/** Multiply the polynomial (in-place, coefficients low to high) by (x - a). */
void mul_linear(std::vector<Rational>& poly, const Rational& a) {
  poly.push_back(Rational(0));
  for (std::size_t i = poly.size() - 1; i > 0; --i) {
    poly[i] = poly[i - 1] - a * poly[i];
  }
  poly[0] = -a * poly[0];
}

Rational eval_poly(const std::vector<Rational>& poly, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = poly.size(); i > 0; --i) acc = acc * x + poly[i - 1];
  return acc;
}

}  // namespace

PolyFitReport verify_poly_degree(int n, int l, const std::vector<MapConstraint>& constraints) {
  const int k = static_cast<int>(constraints.size());
  if (k < 1) throw std::invalid_argument("verify_poly_degree: need at least one constraint");
  const int kl = k * l;

  PolyFitReport report;
  report.degree_bound = kl - 1;

  std::vector<Rational> xs;  // nodes 1/r
  for (int r = 1; r <= kl; ++r) {
    DrSpec spec{n, l, Resolution::finite(r)};
    report.nodes_prob.push_back(exact_constraint_prob(spec, constraints));
    xs.push_back(Rational(1, r));
  }

  // Lagrange interpolation, expanded to monomial coefficients.
  report.coefficients.assign(kl, Rational(0));
  for (int j = 0; j < kl; ++j) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (int i = 0; i < kl; ++i) {
      if (i == j) continue;
      mul_linear(basis, xs[i]);
      denom *= xs[j] - xs[i];
    }
    const Rational scale = report.nodes_prob[j] / denom;
    for (std::size_t d = 0; d < basis.size(); ++d) {
      report.coefficients[d] += scale * basis[d];
    }
  }

  report.exact_fit = true;
  for (int r = kl + 1; r <= kl + 4; ++r) {
    DrSpec spec{n, l, Resolution::finite(r)};
    const Rational actual = exact_constraint_prob(spec, constraints);
    const Rational res = eval_poly(report.coefficients, Rational(1, r)) - actual;
    if (!res.is_zero()) report.exact_fit = false;
    report.residuals.push_back(res);
  }
  DrSpec inf_spec{n, l, Resolution::infinity()};
  report.residual_at_infinity =
      eval_poly(report.coefficients, Rational(0)) - exact_constraint_prob(inf_spec, constraints);
  if (!report.residual_at_infinity.is_zero()) report.exact_fit = false;
  return report;
}

}  // namespace gpq
