#pragma once

#include "gpq/edge_indexer.hpp"
#include "gpq/rational.hpp"
#include "gpq/rng.hpp"
#include "gpq/vertex_map.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace gpq {

/** Range resolution r of the function distribution; r = infinity is the
 * uniform-permutation endpoint. */
struct Resolution {
  bool infinite = false;
  int r = 0;

  static Resolution finite(int r) { return {false, r}; }
  static Resolution infinity() { return {true, 0}; }
};

/** Parameters of the distribution D_r over maps F: [M] -> [N].
 *
 * Finite r: draw g: [n] -> [r] uniformly, let S = range(g), draw a uniformly
 * random injection h: S -> [n], set f = h∘g and F = the induced edge map.
 * Infinite r: f is a uniformly random permutation of [n].
 */
struct DrSpec {
  int n = 0;
  int l = 0;
  Resolution resolution;
};

struct SampledMap {
  VertexMap f;
  EdgeMap F;
  Resolution resolution;
  std::uint64_t seed = 0;
};

/** One constraint F(edge) = target on the sampled edge map. */
struct MapConstraint {
  EdgeIndex edge = 0;    // in [M]
  EdgeIndex target = 0;  // in [N]
};

SampledMap sample_dr(const DrSpec& spec, Rng& rng);

/** Exact P_{F~D_r}(F(d_i) = e_i for all i), by full enumeration over g and h
 * (finite r, guarded to r^n enumerable) or over all permutations (infinite).
 */
Rational exact_constraint_prob(const DrSpec& spec, const std::vector<MapConstraint>& constraints);

/** Exact P_{D_r}(f) for a specific f with t = |range(f)|:
 * falling(r,t) / (r^n * falling(n,t)). Zero when t > r.
 *
 * This closed form is cross-checked against the step-by-step enumeration in
 * tests and is what the exact mixture experiments use for large finite r.
 */
Rational dr_f_weight(int n, int r, int range_size);

/** All n^n maps f together with their exact D_r weights. */
std::vector<std::pair<VertexMap, Rational>> enumerate_f_weights(int n, int r);

/** All n! permutations, each with weight 1/n!. */
std::vector<std::pair<VertexMap, Rational>> enumerate_permutation_weights(int n);

/** Report of fitting P(constraints) as a polynomial in 1/r. */
struct PolyFitReport {
  int degree_bound = 0;                 // kl - 1
  std::vector<Rational> nodes_prob;     // exact probabilities at r = 1..kl
  std::vector<Rational> coefficients;   // monomial coefficients in 1/r, low to high
  std::vector<Rational> residuals;      // at r = kl+1..kl+4
  Rational residual_at_infinity;        // p(0) - P_{D_inf}
  bool exact_fit = false;               // every residual exactly zero
};

/** Interpolate the exact probabilities at r = 1..kl by a polynomial in 1/r of
 * degree <= kl-1 and evaluate the residuals at r = kl+1..kl+4 and at 1/r = 0.
 * Everything is exact rational arithmetic; the residuals of a genuine
 * degree-(kl-1) polynomial vanish identically.
 */
PolyFitReport verify_poly_degree(int n, int l, const std::vector<MapConstraint>& constraints);

}  // namespace gpq
