#pragma once

#include "gpq/dr_sampler.hpp"
#include "gpq/qsim.hpp"

#include <cstdint>
#include <vector>

namespace gpq {

/** Interpolation degree d = 12ql - 1 for a q-query circuit on l-uniform inputs. */
int degree_parameter(int q, int l);

/** Resolution that brings the closeness bound below the majority-vote slack:
 * ceil(pi^2 d^3 * 27 / 6). Overflow-guarded. */
std::int64_t s_param(int q, int l);

/** Output closeness bound pi^2 d^3 / (3r) between resolution r and infinity. */
double closeness_bound(int q, int l, double r);

/** One run of the randomized evaluator against a resolution-r map. */
struct DequantizeOutcome {
  SampledMap map;
  std::vector<EdgeIndex> support;  // Im(F) within [M], ascending
  int range_size = 0;              // |Im(f)|
  int classical_cost = 0;          // |support|, at most C(range_size, l)
  double p1 = 0.0;                 // boosted one-probability under the composed oracle
  int output = 0;                  // Bernoulli(p1) draw
  int shift_gates = 0;             // structural: 3q per boosted evaluation
  int shift_adjoint_gates = 0;     // structural: 3q per boosted evaluation
};

/** The randomized simulator R for one boosted evaluation: draw F from D_r,
 * read x only on Im(F) within [M], and evaluate the majority-boosted
 * substituted circuit on the masked input. Throws logic_error if the circuit
 * touches a bit outside the declared support (it never should).
 *
 * The base circuit is the unboosted q-query circuit; boosting is the
 * majority vote of three evaluations, computed from the exact single-run
 * output distribution.
 */
DequantizeOutcome run_dequantized(const QueryCircuit& base, const EdgeIndexer& indexer,
                                  const Hypergraph& x, Resolution r, Rng& rng);

/** Output-mixture comparison between resolution r and infinite resolution. */
struct ClosenessReport {
  int r = 0;
  double p_finite = 0.0;    // mixture one-probability at resolution r
  double p_infinite = 0.0;  // exact mixture one-probability over permutations
  double tv = 0.0;          // |p_finite - p_infinite|
  double l1 = 0.0;          // 2 * tv for distributions on one bit
  double bound = 0.0;       // closeness_bound at this r
  double sigma = 0.0;       // standard error of p_finite; 0 when exact
  int samples = 0;          // 0 when exact
};

/** Exact comparison: full enumeration of map weights at resolution r against
 * the uniform permutation mixture. Guarded to n <= 6. */
ClosenessReport closeness_exact(const QueryCircuit& base, const EdgeIndexer& indexer,
                                const Hypergraph& x, int r);

/** Monte-Carlo comparison: sampled maps at resolution r (outputs cached per
 * distinct f), exact permutation mixture on the infinite side. */
ClosenessReport closeness_sampled(const QueryCircuit& base, const EdgeIndexer& indexer,
                                  const Hypergraph& x, int r, int samples, Rng& rng);

}  // namespace gpq
