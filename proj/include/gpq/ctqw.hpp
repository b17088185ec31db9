#pragma once

#include "gpq/glued_trees.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <vector>

namespace gpq {

/** Column-reduced continuous-time walk on glued trees.
 *
 * Column-uniform states are invariant under the glued-trees adjacency matrix,
 * so the walk started at ENTRANCE lives in the (2k+2)-dimensional column
 * basis. The reduced Hamiltonian is tridiagonal with hopping sqrt(2) between
 * adjacent tree levels and 2 across the central gluing junction; it is
 * eigendecomposed once and evaluated at any t exactly.
 */
class ReducedWalk {
 public:
  /** 1 <= k <= 200 (guard). */
  explicit ReducedWalk(int k);

  int k() const { return k_; }
  int dim() const { return 2 * k_ + 2; }
  const Eigen::MatrixXd& hamiltonian() const { return h_; }

  /** P(column j at time t) starting from column 0 (ENTRANCE). */
  std::vector<double> column_profile(double t) const;

  /** P(EXIT column) at time t. */
  double exit_probability(double t) const;

  /** {P(column 2k), P(column 2k+1)} at time t. */
  std::array<double, 2> tail_probabilities(double t) const;

 private:
  int k_;
  Eigen::MatrixXd h_;
  Eigen::VectorXd evals_;
  Eigen::MatrixXd evecs_;
  Eigen::VectorXd start_coeff_;  // evecs row of the start column
};

/** Unweighted symmetric adjacency in CSR form, over a basis of instance
 * labels (ascending). */
struct SparseAdjacency {
  std::int64_t dim = 0;
  std::vector<std::int64_t> row_start;      // dim + 1
  std::vector<std::int32_t> col;            // basis indices
  std::vector<std::int64_t> vertex_label;   // basis index -> label
  int max_degree = 0;

  std::int64_t index_of(std::int64_t label) const;  // -1 if absent
  void validate() const;                            // symmetry, CSR shape
};

/** Adjacency of the glued-trees subgraph (roles ENTRANCE/GLUED/EXIT), plus
 * the MARKER vertices and their EXIT edges when include_marker_edges is set.
 * Guarded to k <= 8 (full-simulation scale). */
SparseAdjacency glued_subgraph(const GluedTrees& g, bool include_marker_edges);

/** |e^{-iHt} |start>|^2 per basis element, H the CSR adjacency, via Krylov
 * (Lanczos) exponential action with full reorthogonalization; steps sized so
 * ||H|| dt <= 5. Norm conserved to 1e-9 or throws. */
std::vector<double> ctqw_evolve(const SparseAdjacency& a, double t, std::int64_t start);

/** Dense eigendecomposition path for cross-checks; requires symmetry. */
std::vector<double> ctqw_evolve_dense(const Eigen::MatrixXd& h, double t, std::int64_t start);

/** Walk-time sweep outcome over the 0.02 grid on [0.5, 20k]. */
struct WalkTimeChoice {
  double t = 0;            // argmin of (ceil(t)+4)/(p_exit+p_col2k)
  double p_exit = 0;
  double p_col2k = 0;
  double objective = 0;
  double peak_p_exit = 0;  // max exit-column probability over the sweep
  double peak_t = 0;
};

WalkTimeChoice choose_walk_time(const ReducedWalk& w, double grid = 0.02);

}  // namespace gpq
