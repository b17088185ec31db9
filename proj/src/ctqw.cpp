#include "gpq/ctqw.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace gpq {

namespace {

constexpr std::int64_t kDimensionGuard = std::int64_t{1} << 18;

using Cd = std::complex<double>;

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

ReducedWalk::ReducedWalk(int k) : k_(k) {
  require(k >= 1 && k <= 200, "reduced walk requires 1 <= k <= 200");
  const int d = 2 * k + 2;
  h_ = Eigen::MatrixXd::Zero(d, d);
  for (int j = 0; j + 1 < d; ++j) {
    const double w = (j == k) ? 2.0 : std::sqrt(2.0);
    h_(j, j + 1) = w;
    h_(j + 1, j) = w;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h_);
  evals_ = es.eigenvalues();
  evecs_ = es.eigenvectors();
  start_coeff_ = evecs_.row(0).transpose();
}

std::vector<double> ReducedWalk::column_profile(double t) const {
  const int d = dim();
  Eigen::VectorXcd w(d);
  for (int m = 0; m < d; ++m) w(m) = std::polar(start_coeff_(m), -evals_(m) * t);
  const Eigen::VectorXcd amp = evecs_ * w;
  std::vector<double> p(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) p[static_cast<std::size_t>(j)] = std::norm(amp(j));
  return p;
}

double ReducedWalk::exit_probability(double t) const {
  const int d = dim();
  Cd amp = 0;
  for (int m = 0; m < d; ++m)
    amp += evecs_(d - 1, m) * std::polar(start_coeff_(m), -evals_(m) * t);
  return std::norm(amp);
}

std::array<double, 2> ReducedWalk::tail_probabilities(double t) const {
  const int d = dim();
  Cd a0 = 0, a1 = 0;
  for (int m = 0; m < d; ++m) {
    const Cd phase = std::polar(start_coeff_(m), -evals_(m) * t);
    a0 += evecs_(d - 2, m) * phase;
    a1 += evecs_(d - 1, m) * phase;
  }
  return {std::norm(a0), std::norm(a1)};
}

std::int64_t SparseAdjacency::index_of(std::int64_t label) const {
  const auto it = std::lower_bound(vertex_label.begin(), vertex_label.end(), label);
  if (it == vertex_label.end() || *it != label) return -1;
  return it - vertex_label.begin();
}

void SparseAdjacency::validate() const {
  if (row_start.size() != static_cast<std::size_t>(dim) + 1 || row_start[0] != 0 ||
      row_start.back() != static_cast<std::int64_t>(col.size()))
    throw std::invalid_argument("malformed CSR adjacency");
  for (std::int64_t i = 0; i < dim; ++i) {
    for (std::int64_t e = row_start[i]; e < row_start[i + 1]; ++e) {
      const std::int32_t j = col[static_cast<std::size_t>(e)];
      if (j < 0 || j >= dim) throw std::invalid_argument("CSR column out of range");
      bool back = false;
      for (std::int64_t e2 = row_start[j]; e2 < row_start[j + 1] && !back; ++e2)
        back = col[static_cast<std::size_t>(e2)] == i;
      if (!back) throw std::invalid_argument("adjacency is not symmetric");
    }
  }
}

SparseAdjacency glued_subgraph(const GluedTrees& g, bool include_marker_edges) {
  require(g.k() <= 8, "full-graph walk is guarded to k <= 8");
  auto keeps = [&](std::int64_t lab) {
    const Role r = g.role(lab);
    if (r == Role::Entrance || r == Role::Glued || r == Role::Exit) return true;
    return include_marker_edges && r == Role::Marker;
  };

  SparseAdjacency a;
  for (std::int64_t lab = 1; lab <= g.label_space(); ++lab)
    if (keeps(lab)) a.vertex_label.push_back(lab);
  a.dim = static_cast<std::int64_t>(a.vertex_label.size());
  a.row_start.assign(static_cast<std::size_t>(a.dim) + 1, 0);

  for (std::int64_t i = 0; i < a.dim; ++i) {
    const std::int64_t lab = a.vertex_label[static_cast<std::size_t>(i)];
    a.row_start[static_cast<std::size_t>(i) + 1] = a.row_start[static_cast<std::size_t>(i)];
    for (int s = 0; s < g.degree(lab); ++s) {
      const std::int64_t nb = g.slot(lab, s);
      const std::int64_t j = a.index_of(nb);
      if (j < 0) continue;
      a.col.push_back(static_cast<std::int32_t>(j));
      ++a.row_start[static_cast<std::size_t>(i) + 1];
    }
    a.max_degree = std::max(
        a.max_degree, static_cast<int>(a.row_start[static_cast<std::size_t>(i) + 1] -
                                       a.row_start[static_cast<std::size_t>(i)]));
  }
  a.validate();
  return a;
}

namespace {

Eigen::VectorXcd matvec(const SparseAdjacency& a, const Eigen::VectorXcd& v) {
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(a.dim);
  for (std::int64_t i = 0; i < a.dim; ++i) {
    Cd acc = 0;
    for (std::int64_t e = a.row_start[i]; e < a.row_start[i + 1]; ++e)
      acc += v(a.col[static_cast<std::size_t>(e)]);
    w(i) = acc;
  }
  return w;
}

/** One Krylov step psi <- e^{-iA dt} psi; ||A|| dt is assumed <= 5. */
void lanczos_step(const SparseAdjacency& a, double dt, Eigen::VectorXcd& psi) {
  const int m_max = static_cast<int>(std::min<std::int64_t>(30, a.dim));
  const double norm0 = psi.norm();
  if (norm0 <= 0) throw std::runtime_error("zero state in Krylov step");

  std::vector<Eigen::VectorXcd> basis;
  basis.reserve(static_cast<std::size_t>(m_max));
  basis.push_back(psi / norm0);
  std::vector<double> alpha, beta;

  int m = m_max;
  for (int j = 0; j < m_max; ++j) {
    Eigen::VectorXcd w = matvec(a, basis[static_cast<std::size_t>(j)]);
    alpha.push_back(basis[static_cast<std::size_t>(j)].dot(w).real());
    // Full reorthogonalization keeps the basis orthonormal to machine
    // precision, which the 1e-9 norm-conservation contract relies on.
    for (const auto& b : basis) w -= b.dot(w) * b;
    for (const auto& b : basis) w -= b.dot(w) * b;
    const double b_norm = w.norm();
    if (j + 1 == m_max || b_norm < 1e-12) {
      // Breakdown means the Krylov space is an exact invariant subspace
      // (e.g. the column-symmetric subspace of a bare instance): truncate.
      m = j + 1;
      break;
    }
    beta.push_back(b_norm);
    basis.push_back(w / b_norm);
  }

  Eigen::MatrixXd tmat = Eigen::MatrixXd::Zero(m, m);
  for (int j = 0; j < m; ++j) {
    tmat(j, j) = alpha[static_cast<std::size_t>(j)];
    if (j + 1 < m) {
      tmat(j, j + 1) = beta[static_cast<std::size_t>(j)];
      tmat(j + 1, j) = beta[static_cast<std::size_t>(j)];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tmat);
  Eigen::VectorXcd coeff = Eigen::VectorXcd::Zero(m);
  for (int u = 0; u < m; ++u) {
    const Cd ph = std::polar(1.0, -es.eigenvalues()(u) * dt);
    for (int j = 0; j < m; ++j) coeff(j) += es.eigenvectors()(j, u) * ph * es.eigenvectors()(0, u);
  }
  psi.setZero();
  for (int j = 0; j < m; ++j) psi += basis[static_cast<std::size_t>(j)] * (coeff(j) * norm0);
}

}  // namespace

std::vector<double> ctqw_evolve(const SparseAdjacency& a, double t, std::int64_t start) {
  require(a.dim >= 1 && a.dim <= kDimensionGuard, "adjacency dimension outside guard");
  require(start >= 0 && start < a.dim, "start index out of range");

  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(a.dim);
  psi(start) = 1.0;
  const double h_norm = std::max(1, a.max_degree);
  const int steps = std::max(1, static_cast<int>(std::ceil(h_norm * std::abs(t) / 5.0)));
  const double dt = t / steps;
  for (int s = 0; s < steps; ++s) lanczos_step(a, dt, psi);

  const double norm2 = psi.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-9)
    throw std::runtime_error("walk evolution lost norm beyond 1e-9");
  std::vector<double> p(static_cast<std::size_t>(a.dim));
  for (std::int64_t i = 0; i < a.dim; ++i) p[static_cast<std::size_t>(i)] = std::norm(psi(i));
  return p;
}

std::vector<double> ctqw_evolve_dense(const Eigen::MatrixXd& h, double t, std::int64_t start) {
  require(h.rows() == h.cols() && h.rows() >= 1, "square matrix required");
  require(h.rows() <= (std::int64_t{1} << 12), "dense walk guarded to dimension 4096");
  require((h - h.transpose()).cwiseAbs().maxCoeff() <= 1e-12, "matrix is not symmetric");
  require(start >= 0 && start < h.rows(), "start index out of range");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  const int d = static_cast<int>(h.rows());
  Eigen::VectorXcd w(d);
  for (int m = 0; m < d; ++m)
    w(m) = std::polar(es.eigenvectors()(static_cast<int>(start), m), -es.eigenvalues()(m) * t);
  const Eigen::VectorXcd amp = es.eigenvectors() * w;
  std::vector<double> p(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) p[static_cast<std::size_t>(j)] = std::norm(amp(j));
  return p;
}

WalkTimeChoice choose_walk_time(const ReducedWalk& w, double grid) {
  require(grid > 0, "grid step must be positive");
  WalkTimeChoice best;
  best.objective = std::numeric_limits<double>::infinity();
  const double t_max = 20.0 * w.k();
  const std::int64_t steps = static_cast<std::int64_t>(std::floor((t_max - 0.5) / grid));
  for (std::int64_t i = 0; i <= steps; ++i) {
    const double t = 0.5 + static_cast<double>(i) * grid;
    const auto tail = w.tail_probabilities(t);
    const double mass = tail[0] + tail[1];
    if (tail[1] > best.peak_p_exit) {
      best.peak_p_exit = tail[1];
      best.peak_t = t;
    }
    if (mass <= 0) continue;
    const double objective = (std::ceil(t) + 4.0) / mass;
    if (objective < best.objective) {
      best.objective = objective;
      best.t = t;
      best.p_col2k = tail[0];
      best.p_exit = tail[1];
    }
  }
  return best;
}

}  // namespace gpq
