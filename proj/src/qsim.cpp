#include "gpq/qsim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gpq {

namespace {

constexpr std::int64_t kDimensionGuard = std::int64_t{1} << 18;

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

bool exactly_zero(const Complex& a) { return a.real() == 0.0 && a.imag() == 0.0; }

}  // namespace

void RegisterLayout::check_guard() const {
  require(!dims.empty(), "layout needs at least one register");
  for (auto d : dims) require(d >= 1, "register dimensions must be positive");
  require(total() <= kDimensionGuard, "state dimension exceeds the 2^18 guard");
}

StateVector ground_state(const RegisterLayout& layout) {
  StateVector psi(static_cast<std::size_t>(layout.total()), Complex{0.0, 0.0});
  psi[0] = Complex{1.0, 0.0};
  return psi;
}

double norm_squared(const StateVector& psi) {
  double s = 0.0;
  for (const auto& a : psi) s += std::norm(a);
  return s;
}

void apply_gate(StateVector& psi, const RegisterLayout& layout, const Gate& gate) {
  const int nregs = static_cast<int>(layout.dims.size());
  std::int64_t gate_dim = 1;
  std::vector<char> in_gate(nregs, 0);
  for (int reg : gate.regs) {
    require(reg >= 0 && reg < nregs && !in_gate[reg], "gate registers must be distinct and valid");
    in_gate[reg] = 1;
    gate_dim *= layout.dims[reg];
  }
  require(gate.mat.rows() == gate_dim && gate.mat.cols() == gate_dim,
          "gate matrix does not match its registers");

  // Amplitude offsets of the gate-register basis labels, in matrix row order.
  std::vector<std::int64_t> offsets(static_cast<std::size_t>(gate_dim));
  for (std::int64_t b = 0; b < gate_dim; ++b) {
    std::int64_t rest = b;
    std::int64_t off = 0;
    for (auto it = gate.regs.rbegin(); it != gate.regs.rend(); ++it) {
      const std::int64_t d = layout.dims[*it];
      off += (rest % d) * layout.stride(*it);
      rest /= d;
    }
    offsets[static_cast<std::size_t>(b)] = off;
  }

  std::vector<int> rest_regs;
  for (int r = 0; r < nregs; ++r)
    if (!in_gate[r]) rest_regs.push_back(r);

  Eigen::VectorXcd in(gate_dim), out(gate_dim);
  std::vector<std::int64_t> label(rest_regs.size(), 0);
  while (true) {
    std::int64_t base = 0;
    for (std::size_t i = 0; i < rest_regs.size(); ++i) base += label[i] * layout.stride(rest_regs[i]);
    for (std::int64_t b = 0; b < gate_dim; ++b)
      in[b] = psi[static_cast<std::size_t>(base + offsets[static_cast<std::size_t>(b)])];
    out.noalias() = gate.mat * in;
    for (std::int64_t b = 0; b < gate_dim; ++b)
      psi[static_cast<std::size_t>(base + offsets[static_cast<std::size_t>(b)])] = out[b];

    int k = static_cast<int>(rest_regs.size()) - 1;
    while (k >= 0) {
      if (++label[k] < layout.dims[rest_regs[k]]) break;
      label[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
}

void apply_plain_oracle(StateVector& psi, const RegisterLayout& layout, int index_reg, int bit_reg,
                        const Hypergraph& x) {
  const std::int64_t m = layout.dims[index_reg];
  require(m == static_cast<std::int64_t>(x.indexer().edge_count()),
          "index register dimension must equal the edge count");
  require(layout.dims[bit_reg] == 2, "bit register must have dimension 2");
  const std::int64_t bit_stride = layout.stride(bit_reg);
  const std::int64_t total = layout.total();
  for (std::int64_t idx = 0; idx < total; ++idx) {
    if (layout.digit(idx, bit_reg) != 0) continue;
    const std::int64_t i = layout.digit(idx, index_reg);
    if (x.bit(static_cast<EdgeIndex>(i) + 1) != 0)
      std::swap(psi[static_cast<std::size_t>(idx)], psi[static_cast<std::size_t>(idx + bit_stride)]);
  }
}

void apply_extended_oracle(StateVector& psi, const RegisterLayout& layout, int index_reg,
                           int bit_reg, const Hypergraph& x, QueryLog* log) {
  const std::int64_t n_dim = layout.dims[index_reg];
  const EdgeIndex m = x.indexer().edge_count();
  const EdgeIndex n_ext = x.indexer().extended_count();
  require(n_dim == static_cast<std::int64_t>(n_ext),
          "index register dimension must equal the extended count");
  require(layout.dims[bit_reg] == 2, "bit register must have dimension 2");

  const std::int64_t total = layout.total();
  std::vector<char> has_support(static_cast<std::size_t>(n_dim), 0);
  for (std::int64_t idx = 0; idx < total; ++idx)
    if (!exactly_zero(psi[static_cast<std::size_t>(idx)]))
      has_support[static_cast<std::size_t>(layout.digit(idx, index_reg))] = 1;

  const std::int64_t bit_stride = layout.stride(bit_reg);
  for (std::int64_t v = 0; v < n_dim; ++v) {
    if (!has_support[static_cast<std::size_t>(v)]) continue;
    const EdgeIndex represented = (v == 0) ? n_ext : static_cast<EdgeIndex>(v);
    if (represented > m) continue;
    if (log != nullptr) log->insert(represented);
    if (x.bit(represented) == 0) continue;
    for (std::int64_t idx = 0; idx < total; ++idx) {
      if (layout.digit(idx, index_reg) != v || layout.digit(idx, bit_reg) != 0) continue;
      std::swap(psi[static_cast<std::size_t>(idx)], psi[static_cast<std::size_t>(idx + bit_stride)]);
    }
  }
}

namespace {

void apply_shift_impl(StateVector& psi, const RegisterLayout& layout, int edge_reg,
                      int pointer_reg, const EdgeMap& F, bool inverse) {
  const std::int64_t m = layout.dims[edge_reg];
  const std::int64_t n_dim = layout.dims[pointer_reg];
  require(m == static_cast<std::int64_t>(F.to.size()),
          "edge register dimension must equal the map domain");
  const std::int64_t ptr_stride = layout.stride(pointer_reg);
  const std::int64_t total = layout.total();
  StateVector next(static_cast<std::size_t>(total), Complex{0.0, 0.0});
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const Complex& a = psi[static_cast<std::size_t>(idx)];
    const std::int64_t i = layout.digit(idx, edge_reg);
    const std::int64_t j = layout.digit(idx, pointer_reg);
    const std::int64_t shift = static_cast<std::int64_t>(F.to[static_cast<std::size_t>(i)]) % n_dim;
    const std::int64_t j2 = inverse ? (j + n_dim - shift) % n_dim : (j + shift) % n_dim;
    next[static_cast<std::size_t>(idx + (j2 - j) * ptr_stride)] = a;
  }
  psi = std::move(next);
}

}  // namespace

void apply_shift_oracle(StateVector& psi, const RegisterLayout& layout, int edge_reg,
                        int pointer_reg, const EdgeMap& F) {
  apply_shift_impl(psi, layout, edge_reg, pointer_reg, F, false);
}

void apply_shift_adjoint_oracle(StateVector& psi, const RegisterLayout& layout, int edge_reg,
                                int pointer_reg, const EdgeMap& F) {
  apply_shift_impl(psi, layout, edge_reg, pointer_reg, F, true);
}

void apply_composed_oracle(StateVector& psi, const RegisterLayout& layout, int edge_reg,
                           int pointer_reg, int bit_reg, const Hypergraph& x, const EdgeMap& F,
                           QueryLog* log) {
  apply_shift_oracle(psi, layout, edge_reg, pointer_reg, F);
  apply_extended_oracle(psi, layout, pointer_reg, bit_reg, x, log);
  apply_shift_adjoint_oracle(psi, layout, edge_reg, pointer_reg, F);
}

void QueryCircuit::validate() const {
  layout.check_guard();
  require(stages.size() == slots.size() + 1, "need one more stage than slots");
  const int nregs = static_cast<int>(layout.dims.size());
  require(output_reg >= 0 && output_reg < nregs && layout.dims[output_reg] == 2,
          "output register must exist and have dimension 2");
  for (const auto& slot : slots) {
    require(slot.index_reg >= 0 && slot.index_reg < nregs, "slot index register out of range");
    require(slot.bit_reg >= 0 && slot.bit_reg < nregs && layout.dims[slot.bit_reg] == 2,
            "slot bit register must have dimension 2");
  }
  for (const auto& stage : stages) {
    for (const auto& gate : stage) {
      std::int64_t dim = 1;
      std::vector<char> seen(nregs, 0);
      for (int reg : gate.regs) {
        require(reg >= 0 && reg < nregs && !seen[reg], "gate registers must be distinct and valid");
        seen[reg] = 1;
        dim *= layout.dims[reg];
      }
      require(gate.mat.rows() == dim && gate.mat.cols() == dim, "gate matrix shape mismatch");
      const double dev = (gate.mat.adjoint() * gate.mat -
                          Eigen::MatrixXcd::Identity(dim, dim))
                             .cwiseAbs()
                             .maxCoeff();
      require(dev <= 1e-10, "gate is not unitary to 1e-10");
    }
  }
}

BitDistribution measure_register(const StateVector& psi, const RegisterLayout& layout, int reg) {
  require(layout.dims[reg] == 2, "measured register must have dimension 2");
  BitDistribution d;
  const std::int64_t total = layout.total();
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const double w = std::norm(psi[static_cast<std::size_t>(idx)]);
    if (layout.digit(idx, reg) == 0)
      d.p0 += w;
    else
      d.p1 += w;
  }
  return d;
}

StateVector run_circuit_state(const QueryCircuit& c, const Hypergraph& x,
                              const StateVector* initial) {
  c.layout.check_guard();
  StateVector psi = initial != nullptr ? *initial : ground_state(c.layout);
  require(psi.size() == static_cast<std::size_t>(c.layout.total()), "initial state size mismatch");
  for (std::size_t s = 0; s < c.stages.size(); ++s) {
    for (const auto& gate : c.stages[s]) apply_gate(psi, c.layout, gate);
    if (s < c.slots.size())
      apply_plain_oracle(psi, c.layout, c.slots[s].index_reg, c.slots[s].bit_reg, x);
  }
  return psi;
}

BitDistribution run_circuit(const QueryCircuit& c, const Hypergraph& x,
                            const StateVector* initial) {
  const StateVector psi = run_circuit_state(c, x, initial);
  return measure_register(psi, c.layout, c.output_reg);
}

QueryCircuit coherent_majority3_circuit(const QueryCircuit& c) {
  const int base_regs = static_cast<int>(c.layout.dims.size());
  const int q = c.query_count();

  QueryCircuit out;
  for (int copy = 0; copy < 3; ++copy)
    for (auto d : c.layout.dims) out.layout.dims.push_back(d);
  out.layout.dims.push_back(2);
  const int maj_reg = 3 * base_regs;
  out.layout.check_guard();
  out.output_reg = maj_reg;

  auto shifted = [&](const Gate& g, int copy) {
    Gate h = g;
    for (auto& reg : h.regs) reg += copy * base_regs;
    return h;
  };

  out.stages.assign(static_cast<std::size_t>(3 * q + 1), {});
  for (int copy = 0; copy < 3; ++copy) {
    for (int s = 0; s <= q; ++s) {
      auto& stage = out.stages[static_cast<std::size_t>(copy * q + s)];
      for (const auto& gate : c.stages[static_cast<std::size_t>(s)])
        stage.push_back(shifted(gate, copy));
      if (s < q) {
        OracleSlot slot = c.slots[static_cast<std::size_t>(s)];
        slot.index_reg += copy * base_regs;
        slot.bit_reg += copy * base_regs;
        out.slots.push_back(slot);
      }
    }
  }

  // out ^= majority(y0, y1, y2) as a permutation on the three copy outputs
  // and the fresh majority bit.
  Eigen::MatrixXcd maj = Eigen::MatrixXcd::Zero(16, 16);
  for (int b = 0; b < 16; ++b) {
    const int y0 = (b >> 3) & 1, y1 = (b >> 2) & 1, y2 = (b >> 1) & 1, o = b & 1;
    const int vote = (y0 + y1 + y2 >= 2) ? 1 : 0;
    const int target = (y0 << 3) | (y1 << 2) | (y2 << 1) | (o ^ vote);
    maj(target, b) = 1.0;
  }
  Gate maj_gate;
  maj_gate.mat = std::move(maj);
  maj_gate.regs = {c.output_reg, base_regs + c.output_reg, 2 * base_regs + c.output_reg, maj_reg};
  out.stages.back().push_back(std::move(maj_gate));
  return out;
}

SubstitutedCircuit::SubstitutedCircuit(const QueryCircuit& base, const EdgeIndexer& indexer,
                                       EdgeMap F)
    : circuit_(base), F_(std::move(F)) {
  require(F_.to.size() == indexer.edge_count(), "map domain must cover all edges");
  for (EdgeIndex v : F_.to)
    require(v >= 1 && v <= indexer.extended_count(), "map image outside the extended index space");
  for (const auto& slot : base.slots)
    require(base.layout.dims[slot.index_reg] == static_cast<std::int64_t>(indexer.edge_count()),
            "slot index register dimension must equal the edge count");
  pointer_reg_ = static_cast<int>(circuit_.layout.dims.size());
  circuit_.layout.dims.push_back(static_cast<std::int64_t>(indexer.extended_count()));
  circuit_.layout.check_guard();
}

StateVector SubstitutedCircuit::run_state(const Hypergraph& x, QueryLog* log) const {
  StateVector psi = ground_state(circuit_.layout);
  for (std::size_t s = 0; s < circuit_.stages.size(); ++s) {
    for (const auto& gate : circuit_.stages[s]) apply_gate(psi, circuit_.layout, gate);
    if (s < circuit_.slots.size())
      apply_composed_oracle(psi, circuit_.layout, circuit_.slots[s].index_reg, pointer_reg_,
                            circuit_.slots[s].bit_reg, x, F_, log);
  }
  return psi;
}

BitDistribution SubstitutedCircuit::run(const Hypergraph& x, QueryLog* log) const {
  const StateVector psi = run_state(x, log);
  return measure_register(psi, circuit_.layout, circuit_.output_reg);
}

SubstitutedCircuit substitute_oracles(const QueryCircuit& base, const EdgeIndexer& indexer,
                                      const EdgeMap& F) {
  return SubstitutedCircuit(base, indexer, F);
}

namespace {

double gauss(Rng& rng) {
  const double u1 = 1.0 - rng.unit();
  const double u2 = rng.unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

Eigen::MatrixXcd random_unitary(int dim, Rng& rng) {
  Eigen::MatrixXcd a(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) a(r, c) = Complex(gauss(rng), gauss(rng)) / std::sqrt(2.0);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? (d / mag) : Complex{1.0, 0.0};
  }
  return q;
}

QueryCircuit random_query_circuit(std::int64_t m, std::int64_t w, int q, Rng& rng) {
  QueryCircuit c;
  c.layout.dims = {m, 2, w};
  c.layout.check_guard();
  c.output_reg = 1;
  const int dim = static_cast<int>(m * 2 * w);
  for (int s = 0; s <= q; ++s) {
    Gate g;
    g.mat = random_unitary(dim, rng);
    g.regs = {0, 1, 2};
    c.stages.push_back({std::move(g)});
    if (s < q) c.slots.push_back(OracleSlot{0, 1});
  }
  return c;
}

QueryCircuit parity_circuit(std::int64_t m) {
  QueryCircuit c;
  c.layout.dims = {m, 2};
  c.layout.check_guard();
  c.output_reg = 1;

  Eigen::MatrixXcd cycle = Eigen::MatrixXcd::Zero(m, m);
  for (std::int64_t i = 0; i < m; ++i) cycle((i + 1) % m, i) = 1.0;

  c.stages.emplace_back();
  for (std::int64_t s = 1; s < m; ++s) {
    Gate g;
    g.mat = cycle;
    g.regs = {0};
    c.stages.push_back({std::move(g)});
  }
  c.stages.emplace_back();
  c.slots.assign(static_cast<std::size_t>(m), OracleSlot{0, 1});
  return c;
}

QueryCircuit deutsch_circuit() {
  QueryCircuit c;
  c.layout.dims = {2, 2};
  c.output_reg = 0;

  Eigen::MatrixXcd h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  h /= std::sqrt(2.0);
  Eigen::MatrixXcd x01(2, 2);
  x01 << 0.0, 1.0, 1.0, 0.0;

  Gate h_index{h, {0}};
  Gate flip_bit{x01, {1}};
  Gate h_bit{h, {1}};
  c.stages.push_back({h_index, flip_bit, h_bit});
  c.slots.push_back(OracleSlot{0, 1});
  c.stages.push_back({Gate{h, {0}}});
  return c;
}

}  // namespace gpq
