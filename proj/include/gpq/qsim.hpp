#pragma once

#include "gpq/edge_indexer.hpp"
#include "gpq/hypergraph.hpp"
#include "gpq/rng.hpp"
#include "gpq/vertex_map.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <set>
#include <vector>

namespace gpq {

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;

/** Mixed-radix register layout; register 0 is the most significant digit. */
struct RegisterLayout {
  std::vector<std::int64_t> dims;

  std::int64_t total() const {
    std::int64_t t = 1;
    for (auto d : dims) t *= d;
    return t;
  }
  std::int64_t stride(int reg) const {
    std::int64_t s = 1;
    for (std::size_t i = static_cast<std::size_t>(reg) + 1; i < dims.size(); ++i) s *= dims[i];
    return s;
  }
  std::int64_t digit(std::int64_t index, int reg) const {
    return (index / stride(reg)) % dims[reg];
  }
  void check_guard() const;  // total() <= 2^18
};

StateVector ground_state(const RegisterLayout& layout);
double norm_squared(const StateVector& psi);

/** A dense unitary acting on a subset of registers (identity elsewhere). */
struct Gate {
  Eigen::MatrixXcd mat;
  std::vector<int> regs;  // significance order: regs[0] is the high digit of mat's row index
};

void apply_gate(StateVector& psi, const RegisterLayout& layout, const Gate& gate);

/** XOR query oracle |i>|y> -> |i>|y xor x(i+1)> on (index register of dim M, bit register). */
void apply_plain_oracle(StateVector& psi, const RegisterLayout& layout, int index_reg, int bit_reg,
                        const Hypergraph& x);

/** Record of which edge bits an extended-oracle application actually read. */
using QueryLog = std::set<EdgeIndex>;

/** Extended oracle on an index register of dim N. Label v stands for the
 * extended index v, except label 0 which stands for N. The bit x(j) is XORed
 * into the bit register exactly when the represented index j is at most M;
 * higher indices leave the state untouched. Index blocks whose amplitudes are
 * all exactly zero are skipped, and the log records every edge index whose
 * bit was read with support on the state.
 */
void apply_extended_oracle(StateVector& psi, const RegisterLayout& layout, int index_reg,
                           int bit_reg, const Hypergraph& x, QueryLog* log = nullptr);

/** Shift oracle |i>|j> -> |i>|j + F(i+1) mod N> on (edge register of dim M,
 * pointer register of dim N). */
void apply_shift_oracle(StateVector& psi, const RegisterLayout& layout, int edge_reg,
                        int pointer_reg, const EdgeMap& F);

/** Adjoint shift, implemented directly as modular subtraction. */
void apply_shift_adjoint_oracle(StateVector& psi, const RegisterLayout& layout, int edge_reg,
                                int pointer_reg, const EdgeMap& F);

/** Composed oracle: shift, extended oracle on the pointer register, adjoint
 * shift. On |i>|0>|b> this equals |i>|0>|b xor x(F(i+1))> when F(i+1) <= M
 * and the identity otherwise.
 */
void apply_composed_oracle(StateVector& psi, const RegisterLayout& layout, int edge_reg,
                           int pointer_reg, int bit_reg, const Hypergraph& x, const EdgeMap& F,
                           QueryLog* log = nullptr);

/** Where a query slot plugs into the circuit's registers. */
struct OracleSlot {
  int index_reg = 0;
  int bit_reg = 1;
};

/** A query circuit: alternating unitary stages and oracle slots, with a
 * designated dim-2 output register measured in the computational basis.
 * Stage s runs before slot s; the final stage runs after the last slot. A
 * stage is an ordered list of gates (possibly empty).
 */
struct QueryCircuit {
  RegisterLayout layout;
  std::vector<std::vector<Gate>> stages;  // slots.size() + 1 entries
  std::vector<OracleSlot> slots;
  int output_reg = 1;

  int query_count() const { return static_cast<int>(slots.size()); }
  void validate() const;  // shape, unitarity to 1e-10, dimension guard
};

struct BitDistribution {
  double p0 = 0.0;
  double p1 = 0.0;
};

BitDistribution measure_register(const StateVector& psi, const RegisterLayout& layout, int reg);

/** Run with the plain oracle O_x at every slot. Exact Born statistics. */
BitDistribution run_circuit(const QueryCircuit& c, const Hypergraph& x,
                            const StateVector* initial = nullptr);

/** Final state, for tests and cross-checks. */
StateVector run_circuit_state(const QueryCircuit& c, const Hypergraph& x,
                              const StateVector* initial = nullptr);

/** Majority vote of three independent runs: p -> 3p^2(1-p) + p^3. */
inline double majority3(double p) { return 3.0 * p * p * (1.0 - p) + p * p * p; }

/** Boosted circuit: three independent copies with a majority readout,
 * evaluated by classical post-processing of the exact single-copy output
 * distribution. plain_slot_count reports the 3q slots of the boosted object.
 */
struct BoostedCircuit {
  QueryCircuit base;

  int plain_slot_count() const { return 3 * base.query_count(); }
  BitDistribution run(const Hypergraph& x) const {
    const BitDistribution d = run_circuit(base, x);
    const double p1 = majority3(d.p1);
    return {1.0 - p1, p1};
  }
};

inline BoostedCircuit boost_majority3(const QueryCircuit& c) { return BoostedCircuit{c}; }

/** Explicit coherent construction: three register copies plus a majority gate
 * onto a fresh output bit. Its output distribution matches BoostedCircuit::run
 * exactly; intended for small layouts (the dimension guard applies).
 */
QueryCircuit coherent_majority3_circuit(const QueryCircuit& c);

/** Q_x(F): each plain slot of the circuit becomes a composed oracle; one
 * shared pointer register of dimension N is appended to the layout. Gate
 * accounting is structural: one shift and one adjoint shift per slot per run.
 */
class SubstitutedCircuit {
 public:
  SubstitutedCircuit(const QueryCircuit& base, const EdgeIndexer& indexer, EdgeMap F);

  BitDistribution run(const Hypergraph& x, QueryLog* log = nullptr) const;
  StateVector run_state(const Hypergraph& x, QueryLog* log = nullptr) const;

  int shift_gates_per_run() const { return circuit_.query_count(); }
  int shift_adjoint_gates_per_run() const { return circuit_.query_count(); }
  const RegisterLayout& layout() const { return circuit_.layout; }

 private:
  QueryCircuit circuit_;  // layout holds the appended pointer register
  EdgeMap F_;
  int pointer_reg_;
};

SubstitutedCircuit substitute_oracles(const QueryCircuit& base, const EdgeIndexer& indexer,
                                      const EdgeMap& F);

/** Haar-style random unitary via QR of a complex Gaussian matrix. */
Eigen::MatrixXcd random_unitary(int dim, Rng& rng);

/** Random circuit on layout {m, 2, w} with q slots and Haar-style stage unitaries. */
QueryCircuit random_query_circuit(std::int64_t m, std::int64_t w, int q, Rng& rng);

/** Deterministic parity circuit: q = m sequential queries XOR every bit of x
 * into the bit register, so the output equals the edge-set parity with
 * probability 1.
 */
QueryCircuit parity_circuit(std::int64_t m);

/** Single-query distinguisher on two bits: layout {2, 2}, register 0 ends up
 * reading x(1) xor x(2) with probability 1 via phase kickback.
 */
QueryCircuit deutsch_circuit();

}  // namespace gpq
