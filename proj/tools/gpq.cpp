#include "CLI11.hpp"

#include "gpq/circuit_io.hpp"
#include "gpq/ctqw.hpp"
#include "gpq/dequantizer.hpp"
#include "gpq/dr_sampler.hpp"
#include "gpq/emit.hpp"
#include "gpq/games.hpp"
#include "gpq/glued_trees.hpp"
#include "gpq/graph_property.hpp"
#include "gpq/solvers.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace gpq;

std::uint64_t env_default_seed() {
  if (const char* s = std::getenv("GPQ_SEED")) return std::strtoull(s, nullptr, 10);
  return 1;
}

void write_text(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output path: " + path);
  out << body;
}

Hypergraph input_from_bits(int n, int l, const std::string& bits, Rng& rng) {
  Hypergraph x = Hypergraph::zeros(n, l);
  const EdgeIndex m = x.edge_count();
  if (bits.empty()) {
    for (EdgeIndex i = 1; i <= m; ++i) x.set_bit(i, rng.bernoulli(0.5) ? 1 : 0);
    return x;
  }
  if (static_cast<EdgeIndex>(bits.size()) != m)
    throw std::invalid_argument("--x needs exactly " + std::to_string(m) + " bits");
  for (EdgeIndex i = 1; i <= m; ++i) {
    if (bits[i - 1] != '0' && bits[i - 1] != '1')
      throw std::invalid_argument("--x must be a 0/1 string");
    x.set_bit(i, bits[i - 1] == '1');
  }
  return x;
}

QueryCircuit base_circuit(const std::string& path, std::int64_t m, int q, Rng& rng) {
  if (!path.empty()) return load_circuit(path);
  return random_query_circuit(m, 2, q, rng);
}

Resolution parse_resolution(const std::string& text) {
  if (text == "inf" || text == "infinity") return Resolution::infinity();
  const int r = std::stoi(text);
  if (r < 1) throw std::invalid_argument("resolution must be >= 1 or inf");
  return Resolution::finite(r);
}

std::vector<int> parse_k_grid(const std::vector<std::string>& tokens) {
  std::vector<int> ks;
  for (const std::string& tok : tokens) {
    const auto dots = tok.find("..");
    if (dots != std::string::npos) {
      const int lo = std::stoi(tok.substr(0, dots));
      const int hi = std::stoi(tok.substr(dots + 2));
      for (int k = lo; k <= hi; ++k)
        if (k % 2 == 0) ks.push_back(k);
    } else {
      ks.push_back(std::stoi(tok));
    }
  }
  if (ks.empty()) throw std::invalid_argument("--k grid is empty");
  return ks;
}

GluedVariant trial_variant(const std::string& flag, int trial) {
  if (flag == "alternate") return trial % 2 == 0 ? GluedVariant::A : GluedVariant::B;
  return variant_by_name(flag);
}

Strategy strategy_by_name(const std::string& name) {
  if (name == "uniform-walk") return uniform_walk_strategy();
  if (name == "fresh-probe") return fresh_probe_strategy();
  if (name == "right-walk") return right_walk_strategy();
  throw std::invalid_argument("unknown strategy: " + name);
}

struct CommonOut {
  std::string out;
  std::string format = "csv";
};

void add_common(CLI::App* sub, CommonOut& c) {
  sub->add_option("--out", c.out, "output path (default stdout)");
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

int run_invariance(int n, int l, const std::string& property, int max_n, const CommonOut& c) {
  const GraphProperty p = property_by_name(property, n, l);
  const InvarianceReport rep = check_invariance(p, max_n);
  Table t({"property", "n", "l", "invariant", "strings", "permutations", "violation"});
  t.cell(property)
      .cell(n)
      .cell(l)
      .cell(static_cast<std::int64_t>(rep.invariant))
      .cell(static_cast<std::int64_t>(rep.strings_checked))
      .cell(static_cast<std::int64_t>(rep.permutations_checked))
      .cell(rep.witness ? rep.witness->reason : std::string{});
  t.end_row();
  t.write(c.out, c.format);
  return rep.invariant ? 0 : 2;
}

int run_dr_poly(int n, int l, int k, int sets, std::uint64_t seed, const CommonOut& c) {
  const EdgeIndexer indexer(n, l);
  Table t({"n", "l", "k", "set", "r", "exact_prob", "residual"});
  for (int s = 0; s < sets; ++s) {
    Rng rng = derive_stream(seed, static_cast<std::uint64_t>(s));
    std::vector<MapConstraint> constraints;
    const std::vector<int> edges = rng.sample_distinct(static_cast<int>(indexer.edge_count()), k);
    for (const int e : edges)
      constraints.push_back(
          {static_cast<EdgeIndex>(e),
           1 + static_cast<EdgeIndex>(rng.below(static_cast<std::uint64_t>(indexer.extended_count())))});
    const PolyFitReport rep = verify_poly_degree(n, l, constraints);
    const int kl = k * l;
    for (int r = 1; r <= kl; ++r) {
      t.cell(n).cell(l).cell(k).cell(s).cell(std::to_string(r));
      t.cell(to_double(rep.nodes_prob[static_cast<std::size_t>(r - 1)])).cell(0.0);
      t.end_row();
    }
    for (int r = kl + 1; r <= kl + 4; ++r) {
      DrSpec spec{n, l, Resolution::finite(r)};
      t.cell(n).cell(l).cell(k).cell(s).cell(std::to_string(r));
      t.cell(to_double(exact_constraint_prob(spec, constraints)));
      t.cell(to_double(rep.residuals[static_cast<std::size_t>(r - kl - 1)]));
      t.end_row();
    }
    DrSpec inf_spec{n, l, Resolution::infinity()};
    t.cell(n).cell(l).cell(k).cell(s).cell(std::string("inf"));
    t.cell(to_double(exact_constraint_prob(inf_spec, constraints)));
    t.cell(to_double(rep.residual_at_infinity));
    t.end_row();
  }
  t.write(c.out, c.format);
  return 0;
}

int run_closeness(int q, int l, int n, const std::vector<int>& rs, int samples,
                  std::uint64_t seed, const std::string& circuit, const std::string& xbits,
                  const CommonOut& c) {
  const EdgeIndexer indexer(n, l);
  Rng setup = derive_stream(seed, 0);
  const QueryCircuit base = base_circuit(circuit, indexer.edge_count(), q, setup);
  if (base.query_count() != q)
    throw std::invalid_argument("circuit has a different query count than --q");
  Rng xrng = derive_stream(seed, 1);
  const Hypergraph x = input_from_bits(n, l, xbits, xrng);

  Table t({"q", "l", "n", "r", "samples", "p_finite", "p_infinite", "tv", "l1", "bound",
           "sigma"});
  for (const int r : rs) {
    Rng rrng = derive_stream(seed, 100 + static_cast<std::uint64_t>(r));
    const ClosenessReport rep = samples > 0
                                    ? closeness_sampled(base, indexer, x, r, samples, rrng)
                                    : closeness_exact(base, indexer, x, r);
    t.cell(q).cell(l).cell(n).cell(r).cell(rep.samples);
    t.cell(rep.p_finite).cell(rep.p_infinite).cell(rep.tv).cell(rep.l1).cell(rep.bound);
    t.cell(rep.sigma);
    t.end_row();
  }
  t.write(c.out, c.format);
  return 0;
}

int run_dequantize(int q, int l, int n, const std::string& r_text, int trials,
                   std::uint64_t seed, const std::string& circuit, const std::string& xbits,
                   const CommonOut& c) {
  const EdgeIndexer indexer(n, l);
  Rng setup = derive_stream(seed, 0);
  const QueryCircuit base = base_circuit(circuit, indexer.edge_count(), q, setup);
  Rng xrng = derive_stream(seed, 1);
  const Hypergraph x = input_from_bits(n, l, xbits, xrng);
  const Resolution res = parse_resolution(r_text);

  Table t({"q", "l", "n", "r", "trial", "range_size", "classical_cost", "p1", "output",
           "shift_gates", "shift_adjoint_gates"});
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = derive_stream(seed, 1000 + static_cast<std::uint64_t>(trial));
    const DequantizeOutcome out = run_dequantized(base, indexer, x, res, rng);
    t.cell(q).cell(l).cell(n).cell(r_text).cell(trial);
    t.cell(out.range_size).cell(out.classical_cost).cell(out.p1).cell(out.output);
    t.cell(out.shift_gates).cell(out.shift_adjoint_gates);
    t.end_row();
  }
  t.write(c.out, c.format);
  return 0;
}

int run_glued_build(int k, const std::string& variant, std::uint64_t seed, bool bare,
                    bool summary, const CommonOut& c) {
  const GluedTrees built = GluedTrees::build(k, variant_by_name(variant), seed);
  const GluedTrees g = bare ? GluedTrees::bare_from_modified(built) : built;
  if (!summary) {
    write_text(c.out, g.serialize());
    return 0;
  }
  const auto census = g.degree_census();
  Table t({"k", "variant", "seed", "n", "entrance", "exit", "pointers", "deg0", "deg1",
           "deg2", "deg3", "deg4", "deg5", "pointer_fraction"});
  t.cell(k).cell(variant_name(g.variant())).cell(static_cast<std::int64_t>(seed));
  t.cell(g.vertex_count()).cell(g.entrance_label()).cell(g.exit_label()).cell(g.pointer_count());
  for (const std::int64_t d : census) t.cell(d);
  t.cell(to_double(g.pointer_hit_probability()));
  t.end_row();
  t.write(c.out, c.format);
  return 0;
}

int run_solve_quantum(int k, const std::string& variant, int trials, std::int64_t budget,
                      bool include_markers, std::uint64_t seed, const CommonOut& c) {
  Table t({"k", "variant", "seed", "queries", "success", "stage1_queries", "walk_time",
           "decision", "witnessed", "abstained", "attempts", "walk_charges",
           "verify_queries", "budget"});
  for (int trial = 0; trial < trials; ++trial) {
    Rng inst_rng = derive_stream(seed, static_cast<std::uint64_t>(trial));
    const std::uint64_t inst_seed = inst_rng.next();
    const GluedTrees g = GluedTrees::build(k, trial_variant(variant, trial), inst_seed);
    AdjOracle o(g, OracleMode::Slot);
    Rng srng = derive_stream(inst_seed, 1);
    DecideConfig cfg;
    cfg.budget = budget;
    cfg.include_marker_edges = include_markers;
    const SolveReport rep = decide_p5(o, cfg, srng);
    t.cell(k).cell(variant_name(g.variant())).cell(static_cast<std::int64_t>(inst_seed));
    t.cell(rep.total_queries).cell(static_cast<std::int64_t>(rep.success));
    t.cell(rep.stage1_queries).cell(rep.walk_time).cell(rep.decision);
    t.cell(static_cast<std::int64_t>(rep.witnessed));
    t.cell(static_cast<std::int64_t>(rep.abstained)).cell(rep.attempts);
    t.cell(rep.walk_charges).cell(rep.verify_queries).cell(rep.budget);
    t.end_row();
  }
  t.write(c.out, c.format);
  return 0;
}

int run_solve_classical(int k, const std::string& variant, const std::string& strategy,
                        int trials, std::int64_t budget, std::uint64_t seed,
                        const CommonOut& c) {
  const ClassicalStrategy strat = classical_strategy_by_name(strategy);
  if (budget <= 0) budget = 100LL * k * k;
  Table t({"k", "variant", "seed", "strategy", "queries", "success", "budget"});
  for (int trial = 0; trial < trials; ++trial) {
    Rng inst_rng = derive_stream(seed, static_cast<std::uint64_t>(trial));
    const std::uint64_t inst_seed = inst_rng.next();
    const GluedTrees g = GluedTrees::build(k, trial_variant(variant, trial), inst_seed);
    AdjOracle o(g, OracleMode::Slot);
    Rng srng = derive_stream(inst_seed, 2);
    const ClassicalReport rep = classical_baseline(o, strat, budget, srng);
    t.cell(k).cell(variant_name(g.variant())).cell(static_cast<std::int64_t>(inst_seed));
    t.cell(strategy).cell(rep.queries).cell(static_cast<std::int64_t>(rep.found));
    t.cell(rep.budget);
    t.end_row();
  }
  t.write(c.out, c.format);
  return 0;
}

int run_scaling(const std::vector<std::string>& k_tokens, int trials, std::int64_t quantum_budget,
                std::int64_t classical_budget, std::uint64_t seed, const CommonOut& c) {
  const std::vector<int> ks = parse_k_grid(k_tokens);
  Table t({"k", "variant", "seed", "method", "queries", "success"});
  for (const int k : ks) {
    for (int trial = 0; trial < trials; ++trial) {
      Rng inst_rng = derive_stream(seed ^ (static_cast<std::uint64_t>(k) << 32),
                                   static_cast<std::uint64_t>(trial));
      const std::uint64_t inst_seed = inst_rng.next();
      const GluedTrees g = GluedTrees::build(k, trial_variant("alternate", trial), inst_seed);
      const std::int64_t cbudget = classical_budget > 0 ? classical_budget : 100LL * k * k;

      AdjOracle qo(g, OracleMode::Slot);
      Rng qrng = derive_stream(inst_seed, 1);
      DecideConfig cfg;
      cfg.budget = quantum_budget;
      const SolveReport q = decide_p5(qo, cfg, qrng);
      t.cell(k).cell(variant_name(g.variant())).cell(static_cast<std::int64_t>(inst_seed));
      t.cell(std::string("quantum")).cell(q.total_queries)
          .cell(static_cast<std::int64_t>(q.success));
      t.end_row();

      for (const ClassicalStrategy strat :
           {ClassicalStrategy::RandomWalk, ClassicalStrategy::ProbeBfs}) {
        AdjOracle co(g, OracleMode::Slot);
        Rng crng = derive_stream(inst_seed, strat == ClassicalStrategy::RandomWalk ? 2 : 3);
        const ClassicalReport r = classical_baseline(co, strat, cbudget, crng);
        t.cell(k).cell(variant_name(g.variant())).cell(static_cast<std::int64_t>(inst_seed));
        t.cell(classical_strategy_name(strat)).cell(r.queries)
            .cell(static_cast<std::int64_t>(r.found));
        t.end_row();
      }
    }
  }
  t.write(c.out, c.format);
  return 0;
}

int run_game_sim(int k, const std::string& game, const std::string& strategy_name,
                 const std::string& instance_variant, int trials, std::int64_t budget,
                 std::uint64_t seed, const CommonOut& c) {
  const Strategy strategy = strategy_by_name(strategy_name);
  if (budget <= 0) budget = static_cast<std::int64_t>(k) * k;
  Table t({"variant", "k", "strategy", "T", "win", "E1", "E2", "queries", "seed"});
  auto emit = [&](const std::string& var, bool win, std::int64_t e1, std::int64_t e2,
                  std::int64_t queries, std::uint64_t inst_seed) {
    t.cell(var).cell(k).cell(strategy_name).cell(budget);
    t.cell(static_cast<std::int64_t>(win)).cell(e1).cell(e2).cell(queries);
    t.cell(static_cast<std::int64_t>(inst_seed));
    t.end_row();
  };
  for (int trial = 0; trial < trials; ++trial) {
    Rng inst_rng = derive_stream(seed, static_cast<std::uint64_t>(trial));
    const std::uint64_t inst_seed = inst_rng.next();
    const GluedTrees g =
        GluedTrees::build(k, variant_by_name(instance_variant), inst_seed);
    Rng srng = derive_stream(inst_seed, 1);
    if (game == "BC") {
      const AdapterOutcome out = adapt_b_to_c(g, strategy, budget, srng);
      emit("BC", out.result.win, out.e1_events, out.e2_events, out.result.queries, inst_seed);
    } else if (game == "CD") {
      const PairedReplay pr = reduce_c_to_d(g, strategy, budget, srng);
      emit("C", pr.c_result.win, 0, 0, pr.c_result.queries, inst_seed);
      emit("D", pr.d_result.win, 0, 0, pr.d_result.queries, inst_seed);
    } else {
      const GameKind kind = game_by_name(game);
      if (kind == GameKind::D) {
        const GluedTrees bare = GluedTrees::bare_from_modified(g);
        const GameResult res = play_game(kind, bare, strategy, budget, srng);
        emit(game, res.win, 0, 0, res.queries, inst_seed);
      } else {
        const GameResult res = play_game(kind, g, strategy, budget, srng);
        emit(game, res.win, 0, 0, res.queries, inst_seed);
      }
    }
  }
  t.write(c.out, c.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"glued-trees and oracle-dequantization experiment runner"};
  app.require_subcommand(1);
  const std::uint64_t default_seed = env_default_seed();

  // invariance
  auto* inv = app.add_subcommand("invariance", "exhaustive relabelling-invariance check");
  int inv_n = 4, inv_l = 2, inv_max_n = 6;
  std::string inv_prop = "triangle";
  CommonOut inv_out;
  inv->add_option("--n", inv_n)->capture_default_str();
  inv->add_option("--l", inv_l)->capture_default_str();
  inv->add_option("--property", inv_prop, "triangle|parity|first-bit|has-degree-<d>")
      ->capture_default_str();
  inv->add_option("--max-n", inv_max_n)->capture_default_str();
  add_common(inv, inv_out);

  // dr-poly
  auto* drp = app.add_subcommand("dr-poly", "degree bound of constraint probabilities in 1/r");
  int drp_n = 4, drp_l = 2, drp_k = 2, drp_sets = 1;
  std::uint64_t drp_seed = default_seed;
  CommonOut drp_out;
  drp->add_option("--n", drp_n)->capture_default_str();
  drp->add_option("--l", drp_l)->capture_default_str();
  drp->add_option("--k", drp_k, "number of constraints")->capture_default_str();
  drp->add_option("--sets", drp_sets, "random constraint sets")->capture_default_str();
  drp->add_option("--seed", drp_seed)->capture_default_str();
  add_common(drp, drp_out);

  // closeness
  auto* clo = app.add_subcommand("closeness", "output TV distance against the permutation mixture");
  int clo_q = 1, clo_l = 2, clo_n = 4, clo_samples = 10000;
  std::vector<int> clo_rs{2, 4, 8, 16, 32, 64, 128, 256};
  std::uint64_t clo_seed = default_seed;
  std::string clo_circuit, clo_x;
  CommonOut clo_out;
  clo->add_option("--q", clo_q)->capture_default_str();
  clo->add_option("--l", clo_l)->capture_default_str();
  clo->add_option("--n", clo_n)->capture_default_str();
  clo->add_option("--r", clo_rs, "resolution sweep")->delimiter(',')->capture_default_str();
  clo->add_option("--samples", clo_samples, "0 = exact enumeration")->capture_default_str();
  clo->add_option("--seed", clo_seed)->capture_default_str();
  clo->add_option("--circuit", clo_circuit, "circuit JSON (default: random)");
  clo->add_option("--x", clo_x, "input bit string (default: random)");
  add_common(clo, clo_out);

  // dequantize
  auto* deq = app.add_subcommand("dequantize", "single runs of the randomized evaluator");
  int deq_q = 1, deq_l = 2, deq_n = 4, deq_trials = 10;
  std::string deq_r = "8";
  std::uint64_t deq_seed = default_seed;
  std::string deq_circuit, deq_x;
  CommonOut deq_out;
  deq->add_option("--q", deq_q)->capture_default_str();
  deq->add_option("--l", deq_l)->capture_default_str();
  deq->add_option("--n", deq_n)->capture_default_str();
  deq->add_option("--r", deq_r, "resolution or inf")->capture_default_str();
  deq->add_option("--trials", deq_trials)->capture_default_str();
  deq->add_option("--seed", deq_seed)->capture_default_str();
  deq->add_option("--circuit", deq_circuit, "circuit JSON (default: random)");
  deq->add_option("--x", deq_x, "input bit string (default: random)");
  add_common(deq, deq_out);

  // glued-build
  auto* glb = app.add_subcommand("glued-build", "build and serialize an instance");
  int glb_k = 2;
  std::string glb_variant = "B";
  std::uint64_t glb_seed = default_seed;
  bool glb_bare = false, glb_summary = false;
  CommonOut glb_out;
  glb->add_option("--k", glb_k)->capture_default_str();
  glb->add_option("--variant", glb_variant, "A or B")->capture_default_str();
  glb->add_option("--seed", glb_seed)->capture_default_str();
  glb->add_flag("--bare", glb_bare, "strip to the glued-trees subgraph");
  glb->add_flag("--summary", glb_summary, "emit a census row instead of the adjacency");
  add_common(glb, glb_out);

  // solve-quantum
  auto* sq = app.add_subcommand("solve-quantum", "two-stage walk solver trials");
  int sq_k = 4, sq_trials = 20;
  std::string sq_variant = "alternate";
  std::int64_t sq_budget = 0;
  bool sq_markers = false;
  std::uint64_t sq_seed = default_seed;
  CommonOut sq_out;
  sq->add_option("--k", sq_k)->capture_default_str();
  sq->add_option("--variant", sq_variant, "A, B, or alternate")->capture_default_str();
  sq->add_option("--trials", sq_trials)->capture_default_str();
  sq->add_option("--budget", sq_budget, "0 = 500 k^2")->capture_default_str();
  sq->add_flag("--include-markers", sq_markers, "walk on the marker-including adjacency");
  sq->add_option("--seed", sq_seed)->capture_default_str();
  add_common(sq, sq_out);

  // solve-classical
  auto* sc = app.add_subcommand("solve-classical", "classical baseline trials");
  int sc_k = 4, sc_trials = 20;
  std::string sc_variant = "alternate", sc_strategy = "random-walk";
  std::int64_t sc_budget = 0;
  std::uint64_t sc_seed = default_seed;
  CommonOut sc_out;
  sc->add_option("--k", sc_k)->capture_default_str();
  sc->add_option("--variant", sc_variant, "A, B, or alternate")->capture_default_str();
  sc->add_option("--strategy", sc_strategy, "random-walk or probe-bfs")->capture_default_str();
  sc->add_option("--trials", sc_trials)->capture_default_str();
  sc->add_option("--budget", sc_budget, "0 = 100 k^2")->capture_default_str();
  sc->add_option("--seed", sc_seed)->capture_default_str();
  add_common(sc, sc_out);

  // scaling
  auto* sca = app.add_subcommand("scaling", "quantum vs classical query counts over k");
  std::vector<std::string> sca_ks{"2", "4", "6"};
  int sca_trials = 50;
  std::int64_t sca_qbudget = 0, sca_cbudget = 0;
  std::uint64_t sca_seed = default_seed;
  CommonOut sca_out;
  sca->add_option("--k", sca_ks, "k grid: list or lo..hi (even)")->delimiter(',')->capture_default_str();
  sca->add_option("--trials", sca_trials)->capture_default_str();
  sca->add_option("--quantum-budget", sca_qbudget, "0 = 500 k^2")->capture_default_str();
  sca->add_option("--classical-budget", sca_cbudget, "0 = 100 k^2")->capture_default_str();
  sca->add_option("--seed", sca_seed)->capture_default_str();
  add_common(sca, sca_out);

  // game-sim
  auto* gs = app.add_subcommand("game-sim", "query games and reduction adapters");
  int gs_k = 4, gs_trials = 100;
  std::string gs_game = "B", gs_strategy = "uniform-walk", gs_instance = "B";
  std::int64_t gs_T = 0;
  std::uint64_t gs_seed = default_seed;
  CommonOut gs_out;
  gs->add_option("--k", gs_k)->capture_default_str();
  gs->add_option("--game", gs_game, "A|B|C|D|BC|CD")->capture_default_str();
  gs->add_option("--strategy", gs_strategy, "uniform-walk|fresh-probe|right-walk")
      ->capture_default_str();
  gs->add_option("--instance", gs_instance, "instance variant A or B")->capture_default_str();
  gs->add_option("--trials", gs_trials)->capture_default_str();
  gs->add_option("--T", gs_T, "query budget, 0 = k^2")->capture_default_str();
  gs->add_option("--seed", gs_seed)->capture_default_str();
  add_common(gs, gs_out);

  try {
    app.parse(argc, argv);
    if (inv->parsed()) return run_invariance(inv_n, inv_l, inv_prop, inv_max_n, inv_out);
    if (drp->parsed()) return run_dr_poly(drp_n, drp_l, drp_k, drp_sets, drp_seed, drp_out);
    if (clo->parsed())
      return run_closeness(clo_q, clo_l, clo_n, clo_rs, clo_samples, clo_seed, clo_circuit,
                           clo_x, clo_out);
    if (deq->parsed())
      return run_dequantize(deq_q, deq_l, deq_n, deq_r, deq_trials, deq_seed, deq_circuit,
                            deq_x, deq_out);
    if (glb->parsed())
      return run_glued_build(glb_k, glb_variant, glb_seed, glb_bare, glb_summary, glb_out);
    if (sq->parsed())
      return run_solve_quantum(sq_k, sq_variant, sq_trials, sq_budget, sq_markers, sq_seed,
                               sq_out);
    if (sc->parsed())
      return run_solve_classical(sc_k, sc_variant, sc_strategy, sc_trials, sc_budget, sc_seed,
                                 sc_out);
    if (sca->parsed())
      return run_scaling(sca_ks, sca_trials, sca_qbudget, sca_cbudget, sca_seed, sca_out);
    if (gs->parsed())
      return run_game_sim(gs_k, gs_game, gs_strategy, gs_instance, gs_trials, gs_T, gs_seed,
                          gs_out);
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
