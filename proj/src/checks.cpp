#include "hyperdrift/checks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <fmt/format.h>

#include "hyperdrift/combinatorics.hpp"
#include "hyperdrift/drift.hpp"
#include "hyperdrift/generators.hpp"
#include "hyperdrift/gf2.hpp"
#include "hyperdrift/ips.hpp"
#include "hyperdrift/parallel.hpp"
#include "hyperdrift/walksat.hpp"

namespace hyperdrift {

namespace {

constexpr std::size_t kMaxDetails = 10;

void fail(CheckReport& r, std::string detail) {
  ++r.failures;
  r.passed = false;
  if (r.details.size() < kMaxDetails) r.details.push_back(std::move(detail));
}

void note(CheckReport& r, std::string detail) { r.details.push_back(std::move(detail)); }

std::size_t uniform_in(Rng& rng, std::size_t lo, std::size_t hi) { return lo + rng.uniform(hi - lo + 1); }

std::string stop_str(const StopTime& t) { return t.censored ? fmt::format(">{}", t.steps) : fmt::format("{}", t.steps); }

BitVector config_from_u64(std::size_t n, std::uint64_t x) { return BitVector::from_u64(n, x); }

}  // namespace

BitVector random_stabilizing_set(const Hypergraph& h, Rng& rng) {
  BitVector B(h.num_vertices());
  for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
    if ((rng.next() >> 63) != 0) B ^= h.edge_mask(e);
  }
  return B;
}

Hypergraph random_test_hypergraph(std::size_t n, Rng& rng) {
  const std::size_t nv = uniform_in(rng, 2, std::max<std::size_t>(2, n));
  const std::size_t m = uniform_in(rng, nv, 2 * nv);
  return random_connected_hypergraph(nv, m, 1, std::min<std::size_t>(4, nv), rng);
}

Hypergraph random_odd_connected(std::size_t n, Rng& rng, bool all_even) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const std::size_t nv = uniform_in(rng, 3, std::max<std::size_t>(3, n));
    Hypergraph h;
    if (all_even) {
      // Connected graphs are odd-connected with every edge of size 2.
      h = random_connected_hypergraph(nv, uniform_in(rng, nv, 2 * nv), 2, 2, rng);
    } else {
      h = random_connected_hypergraph(nv, uniform_in(rng, nv, 2 * nv), 1, std::min<std::size_t>(4, nv), rng);
    }
    if (is_odd_connected(h) && (odd_case(h) == OddCase::AllEven) == all_even) return h;
  }
  throw std::runtime_error("no odd-connected hypergraph found");
}

std::vector<CounterexampleFixture> counterexample_fixtures() {
  std::vector<CounterexampleFixture> out;
  {
    Hypergraph star(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
    BitVector w1 = BitVector::from_string("0001100");
    BitVector w2 = BitVector::from_string("0111111");
    out.push_back({"three-edge-star", std::move(star), std::move(w1), std::move(w2)});
  }
  {
    BitVector w1 = BitVector::from_string("1000");
    BitVector w2 = BitVector::from_string("0111");
    out.push_back({"k4", complete_graph(4), std::move(w1), std::move(w2)});
  }
  return out;
}

std::vector<DEpsilonFixture> d_epsilon_fixtures() {
  std::vector<DEpsilonFixture> out;
  out.push_back({"triadic-cycle-dual-18", triadic_dual(gen_triadic_cycle(18, BitVector(36)))});
  out.push_back({"k4", complete_graph(4)});
  out.push_back({"single-loop", Hypergraph(1, {{0}})});
  out.push_back({"k5-3", complete_uniform_hypergraph(5, 3)});
  return out;
}

CheckReport check_coupling(const CheckParams& p) {
  CheckReport r;
  r.name = "coupling";
  Rng rng(derive_seed(p.seed, 0));
  const std::size_t graphs = std::max<std::size_t>(1, p.graphs);
  const std::size_t per_graph = std::max<std::size_t>(1, p.trials / graphs);
  std::size_t censored = 0;
  for (std::size_t g = 0; g < graphs; ++g) {
    const Hypergraph h = random_test_hypergraph(p.n, rng);
    for (std::size_t t = 0; t < per_graph; ++t) {
      const BitVector B = random_stabilizing_set(h, rng);
      for (const ArwMode mode : {ArwMode::Eager, ArwMode::Lazy}) {
        const auto out = coupled_process_P(h, B, mode, rng.next(), p.max_steps);
        ++r.cases;
        if (out.c_ann.censored) ++censored;
        if (!(out.c_ann == out.c_coal) || !(out.c_p == out.c_coal) || !out.projections_agree) {
          fail(r, fmt::format("graph {} run {} {}: c_ann={} c_coal={} c_P={} projections={}", g, t,
                              mode == ArwMode::Eager ? "eager" : "lazy", stop_str(out.c_ann), stop_str(out.c_coal),
                              stop_str(out.c_p), out.projections_agree));
        }
      }
    }
  }
  note(r, fmt::format("{} coupled runs on {} hypergraphs, {} censored", r.cases, graphs, censored));
  return r;
}

CheckReport check_duality(const CheckParams& p) {
  CheckReport r;
  r.name = "duality";
  Rng rng(derive_seed(p.seed, 1));
  const std::size_t graphs = std::max<std::size_t>(1, p.graphs);
  const std::size_t per_graph = std::max<std::size_t>(1, p.trials / graphs);
  std::size_t prefixes = 0;
  for (std::size_t g = 0; g < graphs; ++g) {
    const Hypergraph h = random_test_hypergraph(p.n, rng);
    for (std::size_t t = 0; t < per_graph; ++t) {
      const BitVector B = random_stabilizing_set(h, rng);
      const Schedule s = random_schedule(h, 4 * h.num_vertices(), rng);
      const auto rep = duality_harness(h, B, s);
      ++r.cases;
      prefixes += rep.crw_parity.size();
      if (!rep.iff_holds || !rep.odd_sets_agree) {
        fail(r, fmt::format("graph {} schedule {}: per-prefix equivalence broken", g, t));
      }
    }
  }
  note(r, fmt::format("{} schedules, {} prefixes compared", r.cases, prefixes));
  return r;
}

CheckReport check_stabilizing(const CheckParams& p) {
  CheckReport r;
  r.name = "stabilizing";
  Rng rng(derive_seed(p.seed, 2));
  const std::size_t n = std::min<std::size_t>(p.n, 16);
  std::size_t configs = 0;
  std::size_t stabilizing = 0;
  for (std::size_t g = 0; g < std::max<std::size_t>(1, p.graphs); ++g) {
    const Hypergraph h = random_test_hypergraph(n, rng);
    const auto truth = bfs_stabilizing_set(h);
    ++r.cases;
    for (std::uint64_t x = 0; x < truth.size(); ++x) {
      const bool algebra = gf2::is_stabilizing(h, config_from_u64(h.num_vertices(), x));
      ++configs;
      stabilizing += truth[x] ? 1 : 0;
      if (algebra != truth[x]) {
        fail(r, fmt::format("graph {} config {}: solvable={} bfs={}", g, x, algebra, static_cast<bool>(truth[x])));
      }
    }
  }
  note(r, fmt::format("{} configurations on {} hypergraphs, {} stabilizing", configs, r.cases, stabilizing));
  return r;
}

CheckReport check_counterexamples(const CheckParams&) {
  CheckReport r;
  r.name = "counterexamples";
  for (const auto& f : counterexample_fixtures()) {
    ++r.cases;
    const auto solved = gf2::solve(gf2::reachability_system(f.h, f.w1, f.w2));
    const bool solvable = solved.status != gf2::SolveStatus::Inconsistent;
    const bool reachable = config_reachable(f.h, Dynamics::ArwEager, f.w1, f.w2);
    note(r, fmt::format("{}: H(w1,w2) solvable={} reachable={}", f.name, solvable, reachable));
    if (!solvable || reachable) fail(r, fmt::format("{} is not a counterexample", f.name));
  }
  return r;
}

CheckReport check_drift_lemma(const CheckParams& p) {
  CheckReport r;
  r.name = "drift-lemma";
  Rng rng(derive_seed(p.seed, 3));
  const std::size_t nmax = std::min<std::size_t>(std::max<std::size_t>(p.n, 3), 16);
  std::size_t states = 0;
  for (std::size_t g = 0; g < std::max<std::size_t>(1, p.graphs); ++g) {
    const std::size_t n = uniform_in(rng, 3, nmax);
    const std::size_t k = uniform_in(rng, 1, 4);
    const Hypergraph h = random_regular_hypergraph(n, k, uniform_in(rng, k, 2 * n), rng);
    ++r.cases;
    const auto nk = static_cast<std::int64_t>(n * k);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const BitConfig D = config_from_u64(n, x);
      const auto N = static_cast<std::int64_t>(D.count());
      std::int64_t down = 0;
      std::int64_t up = 0;
      for (Vertex v = 0; v < n; ++v) {
        for (const EdgeIndex e : h.incident(v)) {
          const auto after = static_cast<std::int64_t>(two_party_step(h, D, {v, e}).count());
          if (after == N - 1) ++down;
          if (after == N + 1) ++up;
        }
      }
      const auto cut = cut_report(h, D);
      ++states;
      if (Rational(down - up, nk) != Rational(cut.e_minus - cut.e_plus, nk)) {
        fail(r, fmt::format("graph {} state {}: enumerated {} vs cut {}", g, x, to_string(Rational(down - up, nk)),
                            to_string(Rational(cut.e_minus - cut.e_plus, nk))));
      }
    }
  }
  note(r, fmt::format("{} states on {} regular hypergraphs", states, r.cases));
  return r;
}

CheckReport check_recurrence(const CheckParams& p) {
  CheckReport r;
  r.name = "recurrence";
  Rng rng(derive_seed(p.seed, 4));
  const std::size_t n = std::min<std::size_t>(p.n, 14);
  for (std::size_t g = 0; g < std::max<std::size_t>(1, p.graphs); ++g) {
    const bool all_even = g % 2 == 1;
    const Hypergraph h = random_odd_connected(n, rng, all_even);
    ++r.cases;
    const std::size_t nv = h.num_vertices();
    const std::uint64_t ones = (std::uint64_t{1} << nv) - 1;
    for (std::uint64_t x = 0; x <= ones; ++x) {
      const auto reach = config_bfs(h, Dynamics::TwoParty, config_from_u64(nv, x));
      const bool zero = std::binary_search(reach.begin(), reach.end(), std::uint64_t{0});
      if (all_even && x == ones) {
        if (reach.size() != 1) fail(r, fmt::format("graph {}: state 1 is not a fixed point", g));
      } else if (!zero) {
        fail(r, fmt::format("graph {} ({}): 0 unreachable from {}", g, all_even ? "all even" : "odd edge", x));
      }
    }
  }
  return r;
}

CheckReport check_acyclicity(const CheckParams& p) {
  CheckReport r;
  r.name = "acyclicity";
  Rng rng(derive_seed(p.seed, 5));
  const std::size_t nmax = std::max<std::size_t>(3, p.n);
  std::size_t skipped = 0;
  std::size_t acyclic = 0;
  std::size_t refined_failures = 0;
  while (r.cases < std::max<std::size_t>(1, p.trials)) {
    const std::size_t n = uniform_in(rng, 3, nmax);
    const std::size_t k = uniform_in(rng, 2, std::min<std::size_t>(4, n));
    const auto cap = static_cast<std::size_t>(std::min<std::int64_t>(
        static_cast<std::int64_t>(nmax), binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k))));
    const std::size_t m = uniform_in(rng, 1, cap);
    const auto planted = gen_random_k_uniform(n, m, k, rng);
    const Hypergraph dual = triadic_dual(planted.instance);
    if (!is_connected(dual)) {
      ++skipped;
      continue;
    }
    ++r.cases;
    const bool a = gf2::is_acyclic(planted.instance);
    const bool oc = is_odd_connected(dual);
    const bool cyclic = gf2::is_cyclic(planted.instance);
    acyclic += a ? 1 : 0;
    if (a != (oc && !cyclic)) ++refined_failures;
    if (a != oc) {
      fail(r, fmt::format("n={} m={} k={}: acyclic={} dual odd-connected={} formula cyclic={}", n, m, k, a, oc, cyclic));
    }
  }
  note(r, fmt::format("{} instances ({} acyclic), {} skipped with disconnected duals", r.cases, acyclic, skipped));
  note(r, fmt::format("acyclic <=> (dual odd-connected and formula not cyclic): {} mismatches", refined_failures));
  return r;
}

CheckReport check_walksat_drift(const CheckParams& p) {
  CheckReport r;
  r.name = "walksat-drift";
  Rng rng(derive_seed(p.seed, 6));
  const std::size_t nmax = std::min<std::size_t>(std::max<std::size_t>(p.n, 5), 14);
  std::size_t states = 0;
  for (std::size_t g = 0; g < std::max<std::size_t>(1, p.graphs); ++g) {
    XorSatInstance inst;
    Assignment z;
    std::size_t k = 0;
    for (int attempt = 0; attempt < 10000; ++attempt) {
      const std::size_t n = uniform_in(rng, 4, nmax);
      k = uniform_in(rng, 2, std::min<std::size_t>(5, n - 1));
      const auto cap = static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
      const std::size_t m = uniform_in(rng, std::min(cap, n), std::min(cap, 3 * n));
      auto planted = gen_random_k_uniform(n, m, k, rng);
      if (gf2::is_uniquely_satisfiable(planted.instance)) {
        inst = std::move(planted.instance);
        z = std::move(planted.witness);
        break;
      }
    }
    if (z.empty()) continue;
    ++r.cases;
    const Hypergraph fh = formula_hypergraph(inst);
    const std::size_t n = inst.num_variables();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const Assignment X = config_from_u64(n, x);
      if (inst.satisfies(X)) continue;
      const auto drift = one_step_u_drift(inst, X, z);
      const auto cut = cut_report(fh, X ^ z);
      const Rational expected(cut.e_minus - cut.e_plus, static_cast<std::int64_t>(k * cut.odd_cut.size()));
      ++states;
      if (drift.drift() != expected) {
        fail(r, fmt::format("instance {} state {}: enumerated {} vs {}", g, x, to_string(drift.drift()), to_string(expected)));
      }
    }
  }
  note(r, fmt::format("{} unsatisfied states over {} uniquely satisfiable instances", states, r.cases));
  return r;
}

CheckReport check_dual_step(const CheckParams& p) {
  CheckReport r;
  r.name = "dual-step";
  Rng rng(derive_seed(p.seed, 7));
  std::size_t steps = 0;
  for (std::size_t g = 0; g < std::max<std::size_t>(1, p.graphs); ++g) {
    const std::size_t n = uniform_in(rng, 4, std::max<std::size_t>(4, p.n));
    const std::size_t k = uniform_in(rng, 2, std::min<std::size_t>(4, n));
    const auto cap = static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
    const auto planted = gen_random_k_uniform(n, uniform_in(rng, 1, std::min(cap, 2 * n)), k, rng);
    const auto map = triadic_dual_map(planted.instance);
    const Assignment x0 = random_bits(n, rng);
    const auto run = walksat(planted.instance, x0, rng.next(), std::max<std::uint64_t>(1, p.trials * 10), true);
    ++r.cases;
    BitConfig arw = dual_config(planted.instance, x0);
    Assignment x = x0;
    for (const auto& mv : run.moves) {
      arw = arw_step(map.graph, arw, {mv.equation, *map.edge_of_variable[mv.variable]});
      x.flip(mv.variable);
      ++steps;
      if (arw != dual_config(planted.instance, x)) {
        fail(r, fmt::format("instance {} step {}: dual configuration diverged", g, steps));
        break;
      }
    }
  }
  note(r, fmt::format("{} WalkSAT moves replayed on triadic duals", steps));
  return r;
}

CheckReport check_reachability(const CheckParams& p) {
  CheckReport r;
  r.name = "reachability";
  Rng rng(derive_seed(p.seed, 8));
  const std::size_t n = std::min<std::size_t>(p.n, 12);
  for (std::size_t g = 0; g < std::max<std::size_t>(1, p.graphs); ++g) {
    const Hypergraph h = random_test_hypergraph(n, rng);
    const BitVector w1 = random_bits(h.num_vertices(), rng);
    const auto reach = config_bfs(h, Dynamics::ArwEager, w1);
    for (int s = 0; s < 5; ++s) {
      const BitVector w2 = config_from_u64(h.num_vertices(), reach[rng.uniform(reach.size())]);
      const auto path = config_path(h, Dynamics::ArwEager, w1, w2);
      ++r.cases;
      if (!path) {
        fail(r, fmt::format("graph {}: BFS lost a reachable configuration", g));
        continue;
      }
      BitVector z(h.num_edges());
      for (const auto& mv : *path) z.flip(mv.e);
      const auto sys = gf2::reachability_system(h, w1, w2);
      if (sys.apply(z) != sys.rhs) fail(r, fmt::format("graph {}: edge-use parities do not solve H(w1,w2)", g));
    }
  }
  return r;
}

CheckReport check_d_epsilon(const CheckParams& p) {
  CheckReport r;
  r.name = "d-epsilon";
  const std::size_t runs = std::max<std::size_t>(1, p.trials);
  for (const auto& f : d_epsilon_fixtures()) {
    Rng rng(derive_seed(p.seed, 9 + r.cases));
    const BitVector B = random_stabilizing_set(f.h, rng);
    std::size_t sandwich_failures = 0;
    std::size_t coupling_failures = 0;
    std::vector<std::uint64_t> c2;
    std::vector<std::uint64_t> cvm;
    for (std::size_t i = 0; i < runs; ++i) {
      const auto d = d_epsilon_experiment(f.h, p.eps, B, rng.next(), p.max_steps);
      if (d.c_2vm.censored || d.t_parity.censored || d.c_2vm.steps > d.t_parity.steps) ++sandwich_failures;
      const auto v = coupled_voter_run(f.h, d.D, B, rng.next(), p.max_steps);
      if (!v.coupled) ++coupling_failures;
      c2.push_back(v.c_2vm.steps);
      cvm.push_back(v.c_vm.censored ? p.max_steps : v.c_vm.steps);
    }
    ++r.cases;
    const std::uint64_t horizon = *std::max_element(cvm.begin(), cvm.end());
    std::size_t tail_failures = 0;
    double worst = -1.0;
    for (std::uint64_t t = 0; t <= horizon; ++t) {
      const auto above = [&](const std::vector<std::uint64_t>& xs) {
        return static_cast<double>(std::count_if(xs.begin(), xs.end(), [&](std::uint64_t x) { return x > t; })) /
               static_cast<double>(runs);
      };
      const double p2 = above(c2);
      const double pv = above(cvm);
      const double sigma = std::sqrt(std::max(p2 * (1 - p2), pv * (1 - pv)) / static_cast<double>(runs));
      worst = std::max(worst, p2 - pv - 3 * sigma);
      if (p2 > pv + 3 * sigma) ++tail_failures;
    }
    note(r, fmt::format("{}: |B|={} sandwich violations={} coupling breaks={} tail violations={} worst excess={:.4f}", f.name,
                        B.count(), sandwich_failures, coupling_failures, tail_failures, worst));
    if (sandwich_failures + coupling_failures + tail_failures > 0) fail(r, f.name + " failed");
  }
  return r;
}

std::vector<std::string> check_names() {
  return {"coupling",     "duality",      "stabilizing", "counterexamples", "drift-lemma", "recurrence",
          "acyclicity",   "walksat-drift", "dual-step",  "reachability",    "d-epsilon"};
}

CheckReport run_check(const std::string& name, const CheckParams& params) {
  static const std::map<std::string, CheckReport (*)(const CheckParams&)> table = {
      {"coupling", check_coupling},         {"duality", check_duality},
      {"stabilizing", check_stabilizing},   {"counterexamples", check_counterexamples},
      {"drift-lemma", check_drift_lemma},   {"recurrence", check_recurrence},
      {"acyclicity", check_acyclicity},     {"walksat-drift", check_walksat_drift},
      {"dual-step", check_dual_step},       {"reachability", check_reachability},
      {"d-epsilon", check_d_epsilon},
  };
  const auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument(fmt::format("unknown check '{}'", name));
  return it->second(params);
}

}  // namespace hyperdrift
