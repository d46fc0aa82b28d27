#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperdrift/bitvec.hpp"
#include "hyperdrift/hypergraph.hpp"
#include "hyperdrift/rng.hpp"
#include "hyperdrift/xorsat.hpp"

namespace hyperdrift {

struct CheckParams {
  /// Largest vertex (or variable) count of the random cases.
  std::size_t n = 8;
  /// Total runs, schedules or instances, depending on the check.
  std::size_t trials = 1000;
  /// Number of random hypergraphs.
  std::size_t graphs = 50;
  std::uint64_t seed = 1;
  std::uint64_t max_steps = 1000000;
  double eps = 0.1;
};

struct CheckReport {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> details;
};

std::vector<std::string> check_names();
/// Throws std::invalid_argument for an unknown name.
CheckReport run_check(const std::string& name, const CheckParams& params);

CheckReport check_coupling(const CheckParams& p);
CheckReport check_duality(const CheckParams& p);
CheckReport check_stabilizing(const CheckParams& p);
CheckReport check_counterexamples(const CheckParams& p);
CheckReport check_drift_lemma(const CheckParams& p);
CheckReport check_recurrence(const CheckParams& p);
CheckReport check_acyclicity(const CheckParams& p);
CheckReport check_walksat_drift(const CheckParams& p);
CheckReport check_dual_step(const CheckParams& p);
CheckReport check_reachability(const CheckParams& p);
CheckReport check_d_epsilon(const CheckParams& p);

/// XOR of a uniformly random subset of edges: uniform over stabilizing sets.
BitVector random_stabilizing_set(const Hypergraph& h, Rng& rng);

/// Random connected hypergraph with 2 <= n' <= n vertices, roughly n'..2n'
/// edges of sizes 1..min(4, n'), self-loops included.
Hypergraph random_test_hypergraph(std::size_t n, Rng& rng);
/// Random odd-connected hypergraph on at most n vertices; alternates between
/// mixed-size hypergraphs and connected graphs (all edges even).
Hypergraph random_odd_connected(std::size_t n, Rng& rng, bool all_even);

struct CounterexampleFixture {
  std::string name;
  Hypergraph h;
  BitVector w1;
  BitVector w2;
};
/// The three-edge star and K4 configurations that satisfy H(w1, w2) yet are
/// not connected by moves.
std::vector<CounterexampleFixture> counterexample_fixtures();

struct DEpsilonFixture {
  std::string name;
  Hypergraph h;
};
/// Odd-connected fixtures: triadic cycle dual (m = 18), K4, one self-loop, K(5,3).
std::vector<DEpsilonFixture> d_epsilon_fixtures();

}  // namespace hyperdrift
