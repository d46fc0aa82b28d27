#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "helpers.hpp"
#include "hyperdrift/checks.hpp"
#include "hyperdrift/generators.hpp"
#include "hyperdrift/gf2.hpp"
#include "hyperdrift/ips.hpp"
#include "oracles.hpp"

using namespace hyperdrift;
using testing_support::edges_of;

namespace {

const Hypergraph& path3() {
  static const Hypergraph h(3, {{0, 1}, {1, 2}, {2}});
  return h;
}

}  // namespace

TEST(Arw, EagerAndLazySteps) {
  const auto s = BitVector::from_string("100");
  EXPECT_EQ(arw_step(path3(), s, {0, 0}).to_string(), "010");
  EXPECT_THROW(arw_step(path3(), s, {1, 1}), std::invalid_argument);
  EXPECT_EQ(arw_step_lazy(path3(), s, {1, 1}), s);
  EXPECT_EQ(arw_step(path3(), BitVector::from_string("001"), {2, 2}).to_string(), "000");
  EXPECT_THROW(arw_step(path3(), s, {0, 1}), std::invalid_argument);
}

TEST(Arw, RunStopsAtAnnihilation) {
  const auto t = run_arw(path3(), BitVector::from_string("110"), ArwMode::Eager, 3, 1000);
  EXPECT_FALSE(t.censored);
  EXPECT_GE(t.steps, 1u);
  const auto zero = run_arw(path3(), BitVector(3), ArwMode::Lazy, 3, 1000);
  EXPECT_EQ(zero.steps, 0u);
  // On a single edge {0,1}, one live particle can never vanish.
  const auto stuck = run_arw(Hypergraph(2, {{0, 1}}), BitVector::from_string("10"), ArwMode::Eager, 3, 50);
  EXPECT_TRUE(stuck.censored);
  EXPECT_EQ(stuck.steps, 50u);
}

TEST(Arw, SamplingRespectsLiveVertices) {
  Rng rng(4);
  const auto s = BitVector::from_string("010");
  for (int i = 0; i < 100; ++i) {
    const auto p = sample_live_pair(path3(), s, rng);
    EXPECT_EQ(p.v, 1u);
    EXPECT_TRUE(path3().contains(p.e, p.v));
  }
  EXPECT_THROW(sample_live_pair(path3(), BitVector(3), rng), std::invalid_argument);
  EXPECT_THROW(sample_pair(Hypergraph(2, std::vector<std::vector<Vertex>>{}), rng), std::invalid_argument);
}

TEST(Multiset, CoalescingMoveCopiesAndEmpties) {
  const Hypergraph h(3, {{0, 1, 2}});
  auto s = MultisetState::distinct(3);
  s = crw_step(h, s, {0, 0});
  EXPECT_TRUE(s.empty(0));
  EXPECT_EQ(s.count(1, 0), 1);
  EXPECT_EQ(s.count(2, 0), 1);
  EXPECT_EQ(s.size(1), 2);
  EXPECT_EQ(s.total(0), 2);
  s = crw_step(h, s, {1, 0});
  EXPECT_EQ(s.count(2, 0), 2);
  EXPECT_EQ(s.count(0, 1), 1);
  EXPECT_EQ(s.size(0), 2);
  EXPECT_EQ(s.size(2), 4);
  EXPECT_EQ(s.odd_sizes().to_string(), "000");
}

TEST(Multiset, ModTwoTracksParities) {
  const Hypergraph h(3, {{0, 1, 2}});
  auto exact = MultisetState::distinct(3, false);
  auto mod2 = MultisetState::distinct(3, true);
  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    const auto p = sample_pair(h, rng);
    crw_apply(h, exact, p);
    crw_apply(h, mod2, p);
    EXPECT_EQ(exact.odd_sizes(), mod2.odd_sizes());
  }
}

// Labels are never destroyed by the coalescing move when every edge has at
// least two vertices.
TEST(Multiset, CoalescingKeepsEveryLabelWithoutSelfLoops) {
  Rng rng(12);
  const Hypergraph h = random_connected_hypergraph(6, 9, 2, 4, rng);
  auto s = MultisetState::distinct(6);
  for (int t = 0; t < 300; ++t) {
    crw_apply(h, s, sample_pair(h, rng));
    for (std::size_t l = 0; l < 6; ++l) ASSERT_GE(s.total(l), 1);
  }
}

TEST(Multiset, VoterAdoptsSumOfOthers) {
  const Hypergraph h(3, {{0, 1, 2}, {0}});
  auto s = MultisetState::distinct(3);
  s = voter_step(h, s, {0, 0});
  EXPECT_EQ(s.count(0, 1), 1);
  EXPECT_EQ(s.count(0, 2), 1);
  EXPECT_EQ(s.count(0, 0), 0);
  s = voter_step(h, s, {0, 1});
  EXPECT_TRUE(s.empty(0));
}

TEST(TwoParty, StepMatchesDefinition) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Hypergraph h = random_test_hypergraph(7, rng);
    const auto x = random_bits(h.num_vertices(), rng);
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
      for (const auto e : h.incident(v)) {
        const auto y = two_party_step(h, x, {v, e});
        bool acc = false;
        for (const auto w : h.edge(e)) acc ^= (w != v) && x.test(w);
        auto expect = x;
        expect.set(v, acc);
        EXPECT_EQ(y, expect);
      }
    }
  }
}

TEST(ConfigBfs, MatchesBruteForceClosures) {
  Rng rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const Hypergraph h = random_test_hypergraph(7, rng);
    const auto edges = edges_of(h);
    const oracle::Mask start = rng.uniform(std::uint64_t{1} << h.num_vertices());
    const auto w = BitVector::from_u64(h.num_vertices(), start);
    const auto arw = oracle::arw_reachable(edges, start);
    EXPECT_EQ(config_bfs(h, Dynamics::ArwEager, w), std::vector<std::uint64_t>(arw.begin(), arw.end()));
    EXPECT_EQ(config_bfs(h, Dynamics::ArwLazy, w), std::vector<std::uint64_t>(arw.begin(), arw.end()));
    const auto tp = oracle::two_party_reachable(edges, start);
    EXPECT_EQ(config_bfs(h, Dynamics::TwoParty, w), std::vector<std::uint64_t>(tp.begin(), tp.end()));
  }
}

TEST(ConfigBfs, StabilizingSetMatchesBruteForce) {
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const Hypergraph h = random_test_hypergraph(6, rng);
    const auto edges = edges_of(h);
    const auto set = bfs_stabilizing_set(h);
    ASSERT_EQ(set.size(), std::size_t{1} << h.num_vertices());
    for (oracle::Mask w = 0; w < set.size(); ++w) EXPECT_EQ(set[w], oracle::stabilizing(edges, w));
  }
}

TEST(ConfigBfs, PathsAreValidAndShortest) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Hypergraph h = random_test_hypergraph(6, rng);
    const auto w1 = random_bits(h.num_vertices(), rng);
    const auto reach = config_bfs(h, Dynamics::ArwEager, w1);
    const auto w2 = BitVector::from_u64(h.num_vertices(), reach.back());
    const auto path = config_path(h, Dynamics::ArwEager, w1, w2);
    ASSERT_TRUE(path.has_value());
    auto x = w1;
    for (const auto& p : *path) x = arw_step(h, x, p);
    EXPECT_EQ(x, w2);
    EXPECT_EQ(config_path(h, Dynamics::ArwEager, w1, w1)->size(), 0u);
  }
  const auto star = counterexample_fixtures().front();
  EXPECT_FALSE(config_path(star.h, Dynamics::ArwEager, star.w1, star.w2).has_value());
  EXPECT_EQ(config_bfs(star.h, Dynamics::ArwEager, star.w1).size(), 4u);
}

TEST(ConfigBfs, HexOutput) {
  std::ostringstream out;
  write_reachable_hex(out, {1, 10}, 5);
  EXPECT_EQ(out.str(), "01\n0a\n");
}

TEST(Coupling, AnnihilationEqualsCoalescenceParity) {
  Rng rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const Hypergraph h = random_test_hypergraph(7, rng);
    const BitVector B = random_stabilizing_set(h, rng);
    for (const auto mode : {ArwMode::Eager, ArwMode::Lazy}) {
      const auto out = coupled_process_P(h, B, mode, rng.next(), 1000000);
      EXPECT_TRUE(out.projections_agree);
      EXPECT_EQ(out.c_ann, out.c_coal);
      EXPECT_EQ(out.c_p, out.c_coal);
      EXPECT_FALSE(out.c_ann.censored);
    }
  }
}

TEST(Coupling, EmptyStartStopsImmediately) {
  const auto out = coupled_process_P(complete_graph(4), BitVector(4), ArwMode::Lazy, 1, 10);
  EXPECT_EQ(out.c_ann.steps, 0u);
  EXPECT_EQ(out.c_coal.steps, 0u);
}

TEST(Schedule, CsvRoundTripAndValidation) {
  Rng rng(11);
  const Hypergraph h = random_test_hypergraph(6, rng);
  const auto s = random_schedule(h, 25, rng);
  EXPECT_NO_THROW(s.validate(h));
  std::stringstream ss;
  write_schedule_csv(ss, s);
  const auto back = read_schedule_csv(ss);
  ASSERT_EQ(back.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(back.events[i].v, s.events[i].v);
    EXPECT_EQ(back.events[i].e, s.events[i].e);
  }
  Schedule bad{{{0, 0}}};
  EXPECT_THROW(bad.validate(Hypergraph(2, {{1}})), std::invalid_argument);
  std::istringstream gap("t,v,e\n1,0,0\n3,0,0\n");
  EXPECT_THROW(read_schedule_csv(gap), std::exception);
}

TEST(Duality, PerPrefixIffInBothCountingModes) {
  Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const Hypergraph h = random_test_hypergraph(6, rng);
    const BitVector B = random_bits(h.num_vertices(), rng);
    const auto s = random_schedule(h, 15, rng);
    for (const bool mod2 : {true, false}) {
      const auto rep = duality_harness(h, B, s, mod2);
      EXPECT_TRUE(rep.iff_holds);
      EXPECT_TRUE(rep.odd_sets_agree);
      EXPECT_EQ(rep.crw_parity.size(), s.size() + 1);
      EXPECT_EQ(rep.crw_time, rep.voter_time);
    }
  }
}

// Forward coalescing parity and a forward voter run on an independent
// schedule have the same law at a fixed time.
TEST(Duality, MarginalsAgreeAtFixedTime) {
  const Hypergraph h(5, {{0, 1, 2}, {2, 3}, {3, 4}, {4}, {0, 4}});
  const auto B = BitVector::from_string("11010");
  constexpr int runs = 20000;
  constexpr std::size_t T = 6;
  Rng rng(13);
  int crw_hits = 0, vm_hits = 0;
  for (int r = 0; r < runs; ++r) {
    auto crw = MultisetState::singletons(B, true);
    auto vm = MultisetState::distinct(5, true);
    for (std::size_t t = 0; t < T; ++t) {
      crw_apply(h, crw, sample_pair(h, rng));
      voter_apply(h, vm, sample_pair(h, rng));
    }
    crw_hits += crw_parity_on(crw, BitVector(5, true));
    vm_hits += voter_parity_on(vm, B);
  }
  const double p1 = static_cast<double>(crw_hits) / runs, p2 = static_cast<double>(vm_hits) / runs;
  const double se = std::sqrt((p1 * (1 - p1) + p2 * (1 - p2)) / runs);
  EXPECT_NEAR(p1, p2, 4 * se + 1e-12);
}

TEST(DEpsilon, SandwichHoldsOnEveryRun) {
  for (const auto& f : d_epsilon_fixtures()) {
    Rng rng(14);
    const BitVector B = random_stabilizing_set(f.h, rng);
    for (int r = 0; r < 100; ++r) {
      const auto d = d_epsilon_experiment(f.h, 0.1, B, rng.next(), 1000000);
      EXPECT_FALSE(d.t_parity.censored) << f.name;
      EXPECT_LE(d.c_2vm.steps, d.t_parity.steps) << f.name;
    }
    const auto a = d_epsilon_experiment(f.h, 0.1, B, 99, 1000000);
    const auto b = d_epsilon_experiment(f.h, 0.1, B, 99, 1000000);
    EXPECT_EQ(a.D, b.D);
    EXPECT_EQ(a.t_parity, b.t_parity);
  }
}

TEST(DEpsilon, VoterCouplingHolds) {
  Rng rng(15);
  for (int r = 0; r < 100; ++r) {
    const Hypergraph h = random_odd_connected(7, rng, r % 2 == 0);
    const auto A = random_bits(h.num_vertices(), rng);
    const auto B = random_bits(h.num_vertices(), rng);
    const auto v = coupled_voter_run(h, A, B, rng.next(), 100000);
    EXPECT_TRUE(v.coupled);
    EXPECT_LE(v.c_vm.steps, 100000u);
  }
}

TEST(Recurrence, TwoPartyReachesZeroOnOddConnected) {
  Rng rng(16);
  for (int r = 0; r < 10; ++r) {
    const bool even = r % 2 == 1;
    const Hypergraph h = random_odd_connected(7, rng, even);
    const std::size_t n = h.num_vertices();
    const oracle::Mask ones = (oracle::Mask{1} << n) - 1;
    for (oracle::Mask x = 0; x <= ones; ++x) {
      const auto reach = oracle::two_party_reachable(edges_of(h), x);
      if (even && x == ones) {
        EXPECT_EQ(reach.size(), 1u);
      } else {
        EXPECT_TRUE(reach.count(0));
      }
    }
  }
}
