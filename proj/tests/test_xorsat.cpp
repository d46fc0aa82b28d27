#include <gtest/gtest.h>

#include <sstream>

#include "hyperdrift/error.hpp"
#include "hyperdrift/generators.hpp"
#include "hyperdrift/xorsat.hpp"

using namespace hyperdrift;

namespace {

XorSatInstance small() {
  // x0+x1 = 1, x1+x2+x3 = 0, x3 = 1; x4 occurs nowhere.
  return XorSatInstance(5, {{{1, 0}, true}, {{1, 2, 3}, false}, {{3}, true}});
}

}  // namespace

TEST(XorSat, ConstructionSortsAndValidates) {
  const auto inst = small();
  EXPECT_EQ(inst.equation(0).vars, (std::vector<Variable>{0, 1}));
  EXPECT_FALSE(inst.uniform_width().has_value());
  EXPECT_THROW(XorSatInstance(3, {{{}, false}}), std::invalid_argument);
  EXPECT_THROW(XorSatInstance(3, {{{1, 1}, false}}), std::invalid_argument);
  EXPECT_THROW(XorSatInstance(3, {{{3}, false}}), std::invalid_argument);
  EXPECT_EQ(XorSatInstance(3, {{{0, 1}, true}, {{1, 2}, false}}).uniform_width(), 2u);
}

TEST(XorSat, SatisfactionAndUnsatCount) {
  const auto inst = small();
  const auto x = BitVector::from_string("10011");
  EXPECT_TRUE(inst.equation_satisfied(0, x));
  EXPECT_FALSE(inst.equation_satisfied(1, x));
  EXPECT_TRUE(inst.equation_satisfied(2, x));
  EXPECT_EQ(inst.unsatisfied_count(x), 1u);
  EXPECT_FALSE(inst.satisfies(x));
  EXPECT_TRUE(inst.satisfies(BitVector::from_string("10110")));
  EXPECT_THROW((void)inst.unsatisfied_count(BitVector(4)), std::invalid_argument);
}

TEST(XorSat, OccurrencesAndFormulaHypergraph) {
  const auto inst = small();
  const auto occ = inst.occurrences();
  EXPECT_EQ(occ[1], (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(occ[3], (std::vector<std::uint32_t>{1, 2}));
  EXPECT_TRUE(occ[4].empty());
  const auto h = formula_hypergraph(inst);
  EXPECT_EQ(h.num_vertices(), 5u);
  EXPECT_EQ(h.num_edges(), 3u);
  EXPECT_EQ(h.degree(4), 0u);
}

TEST(XorSat, TriadicDualDropsUnusedVariables) {
  const auto d = triadic_dual_map(small());
  EXPECT_EQ(d.graph.num_vertices(), 3u);
  EXPECT_EQ(d.graph.num_edges(), 4u);
  EXPECT_EQ(d.variable_of_edge, (std::vector<Variable>{0, 1, 2, 3}));
  EXPECT_FALSE(d.edge_of_variable[4].has_value());
  // Variables occurring once become self-loops.
  EXPECT_EQ(d.graph.edge(0).size(), 1u);
  EXPECT_EQ(d.graph.edge(*d.edge_of_variable[3]).size(), 2u);
}

TEST(XorSat, DualConfigMarksUnsatisfiedEquations) {
  const auto inst = small();
  EXPECT_EQ(dual_config(inst, BitVector(5)).to_string(), "101");
  EXPECT_EQ(dual_config(inst, BitVector::from_string("10110")).to_string(), "000");
}

// Flipping variable x toggles exactly the equations containing x, which is
// the dual edge of x.
TEST(XorSat, FlipTogglesDualEdge) {
  Rng rng(5);
  const auto p = gen_random_k_uniform(8, 10, 3, rng);
  const auto d = triadic_dual_map(p.instance);
  const auto x = random_bits(8, rng);
  for (Variable v = 0; v < 8; ++v) {
    auto y = x;
    y.flip(v);
    const auto diff = dual_config(p.instance, x) ^ dual_config(p.instance, y);
    if (d.edge_of_variable[v]) {
      EXPECT_EQ(diff, d.graph.edge_mask(*d.edge_of_variable[v]));
    } else {
      EXPECT_TRUE(diff.none());
    }
  }
}

TEST(XorSatIo, RoundTrip) {
  Rng rng(8);
  const auto p = gen_random_k_uniform(10, 12, 4, rng);
  std::stringstream ss;
  write_instance(ss, p.instance);
  EXPECT_EQ(parse_instance(ss), p.instance);
  std::stringstream as;
  write_assignment(as, p.witness);
  EXPECT_EQ(parse_assignment(as), p.witness);
}

TEST(XorSatIo, CommentsAndErrors) {
  std::istringstream ok("c comment\n# other\np xnf 3 2\n1 0 2 0\n0 1 0\n");
  const auto inst = parse_instance(ok);
  EXPECT_EQ(inst, XorSatInstance(3, {{{0, 2}, true}, {{1}, false}}));

  const auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      (void)parse_instance(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("p xnf 3 1\n2 0 0\n"), 2u);
  EXPECT_EQ(line_of("p xnf 3 1\n1 0 1\n"), 2u);
  EXPECT_EQ(line_of("p xnf 3 1\n1 3 0\n"), 2u);
  EXPECT_EQ(line_of("p xnf 3 1\n1 1 1 0\n"), 2u);
  EXPECT_EQ(line_of("p xnf 3 1\n1 2 1 0\n"), 2u);
  EXPECT_EQ(line_of("p cnf 3 1\n"), 1u);
  EXPECT_EQ(line_of("p xnf 3 1\n1 0 0\n1 1 0\n"), 3u);
  std::istringstream bad("10x\n");
  EXPECT_THROW(parse_assignment(bad), ParseError);
}
