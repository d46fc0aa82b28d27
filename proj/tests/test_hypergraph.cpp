#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include "helpers.hpp"
#include "hyperdrift/error.hpp"
#include "hyperdrift/generators.hpp"
#include "hyperdrift/hypergraph.hpp"
#include "oracles.hpp"

using namespace hyperdrift;
using testing_support::edges_of;

TEST(Hypergraph, EdgesAreSortedAndIncidenceBuilt) {
  Hypergraph h(4, {{2, 0}, {1}, {3, 1, 0}});
  EXPECT_EQ(h.num_vertices(), 4u);
  EXPECT_EQ(h.num_edges(), 3u);
  EXPECT_EQ(std::vector<Vertex>(h.edge(0).begin(), h.edge(0).end()), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(h.degree(0), 2u);
  EXPECT_EQ(h.degree(1), 2u);
  EXPECT_EQ(h.degree(3), 1u);
  EXPECT_EQ(h.total_incidences(), 6u);
  EXPECT_TRUE(h.has_self_loop());
  EXPECT_TRUE(h.contains(2, 3));
  EXPECT_FALSE(h.contains(0, 1));
  EXPECT_EQ(h.degree_range(), std::make_pair(std::size_t{1}, std::size_t{2}));
  EXPECT_FALSE(h.regular_degree().has_value());
  EXPECT_EQ(h.edge_mask(2).to_string(), "1101");
}

TEST(Hypergraph, RejectsMalformedEdges) {
  EXPECT_THROW(Hypergraph(3, {{}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, {{3}}), std::invalid_argument);
  EXPECT_THROW((void)Hypergraph(3, {{0}}).incident(5), std::out_of_range);
}

TEST(Hypergraph, Neighborhoods) {
  Hypergraph h(5, {{0, 1}, {1, 2, 3}, {4}});
  EXPECT_EQ(h.open_neighborhood(1), (std::vector<Vertex>{0, 2, 3}));
  EXPECT_EQ(h.closed_neighborhood(1), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(h.open_neighborhood(4).empty());
}

TEST(Hypergraph, Connectivity) {
  EXPECT_TRUE(is_connected(complete_graph(4)));
  EXPECT_FALSE(is_connected(Hypergraph(4, {{0, 1}, {2, 3}})));
  EXPECT_FALSE(is_connected(Hypergraph(3, {{0, 1}})));
  EXPECT_TRUE(is_connected(Hypergraph(1, {{0}})));
}

TEST(Hypergraph, OddConnectivityOfSmallFamilies) {
  EXPECT_TRUE(is_odd_connected(cycle_graph(4)));
  EXPECT_TRUE(is_odd_connected(cycle_graph(5)));
  EXPECT_EQ(odd_case(cycle_graph(5)), OddCase::AllEven);
  EXPECT_TRUE(is_odd_connected(complete_graph(4)));
  EXPECT_FALSE(is_odd_connected(Hypergraph(4, {{0, 1, 2, 3}})));
  EXPECT_TRUE(is_odd_connected(Hypergraph(1, {{0}})));
  EXPECT_EQ(odd_case(Hypergraph(3, {{0, 1}, {1, 2}, {2}})), OddCase::OddEdge);
  EXPECT_THROW((void)is_odd_connected(Hypergraph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST(Hypergraph, OddConnectivityMatchesEnumeration) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.uniform(7);
    const Hypergraph h = random_connected_hypergraph(n, n + rng.uniform(n), 1, std::min<std::size_t>(4, n), rng);
    EXPECT_EQ(is_odd_connected(h), oracle::odd_connected(n, edges_of(h))) << trial;
    const auto kernel = even_dominating_kernel(h);
    EXPECT_EQ(std::size_t{1} << kernel.size(), oracle::even_sets(n, edges_of(h)).size());
  }
}

TEST(HypergraphIo, RoundTrip) {
  Rng rng(3);
  const Hypergraph h = random_connected_hypergraph(9, 14, 1, 4, rng);
  std::stringstream ss;
  write_hypergraph(ss, h);
  EXPECT_EQ(parse_hypergraph(ss), h);
}

TEST(HypergraphIo, SkipsCommentsAndBlankLines) {
  std::istringstream in("# triangle\n\nh 3 3\ne 0 1\n# middle\ne 1 2\ne 0 2\n");
  const auto h = parse_hypergraph(in);
  EXPECT_EQ(h, Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}));
}

namespace {

std::size_t parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    (void)parse_hypergraph(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(HypergraphIo, ReportsLineOfFirstError) {
  std::istringstream empty("");
  EXPECT_THROW(parse_hypergraph(empty), ParseError);
  EXPECT_EQ(parse_error_line("h 3 1\ne 0 3\n"), 2u);
  EXPECT_EQ(parse_error_line("h 3 2\ne 0 1\ne 1 1\n"), 3u);
  EXPECT_EQ(parse_error_line("h 3 2\ne 0 1\nx 1 2\n"), 3u);
  EXPECT_EQ(parse_error_line("h 3 1\ne 2 1\n"), 2u);
  EXPECT_EQ(parse_error_line("h 3 1\ne\n"), 2u);
  EXPECT_EQ(parse_error_line("h 3 1\ne 0\ne 1\n"), 3u);
  EXPECT_EQ(parse_error_line("h 2\n"), 1u);
  EXPECT_EQ(parse_error_line("h 3 1\ne 0 a\n"), 2u);
  std::istringstream short_file("h 3 2\ne 0 1\n");
  EXPECT_THROW(parse_hypergraph(short_file), ParseError);
}
