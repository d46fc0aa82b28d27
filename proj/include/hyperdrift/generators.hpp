#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hyperdrift/bitvec.hpp"
#include "hyperdrift/hypergraph.hpp"
#include "hyperdrift/rng.hpp"
#include "hyperdrift/xorsat.hpp"

namespace hyperdrift {

/// Instance together with an assignment that satisfies it.
struct PlantedInstance {
  XorSatInstance instance;
  Assignment witness;
};

/// All C(n, k) width-k equations, rhs = parity of z on each subset.
XorSatInstance gen_complete(std::size_t k, std::size_t n, const Assignment& z);

/// One variable per r-subset of [n] (lexicographic order), one equation per
/// i in [n] over the variables whose subset contains i, rhs from u.
XorSatInstance gen_hnru(std::size_t n, std::size_t r, const std::map<std::vector<std::uint32_t>, bool>& u);
/// Same with u given as bits in lexicographic subset order.
XorSatInstance gen_hnru(std::size_t n, std::size_t r, const BitVector& u);

/// Ring of m triangles. Variable i (i < m) is the edge shared by triangles i
/// and i+1 mod m, variable m+i is the private edge of triangle i. Equation i
/// is over {i-1 mod m, i, m+i} with rhs = parity of u there. u has 2m bits.
XorSatInstance gen_triadic_cycle(std::size_t m, const BitVector& u);

struct SimpleGraph {
  std::size_t n = 0;
  /// Edges (a, b) with a < b, no repeats; the index is the edge id.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  static SimpleGraph complete(std::size_t n);
  static SimpleGraph gnp(std::size_t n, double p, Rng& rng);
  /// Throws std::invalid_argument on loops, repeats or bad ids; sorts pairs.
  static SimpleGraph from_edges(std::size_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  /// Triangles as triples of edge ids, ordered by their vertex triples.
  std::vector<std::vector<std::uint32_t>> triangles() const;
};

/// Two copies of the hexagonal patch of the triangular lattice with the given
/// side length, glued along their boundary ring into a triangulated sphere.
SimpleGraph glued_hexagon_sphere(std::size_t side);

struct CtdInstance {
  XorSatInstance instance;
  Assignment initial;
};

/// One variable per graph edge, one equation per triangle. rhs is the parity
/// of targets on the triangle (all zero when targets is absent); the initial
/// assignment is the labels.
CtdInstance gen_ctd(const SimpleGraph& g, const BitVector& labels, const std::optional<BitVector>& targets = std::nullopt);

/// m distinct uniformly random width-k varsets over n variables with rhs
/// planted from a uniform random z.
PlantedInstance gen_random_k_uniform(std::size_t n, std::size_t m, std::size_t k, Rng& rng);

/// K(n, k): every k-subset once, lexicographic order.
Hypergraph complete_uniform_hypergraph(std::size_t n, std::size_t k);
Hypergraph complete_graph(std::size_t n);
Hypergraph cycle_graph(std::size_t n);

/// m edges with sizes uniform in [min_size, max_size]; vertices uniform
/// without repetition inside an edge.
Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t min_size, std::size_t max_size, Rng& rng);
/// Resamples random_hypergraph until the result is connected.
Hypergraph random_connected_hypergraph(std::size_t n, std::size_t m, std::size_t min_size, std::size_t max_size, Rng& rng);

/// Triadic dual of a random width-k instance with n equations; k-regular.
Hypergraph random_regular_hypergraph(std::size_t n, std::size_t k, std::size_t num_variables, Rng& rng);

/// Uniform random configuration of the given length.
BitVector random_bits(std::size_t n, Rng& rng);
/// Uniform random subset of exactly `weight` positions.
BitVector random_bits_of_weight(std::size_t n, std::size_t weight, Rng& rng);

}  // namespace hyperdrift
