#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "hyperdrift/bitvec.hpp"

namespace hyperdrift {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

/// A vertex together with one of the hyperedges containing it.
struct VertexEdgePair {
  Vertex v = 0;
  EdgeIndex e = 0;
  friend bool operator==(const VertexEdgePair&, const VertexEdgePair&) = default;
};

enum class OddCase { OddEdge, AllEven };

/// Hypergraph on vertices 0..n-1 with an ordered list of hyperedges.
///
/// Hyperedges are nonempty duplicate-free vertex sets stored sorted. Size-1
/// hyperedges are self-loops. The same vertex set may appear several times;
/// each occurrence is a separate edge identified by its index.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Throws std::invalid_argument on out-of-range ids, empty edges, or a
  /// vertex repeated inside one edge.
  Hypergraph(std::size_t n, std::vector<std::vector<Vertex>> edges);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Vertex> edge(EdgeIndex e) const { return edges_.at(e); }
  const std::vector<std::vector<Vertex>>& edges() const noexcept { return edges_; }
  /// Edge indices containing v, increasing.
  std::span<const EdgeIndex> incident(Vertex v) const;
  /// Indicator of edge e as a vertex subset.
  const BitVector& edge_mask(EdgeIndex e) const { return masks_.at(e); }

  std::size_t degree(Vertex v) const;
  /// The common degree if every vertex has the same degree.
  std::optional<std::size_t> regular_degree() const;
  std::pair<std::size_t, std::size_t> degree_range() const;
  std::size_t total_incidences() const noexcept;
  bool has_self_loop() const;

  bool contains(EdgeIndex e, Vertex v) const;

  std::vector<Vertex> open_neighborhood(Vertex v) const;
  std::vector<Vertex> closed_neighborhood(Vertex v) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Vertex>> edges_;
  std::vector<std::vector<EdgeIndex>> incidence_;
  std::vector<BitVector> masks_;
};

/// Connectivity of the vertex/edge incidence graph. Requires n >= 1.
bool is_connected(const Hypergraph& h);

/// Basis of {A : |A ∩ e| even for every edge e}, in reduced row echelon form.
std::vector<BitVector> even_dominating_kernel(const Hypergraph& h);

/// No even dominating set other than the empty set and V. Throws
/// std::invalid_argument when h is not connected.
bool is_odd_connected(const Hypergraph& h);

OddCase odd_case(const Hypergraph& h);

/// Text form: "h <n> <m>" then m lines "e v1 ... vk" with strictly increasing
/// 0-based ids. Throws ParseError.
Hypergraph parse_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

}  // namespace hyperdrift
