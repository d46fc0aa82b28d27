#include "hyperdrift/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "hyperdrift/error.hpp"
#include "hyperdrift/gf2.hpp"

namespace hyperdrift {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(fmt::format("line {}: {}", line, what)), line_(line) {}

Hypergraph::Hypergraph(std::size_t n, std::vector<std::vector<Vertex>> edges)
    : n_(n), edges_(std::move(edges)), incidence_(n) {
  masks_.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& edge = edges_[e];
    if (edge.empty()) throw std::invalid_argument(fmt::format("edge {} is empty", e));
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw std::invalid_argument(fmt::format("edge {} repeats a vertex", e));
    }
    if (edge.back() >= n_) {
      throw std::invalid_argument(fmt::format("edge {} has vertex {} out of range for n = {}", e, edge.back(), n_));
    }
    BitVector mask(n_);
    for (const Vertex v : edge) {
      incidence_[v].push_back(static_cast<EdgeIndex>(e));
      mask.set(v);
    }
    masks_.push_back(std::move(mask));
  }
}

std::span<const EdgeIndex> Hypergraph::incident(Vertex v) const {
  if (v >= n_) throw std::out_of_range(fmt::format("vertex {} out of range for n = {}", v, n_));
  return incidence_[v];
}

std::size_t Hypergraph::degree(Vertex v) const { return incident(v).size(); }

std::optional<std::size_t> Hypergraph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  const auto [lo, hi] = degree_range();
  if (lo != hi) return std::nullopt;
  return lo;
}

std::pair<std::size_t, std::size_t> Hypergraph::degree_range() const {
  if (n_ == 0) return {0, 0};
  std::size_t lo = incidence_[0].size();
  std::size_t hi = lo;
  for (const auto& inc : incidence_) {
    lo = std::min(lo, inc.size());
    hi = std::max(hi, inc.size());
  }
  return {lo, hi};
}

std::size_t Hypergraph::total_incidences() const noexcept {
  std::size_t total = 0;
  for (const auto& e : edges_) total += e.size();
  return total;
}

bool Hypergraph::has_self_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.size() == 1; });
}

bool Hypergraph::contains(EdgeIndex e, Vertex v) const {
  const auto& edge = edges_.at(e);
  return std::binary_search(edge.begin(), edge.end(), v);
}

std::vector<Vertex> Hypergraph::open_neighborhood(Vertex v) const {
  std::vector<Vertex> out;
  for (const EdgeIndex e : incident(v)) {
    for (const Vertex w : edges_[e]) {
      if (w != v) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> Hypergraph::closed_neighborhood(Vertex v) const {
  auto out = open_neighborhood(v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

bool is_connected(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  if (n == 0) throw std::invalid_argument("is_connected requires at least one vertex");
  std::vector<bool> seen_vertex(n, false);
  std::vector<bool> seen_edge(h.num_edges(), false);
  std::vector<Vertex> stack{0};
  seen_vertex[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const EdgeIndex e : h.incident(v)) {
      if (seen_edge[e]) continue;
      seen_edge[e] = true;
      for (const Vertex w : h.edge(e)) {
        if (!seen_vertex[w]) {
          seen_vertex[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
  }
  return reached == n;
}

std::vector<BitVector> even_dominating_kernel(const Hypergraph& h) {
  std::vector<BitVector> rows;
  rows.reserve(h.num_edges());
  for (EdgeIndex e = 0; e < h.num_edges(); ++e) rows.push_back(h.edge_mask(e));
  return gf2::kernel_basis(rows, h.num_vertices());
}

bool is_odd_connected(const Hypergraph& h) {
  if (!is_connected(h)) throw std::invalid_argument("is_odd_connected requires a connected hypergraph");
  const auto kernel = even_dominating_kernel(h);
  if (kernel.empty()) return true;
  return kernel.size() == 1 && kernel.front().all();
}

OddCase odd_case(const Hypergraph& h) {
  const auto& edges = h.edges();
  const bool odd = std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.size() % 2 == 1; });
  return odd ? OddCase::OddEdge : OddCase::AllEven;
}

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError(line_no, "missing 'h <n> <m>' header");
  std::istringstream header(line);
  std::string tag;
  long long n = -1;
  long long m = -1;
  std::string extra;
  if (!(header >> tag >> n >> m) || tag != "h" || n < 0 || m < 0 || (header >> extra)) {
    throw ParseError(line_no, "malformed header, expected 'h <n> <m>'");
  }
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (next_content_line(in, line, line_no)) {
    if (static_cast<long long>(edges.size()) == m) throw ParseError(line_no, fmt::format("more than {} edges", m));
    std::istringstream row(line);
    if (!(row >> tag) || tag != "e") throw ParseError(line_no, "edge line must start with 'e'");
    std::vector<Vertex> edge;
    std::string token;
    while (row >> token) {
      long long v = 0;
      try {
        std::size_t used = 0;
        v = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError(line_no, fmt::format("invalid vertex id '{}'", token));
      }
      if (v < 0 || v >= n) throw ParseError(line_no, fmt::format("vertex {} out of range for n = {}", v, n));
      if (!edge.empty() && static_cast<Vertex>(v) == edge.back()) {
        throw ParseError(line_no, fmt::format("duplicate vertex {} in edge", v));
      }
      if (!edge.empty() && static_cast<Vertex>(v) < edge.back()) {
        throw ParseError(line_no, "vertex ids must be strictly increasing");
      }
      edge.push_back(static_cast<Vertex>(v));
    }
    if (edge.empty()) throw ParseError(line_no, "empty edge");
    edges.push_back(std::move(edge));
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, fmt::format("expected {} edges, found {}", m, edges.size()));
  }
  return Hypergraph(static_cast<std::size_t>(n), std::move(edges));
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "h " << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (const auto& edge : h.edges()) {
    out << 'e';
    for (const Vertex v : edge) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace hyperdrift
