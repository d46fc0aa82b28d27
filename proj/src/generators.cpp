#include "hyperdrift/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "hyperdrift/combinatorics.hpp"

namespace hyperdrift {

namespace {

bool parity_on(const Assignment& z, const std::vector<std::uint32_t>& vars) {
  bool p = false;
  for (const auto v : vars) p ^= z.test(v);
  return p;
}

std::vector<std::uint32_t> random_subset(std::size_t n, std::size_t k, Rng& rng) {
  // Partial Fisher-Yates over 0..n-1.
  std::vector<std::uint32_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.uniform(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

XorSatInstance gen_complete(std::size_t k, std::size_t n, const Assignment& z) {
  if (k == 0 || k > n) throw std::invalid_argument(fmt::format("gen_complete needs 1 <= k <= n, got k = {}, n = {}", k, n));
  if (z.size() != n) throw std::invalid_argument(fmt::format("witness has {} bits for {} variables", z.size(), n));
  std::vector<Equation> eqs;
  for_each_k_subset(n, k, [&](const std::vector<std::uint32_t>& s) { eqs.push_back({s, parity_on(z, s)}); });
  return XorSatInstance(n, std::move(eqs));
}

XorSatInstance gen_hnru(std::size_t n, std::size_t r, const BitVector& u) {
  if (r == 0 || r > n) throw std::invalid_argument(fmt::format("gen_hnru needs 1 <= r <= n, got r = {}, n = {}", r, n));
  const auto vars = static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(r)));
  if (u.size() != vars) throw std::invalid_argument(fmt::format("u has {} bits, expected C({},{}) = {}", u.size(), n, r, vars));
  std::vector<Equation> eqs(n);
  std::uint32_t id = 0;
  for_each_k_subset(n, r, [&](const std::vector<std::uint32_t>& s) {
    for (const auto i : s) {
      eqs[i].vars.push_back(id);
      if (u.test(id)) eqs[i].rhs = !eqs[i].rhs;
    }
    ++id;
  });
  return XorSatInstance(vars, std::move(eqs));
}

XorSatInstance gen_hnru(std::size_t n, std::size_t r, const std::map<std::vector<std::uint32_t>, bool>& u) {
  if (r == 0 || r > n) throw std::invalid_argument(fmt::format("gen_hnru needs 1 <= r <= n, got r = {}, n = {}", r, n));
  const auto vars = static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(r)));
  BitVector bits(vars);
  std::size_t id = 0;
  for_each_k_subset(n, r, [&](const std::vector<std::uint32_t>& s) {
    const auto it = u.find(s);
    if (it == u.end()) {
      throw std::invalid_argument(fmt::format("u has no value for subset {{{}}}", fmt::join(s, ",")));
    }
    bits.set(id++, it->second);
  });
  if (u.size() != vars) throw std::invalid_argument("u has entries that are not r-subsets of [n]");
  return gen_hnru(n, r, bits);
}

XorSatInstance gen_triadic_cycle(std::size_t m, const BitVector& u) {
  if (m < 3) throw std::invalid_argument(fmt::format("triadic cycle needs m >= 3, got {}", m));
  if (u.size() != 2 * m) throw std::invalid_argument(fmt::format("u has {} bits, expected {}", u.size(), 2 * m));
  std::vector<Equation> eqs;
  eqs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::uint32_t> vars{static_cast<std::uint32_t>((i + m - 1) % m), static_cast<std::uint32_t>(i),
                                    static_cast<std::uint32_t>(m + i)};
    std::sort(vars.begin(), vars.end());
    const bool rhs = parity_on(u, vars);
    eqs.push_back({std::move(vars), rhs});
  }
  return XorSatInstance(2 * m, std::move(eqs));
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  SimpleGraph g;
  g.n = n;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) g.edges.emplace_back(a, b);
  }
  return g;
}

SimpleGraph SimpleGraph::gnp(std::size_t n, double p, Rng& rng) {
  SimpleGraph g;
  g.n = n;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (rng.bernoulli(p)) g.edges.emplace_back(a, b);
    }
  }
  return g;
}

SimpleGraph SimpleGraph::from_edges(std::size_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument(fmt::format("loop at vertex {}", a));
    if (a > b) std::swap(a, b);
    if (b >= n) throw std::invalid_argument(fmt::format("vertex {} out of range for n = {}", b, n));
    if (!seen.insert({a, b}).second) throw std::invalid_argument(fmt::format("repeated edge {}-{}", a, b));
  }
  SimpleGraph g;
  g.n = n;
  g.edges = std::move(edges);
  return g;
}

std::vector<std::vector<std::uint32_t>> SimpleGraph::triangles() const {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> id;
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    const auto [a, b] = edges[e];
    id[{a, b}] = e;
    adj[a].push_back(b);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < adj[a].size(); ++i) {
      const auto b = adj[a][i];
      for (std::size_t j = i + 1; j < adj[a].size(); ++j) {
        const auto c = adj[a][j];
        const auto bc = id.find({b, c});
        if (bc == id.end()) continue;
        std::vector<std::uint32_t> tri{id.at({a, b}), id.at({a, c}), bc->second};
        std::sort(tri.begin(), tri.end());
        out.push_back(std::move(tri));
      }
    }
  }
  return out;
}

SimpleGraph glued_hexagon_sphere(std::size_t side) {
  if (side == 0) throw std::invalid_argument("glued_hexagon_sphere needs side >= 1");
  const int s = static_cast<int>(side);
  auto norm = [](int q, int r) { return std::max({std::abs(q), std::abs(r), std::abs(q + r)}); };
  std::map<std::pair<int, int>, std::uint32_t> lower;
  std::map<std::pair<int, int>, std::uint32_t> upper;
  std::uint32_t next = 0;
  for (int q = -s; q <= s; ++q) {
    for (int r = -s; r <= s; ++r) {
      if (norm(q, r) <= s) lower[{q, r}] = next++;
    }
  }
  for (const auto& [coord, v] : lower) {
    upper[coord] = norm(coord.first, coord.second) == s ? v : next++;
  }
  static constexpr int kDirs[3][2] = {{1, 0}, {0, 1}, {1, -1}};
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const auto* copy : {&lower, &upper}) {
    for (const auto& [coord, v] : *copy) {
      for (const auto& d : kDirs) {
        const auto it = copy->find({coord.first + d[0], coord.second + d[1]});
        if (it == copy->end()) continue;
        edges.insert({std::min(v, it->second), std::max(v, it->second)});
      }
    }
  }
  return SimpleGraph::from_edges(next, {edges.begin(), edges.end()});
}

CtdInstance gen_ctd(const SimpleGraph& g, const BitVector& labels, const std::optional<BitVector>& targets) {
  if (labels.size() != g.edges.size()) {
    throw std::invalid_argument(fmt::format("{} labels for {} edges", labels.size(), g.edges.size()));
  }
  if (targets && targets->size() != g.edges.size()) {
    throw std::invalid_argument(fmt::format("{} targets for {} edges", targets->size(), g.edges.size()));
  }
  std::vector<Equation> eqs;
  for (auto& tri : g.triangles()) {
    const bool rhs = targets ? parity_on(*targets, tri) : false;
    eqs.push_back({std::move(tri), rhs});
  }
  return {XorSatInstance(g.edges.size(), std::move(eqs)), labels};
}

PlantedInstance gen_random_k_uniform(std::size_t n, std::size_t m, std::size_t k, Rng& rng) {
  if (k == 0 || k > n) throw std::invalid_argument(fmt::format("random instance needs 1 <= k <= n, got k = {}, n = {}", k, n));
  if (static_cast<std::int64_t>(m) > binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k))) {
    throw std::invalid_argument(fmt::format("cannot choose {} distinct {}-subsets of {} variables", m, k, n));
  }
  BitVector z = random_bits(n, rng);
  std::set<std::vector<std::uint32_t>> used;
  std::vector<Equation> eqs;
  while (eqs.size() < m) {
    auto vars = random_subset(n, k, rng);
    if (!used.insert(vars).second) continue;
    const bool rhs = parity_on(z, vars);
    eqs.push_back({std::move(vars), rhs});
  }
  return {XorSatInstance(n, std::move(eqs)), std::move(z)};
}

Hypergraph complete_uniform_hypergraph(std::size_t n, std::size_t k) {
  std::vector<std::vector<Vertex>> edges;
  for_each_k_subset(n, k, [&](const std::vector<std::uint32_t>& s) { edges.emplace_back(s.begin(), s.end()); });
  return Hypergraph(n, std::move(edges));
}

Hypergraph complete_graph(std::size_t n) { return complete_uniform_hypergraph(n, 2); }

Hypergraph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
  std::vector<std::vector<Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Hypergraph(n, std::move(edges));
}

Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t min_size, std::size_t max_size, Rng& rng) {
  if (min_size == 0 || min_size > max_size || max_size > n) {
    throw std::invalid_argument(fmt::format("bad edge size range [{}, {}] for n = {}", min_size, max_size, n));
  }
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t size = min_size + rng.uniform(max_size - min_size + 1);
    auto s = random_subset(n, size, rng);
    edges.emplace_back(s.begin(), s.end());
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph random_connected_hypergraph(std::size_t n, std::size_t m, std::size_t min_size, std::size_t max_size, Rng& rng) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto h = random_hypergraph(n, m, min_size, max_size, rng);
    if (is_connected(h)) return h;
  }
  throw std::runtime_error(fmt::format("no connected hypergraph found for n = {}, m = {}", n, m));
}

Hypergraph random_regular_hypergraph(std::size_t n, std::size_t k, std::size_t num_variables, Rng& rng) {
  if (k == 0 || k > num_variables) throw std::invalid_argument("random_regular_hypergraph needs 1 <= k <= num_variables");
  std::vector<Equation> eqs;
  for (std::size_t i = 0; i < n; ++i) eqs.push_back({random_subset(num_variables, k, rng), false});
  return triadic_dual(XorSatInstance(num_variables, std::move(eqs)));
}

BitVector random_bits(std::size_t n, Rng& rng) {
  BitVector out(n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, (rng.next() >> 63) != 0);
  return out;
}

BitVector random_bits_of_weight(std::size_t n, std::size_t weight, Rng& rng) {
  if (weight > n) throw std::invalid_argument(fmt::format("weight {} exceeds length {}", weight, n));
  BitVector out(n);
  for (const auto i : random_subset(n, weight, rng)) out.set(i);
  return out;
}

}  // namespace hyperdrift
