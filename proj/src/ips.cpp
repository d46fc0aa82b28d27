#include "hyperdrift/ips.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include <fmt/format.h>

#include "hyperdrift/error.hpp"

namespace hyperdrift {

namespace {

void check_pair(const Hypergraph& h, VertexEdgePair p) {
  if (p.e >= h.num_edges() || p.v >= h.num_vertices() || !h.contains(p.e, p.v)) {
    throw std::invalid_argument(fmt::format("pair (v={}, e={}) is not an incidence", p.v, p.e));
  }
}

void check_size(const Hypergraph& h, const BitVector& x, const char* what) {
  if (x.size() != h.num_vertices()) {
    throw std::invalid_argument(fmt::format("{} has {} bits for {} vertices", what, x.size(), h.num_vertices()));
  }
}

void flip_edge(const Hypergraph& h, BitConfig& state, EdgeIndex e) {
  for (const Vertex w : h.edge(e)) state.flip(w);
}

}  // namespace

BitConfig arw_step(const Hypergraph& h, BitConfig state, VertexEdgePair p) {
  check_pair(h, p);
  if (!state.test(p.v)) throw std::invalid_argument(fmt::format("eager move at dead vertex {}", p.v));
  flip_edge(h, state, p.e);
  return state;
}

BitConfig arw_step_lazy(const Hypergraph& h, BitConfig state, VertexEdgePair p) {
  check_pair(h, p);
  if (state.test(p.v)) flip_edge(h, state, p.e);
  return state;
}

void arw_apply(const Hypergraph& h, BitConfig& state, VertexEdgePair p, ArwMode mode) {
  if (!state.test(p.v)) {
    if (mode == ArwMode::Eager) throw std::invalid_argument(fmt::format("eager move at dead vertex {}", p.v));
    return;
  }
  flip_edge(h, state, p.e);
}

VertexEdgePair sample_pair(const Hypergraph& h, Rng& rng) {
  const auto v = static_cast<Vertex>(rng.uniform(h.num_vertices()));
  const auto inc = h.incident(v);
  if (inc.empty()) throw std::invalid_argument(fmt::format("vertex {} lies in no edge", v));
  return {v, inc[rng.uniform(inc.size())]};
}

VertexEdgePair sample_live_pair(const Hypergraph& h, const BitConfig& state, Rng& rng) {
  const std::size_t live = state.count();
  if (live == 0) throw std::invalid_argument("no live vertex to move");
  const auto v = static_cast<Vertex>(state.select(rng.uniform(live)));
  const auto inc = h.incident(v);
  if (inc.empty()) throw std::invalid_argument(fmt::format("vertex {} lies in no edge", v));
  return {v, inc[rng.uniform(inc.size())]};
}

VertexEdgePair sample_pair(const Hypergraph& h, const BitConfig& state, ArwMode mode, Rng& rng) {
  return mode == ArwMode::Eager ? sample_live_pair(h, state, rng) : sample_pair(h, rng);
}

StopTime run_arw(const Hypergraph& h, const BitConfig& init, ArwMode mode, std::uint64_t seed, std::uint64_t max_steps) {
  check_size(h, init, "initial configuration");
  BitConfig state = init;
  Rng rng(seed);
  StopTime out;
  while (state.any()) {
    if (out.steps == max_steps) {
      out.censored = true;
      return out;
    }
    arw_apply(h, state, sample_pair(h, state, mode, rng), mode);
    ++out.steps;
  }
  return out;
}

MultisetState::MultisetState(std::size_t num_vertices, std::size_t num_labels, bool mod2)
    : n_(num_vertices), labels_(num_labels), mod2_(mod2) {
  if (mod2_) {
    parity_.assign(n_, BitVector(labels_));
  } else {
    counts_.assign(n_ * labels_, Count(0));
  }
}

MultisetState MultisetState::singletons(const BitVector& holders, bool mod2) {
  MultisetState s(holders.size(), holders.size(), mod2);
  holders.for_each_set([&](std::size_t v) { s.set_count(v, v, 1); });
  return s;
}

MultisetState MultisetState::distinct(std::size_t n, bool mod2) { return singletons(BitVector(n, true), mod2); }

MultisetState::Count MultisetState::count(std::size_t v, std::size_t label) const {
  if (mod2_) return parity_.at(v).test(label) ? 1 : 0;
  return counts_.at(v * labels_ + label);
}

void MultisetState::set_count(std::size_t v, std::size_t label, const Count& c) {
  if (c < 0) throw std::invalid_argument("multiplicities are nonnegative");
  if (mod2_) {
    parity_.at(v).set(label, boost::multiprecision::bit_test(c, 0));
  } else {
    counts_.at(v * labels_ + label) = c;
  }
}

MultisetState::Count MultisetState::size(std::size_t v) const {
  if (mod2_) return parity_.at(v).parity() ? 1 : 0;
  Count total = 0;
  for (std::size_t l = 0; l < labels_; ++l) total += counts_[v * labels_ + l];
  return total;
}

bool MultisetState::size_odd(std::size_t v) const {
  if (mod2_) return parity_.at(v).parity();
  bool odd = false;
  for (std::size_t l = 0; l < labels_; ++l) odd ^= boost::multiprecision::bit_test(counts_[v * labels_ + l], 0);
  return odd;
}

bool MultisetState::empty(std::size_t v) const {
  if (mod2_) return parity_.at(v).none();
  for (std::size_t l = 0; l < labels_; ++l) {
    if (counts_[v * labels_ + l] != 0) return false;
  }
  return true;
}

MultisetState::Count MultisetState::total(std::size_t label) const {
  Count t = 0;
  for (std::size_t v = 0; v < n_; ++v) t += count(v, label);
  return t;
}

void MultisetState::add_into(std::size_t to, std::size_t from) {
  if (mod2_) {
    parity_.at(to) ^= parity_.at(from);
    return;
  }
  for (std::size_t l = 0; l < labels_; ++l) counts_[to * labels_ + l] += counts_[from * labels_ + l];
}

void MultisetState::clear(std::size_t v) {
  if (mod2_) {
    parity_.at(v).clear();
    return;
  }
  for (std::size_t l = 0; l < labels_; ++l) counts_[v * labels_ + l] = 0;
}

void MultisetState::assign_sum(std::size_t to, std::span<const Vertex> sources, Vertex skip) {
  if (mod2_) {
    BitVector acc(labels_);
    for (const Vertex w : sources) {
      if (w != skip) acc ^= parity_.at(w);
    }
    parity_.at(to) = std::move(acc);
    return;
  }
  std::vector<Count> acc(labels_, Count(0));
  for (const Vertex w : sources) {
    if (w == skip) continue;
    for (std::size_t l = 0; l < labels_; ++l) acc[l] += counts_[w * labels_ + l];
  }
  std::move(acc.begin(), acc.end(), counts_.begin() + static_cast<std::ptrdiff_t>(to * labels_));
}

BitVector MultisetState::odd_sizes() const {
  BitVector out(n_);
  for (std::size_t v = 0; v < n_; ++v) out.set(v, size_odd(v));
  return out;
}

void crw_apply(const Hypergraph& h, MultisetState& state, VertexEdgePair p) {
  check_pair(h, p);
  for (const Vertex w : h.edge(p.e)) {
    if (w != p.v) state.add_into(w, p.v);
  }
  state.clear(p.v);
}

MultisetState crw_step(const Hypergraph& h, MultisetState state, VertexEdgePair p) {
  crw_apply(h, state, p);
  return state;
}

void voter_apply(const Hypergraph& h, MultisetState& state, VertexEdgePair p) {
  check_pair(h, p);
  state.assign_sum(p.v, h.edge(p.e), p.v);
}

MultisetState voter_step(const Hypergraph& h, MultisetState state, VertexEdgePair p) {
  voter_apply(h, state, p);
  return state;
}

void two_party_apply(const Hypergraph& h, BitConfig& state, VertexEdgePair p) {
  check_pair(h, p);
  bool acc = false;
  for (const Vertex w : h.edge(p.e)) {
    if (w != p.v) acc ^= state.test(w);
  }
  state.set(p.v, acc);
}

BitConfig two_party_step(const Hypergraph& h, BitConfig state, VertexEdgePair p) {
  two_party_apply(h, state, p);
  return state;
}

bool crw_parity_on(const MultisetState& state, const BitVector& B) {
  bool ok = true;
  B.for_each_set([&](std::size_t j) { ok = ok && !state.size_odd(j); });
  return ok;
}

namespace {

BitVector odd_opinions_on(const MultisetState& state, const BitVector& B) {
  BitVector odd(state.num_labels());
  for (std::size_t l = 0; l < state.num_labels(); ++l) {
    bool parity = false;
    B.for_each_set([&](std::size_t j) { parity ^= boost::multiprecision::bit_test(state.count(j, l), 0); });
    odd.set(l, parity);
  }
  return odd;
}

}  // namespace

bool voter_parity_on(const MultisetState& state, const BitVector& B) { return odd_opinions_on(state, B).none(); }

bool parity_on(const BitConfig& state, const BitVector& B) { return !state.dot(B); }

namespace {

constexpr std::uint64_t kInfinity = std::numeric_limits<std::uint64_t>::max();

using Tag = std::pair<std::uint32_t, std::uint64_t>;
using TaggedSet = std::map<Tag, MultisetState::Count>;

std::optional<std::uint32_t> witness(const TaggedSet& s) {
  for (const auto& [tag, c] : s) {
    if (tag.second == kInfinity && c > 0) return tag.first;
  }
  return std::nullopt;
}

void add_all(TaggedSet& to, const TaggedSet& from) {
  for (const auto& [tag, c] : from) to[tag] += c;
}

void remove_one(TaggedSet& s, const Tag& tag) {
  auto it = s.find(tag);
  if (--it->second == 0) s.erase(it);
}

void tagged_step(const Hypergraph& h, std::vector<TaggedSet>& state, VertexEdgePair p, std::uint64_t t) {
  const TaggedSet source = state[p.v];
  const auto b_i = witness(source);
  for (const Vertex j : h.edge(p.e)) {
    if (j == p.v) continue;
    const auto b_j = witness(state[j]);
    if (b_i && b_j) {
      TaggedSet merged = source;
      remove_one(merged, {*b_i, kInfinity});
      remove_one(state[j], {*b_j, kInfinity});
      add_all(merged, state[j]);
      merged[{*b_i, t}] += 1;
      merged[{*b_j, t}] += 1;
      state[j] = std::move(merged);
    } else {
      add_all(state[j], source);
    }
  }
  state[p.v].clear();
}

bool projections_match(const std::vector<TaggedSet>& tagged, const BitConfig& arw, const MultisetState& crw) {
  const std::size_t n = tagged.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (witness(tagged[v]).has_value() != arw.test(v)) return false;
    std::vector<MultisetState::Count> labels(crw.num_labels(), 0);
    for (const auto& [tag, c] : tagged[v]) labels.at(tag.first) += c;
    for (std::size_t l = 0; l < labels.size(); ++l) {
      if (labels[l] != crw.count(v, l)) return false;
    }
  }
  return true;
}

bool any_live(const std::vector<TaggedSet>& tagged) {
  return std::any_of(tagged.begin(), tagged.end(), [](const TaggedSet& s) { return witness(s).has_value(); });
}

}  // namespace

CoupledOutcome coupled_process_P(const Hypergraph& h, const BitVector& B, ArwMode mode, std::uint64_t seed,
                                 std::uint64_t max_steps) {
  check_size(h, B, "B");
  const std::size_t n = h.num_vertices();
  std::vector<TaggedSet> tagged(n);
  B.for_each_set([&](std::size_t v) { tagged[v][{static_cast<std::uint32_t>(v), kInfinity}] = 1; });
  BitConfig arw = B;
  MultisetState crw = MultisetState::singletons(B);
  Rng rng(seed);

  CoupledOutcome out;
  std::optional<std::uint64_t> ann;
  std::optional<std::uint64_t> coal;
  std::optional<std::uint64_t> p_time;
  std::uint64_t t = 0;
  auto observe = [&] {
    if (!ann && arw.none()) ann = t;
    if (!coal && crw_parity_on(crw, BitVector(n, true))) coal = t;
    if (!p_time && !any_live(tagged)) p_time = t;
  };
  observe();
  while ((!ann || !coal || !p_time) && t < max_steps) {
    if (mode == ArwMode::Eager && arw.none()) break;
    const VertexEdgePair pair = sample_pair(h, arw, mode, rng);
    ++t;
    arw_apply(h, arw, pair, mode);
    crw_apply(h, crw, pair);
    tagged_step(h, tagged, pair, t);
    if (!projections_match(tagged, arw, crw)) out.projections_agree = false;
    observe();
  }
  auto finish = [&](const std::optional<std::uint64_t>& v) { return v ? StopTime{*v, false} : StopTime{t, true}; };
  out.c_ann = finish(ann);
  out.c_coal = finish(coal);
  out.c_p = finish(p_time);
  return out;
}

void Schedule::validate(const Hypergraph& h) const {
  for (const auto& p : events) check_pair(h, p);
}

Schedule random_schedule(const Hypergraph& h, std::size_t length, Rng& rng) {
  Schedule s;
  s.events.reserve(length);
  for (std::size_t i = 0; i < length; ++i) s.events.push_back(sample_pair(h, rng));
  return s;
}

void write_schedule_csv(std::ostream& out, const Schedule& s) {
  out << "t,v,e\n";
  for (std::size_t i = 0; i < s.events.size(); ++i) out << i + 1 << ',' << s.events[i].v << ',' << s.events[i].e << '\n';
}

Schedule read_schedule_csv(std::istream& in) {
  Schedule s;
  std::string line;
  std::size_t line_no = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line != "t,v,e") throw ParseError(line_no, "expected header 't,v,e'");
      continue;
    }
    std::istringstream row(line);
    unsigned long long t = 0;
    unsigned long long v = 0;
    unsigned long long e = 0;
    char c1 = 0;
    char c2 = 0;
    std::string rest;
    if (!(row >> t >> c1 >> v >> c2 >> e) || c1 != ',' || c2 != ',' || (row >> rest)) {
      throw ParseError(line_no, "expected 't,v,e' integers");
    }
    if (t != s.events.size() + 1) throw ParseError(line_no, fmt::format("expected t = {}", s.events.size() + 1));
    s.events.push_back({static_cast<Vertex>(v), static_cast<EdgeIndex>(e)});
  }
  if (header) throw ParseError(line_no, "missing header 't,v,e'");
  return s;
}

DualityReport duality_harness(const Hypergraph& h, const BitVector& B, const Schedule& schedule, bool mod2) {
  check_size(h, B, "B");
  schedule.validate(h);
  const std::size_t n = h.num_vertices();
  const BitVector all(n, true);
  DualityReport report;
  MultisetState crw = MultisetState::singletons(B, mod2);
  for (std::size_t t = 0; t <= schedule.size(); ++t) {
    if (t > 0) crw_apply(h, crw, schedule.events[t - 1]);
    MultisetState voter = MultisetState::distinct(n, mod2);
    for (std::size_t r = t; r > 0; --r) voter_apply(h, voter, schedule.events[r - 1]);

    const bool crw_ok = crw_parity_on(crw, all);
    const bool voter_ok = voter_parity_on(voter, B);
    report.crw_parity.push_back(crw_ok);
    report.voter_parity.push_back(voter_ok);
    if (crw_ok && !report.crw_time) report.crw_time = t;
    if (voter_ok && !report.voter_time) report.voter_time = t;
    if (crw_ok != voter_ok) report.iff_holds = false;
    if (crw.odd_sizes() != odd_opinions_on(voter, B)) report.odd_sets_agree = false;
  }
  return report;
}

DEpsilonOutcome d_epsilon_experiment(const Hypergraph& h, double eps, const BitVector& B, std::uint64_t seed,
                                     std::uint64_t max_steps) {
  if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("eps must lie in (0, 1/2)");
  check_size(h, B, "B");
  const std::size_t n = h.num_vertices();
  const bool all_even = odd_case(h) == OddCase::AllEven;
  Rng d_rng(derive_seed(seed, 0));
  Rng rng(derive_seed(seed, 1));
  DEpsilonOutcome out;
  out.D = BitVector(n);
  for (std::size_t v = 0; v < n; ++v) out.D.set(v, d_rng.bernoulli(0.5 - eps));
  BitConfig state = out.D;
  std::optional<std::uint64_t> t_parity;
  std::optional<std::uint64_t> c_2vm;
  std::uint64_t t = 0;
  auto observe = [&] {
    if (!t_parity && (state.none() || (all_even && state.all()))) t_parity = t;
    if (!c_2vm && parity_on(state, B)) c_2vm = t;
  };
  observe();
  while ((!t_parity || !c_2vm) && t < max_steps) {
    two_party_apply(h, state, sample_pair(h, rng));
    ++t;
    observe();
  }
  out.t_parity = t_parity ? StopTime{*t_parity, false} : StopTime{t, true};
  out.c_2vm = c_2vm ? StopTime{*c_2vm, false} : StopTime{t, true};
  return out;
}

VoterCoupling coupled_voter_run(const Hypergraph& h, const BitVector& A, const BitVector& B, std::uint64_t seed,
                                std::uint64_t max_steps) {
  check_size(h, A, "A");
  check_size(h, B, "B");
  const std::size_t n = h.num_vertices();
  MultisetState voter = MultisetState::distinct(n, true);
  BitConfig two = A;
  Rng rng(seed);
  VoterCoupling out;
  std::optional<std::uint64_t> c_vm;
  std::optional<std::uint64_t> c_2vm;
  std::uint64_t t = 0;
  auto observe = [&] {
    if (!c_vm && voter_parity_on(voter, B)) c_vm = t;
    if (!c_2vm && parity_on(two, B)) c_2vm = t;
  };
  observe();
  while ((!c_vm || !c_2vm) && t < max_steps) {
    const auto pair = sample_pair(h, rng);
    voter_apply(h, voter, pair);
    two_party_apply(h, two, pair);
    ++t;
    for (std::size_t v = 0; v < n && out.coupled; ++v) {
      bool parity = false;
      A.for_each_set([&](std::size_t a) { parity ^= voter.count(v, a) != 0; });
      if (parity != two.test(v)) out.coupled = false;
    }
    observe();
  }
  out.c_vm = c_vm ? StopTime{*c_vm, false} : StopTime{t, true};
  out.c_2vm = c_2vm ? StopTime{*c_2vm, false} : StopTime{t, true};
  return out;
}

namespace {

struct CompactGraph {
  std::size_t n = 0;
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<EdgeIndex>> incidence;
};

CompactGraph compact(const Hypergraph& h) {
  if (h.num_vertices() > kMaxBfsVertices) {
    throw std::invalid_argument(
        fmt::format("configuration search limited to n <= {}, got {}", kMaxBfsVertices, h.num_vertices()));
  }
  CompactGraph g;
  g.n = h.num_vertices();
  for (EdgeIndex e = 0; e < h.num_edges(); ++e) g.masks.push_back(h.edge_mask(e).to_u64());
  for (Vertex v = 0; v < g.n; ++v) {
    const auto inc = h.incident(v);
    g.incidence.emplace_back(inc.begin(), inc.end());
  }
  return g;
}

template <class Fn>
void for_each_move(const CompactGraph& g, Dynamics dynamics, std::uint64_t x, Fn&& fn) {
  for (Vertex v = 0; v < g.n; ++v) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (dynamics != Dynamics::TwoParty) {
      if ((x & bit) == 0) continue;
      for (const EdgeIndex e : g.incidence[v]) fn(x ^ g.masks[e], VertexEdgePair{v, e});
    } else {
      for (const EdgeIndex e : g.incidence[v]) {
        const bool value = (std::popcount(x & g.masks[e] & ~bit) & 1) != 0;
        fn(value ? (x | bit) : (x & ~bit), VertexEdgePair{v, e});
      }
    }
  }
}

}  // namespace

std::vector<std::uint64_t> config_bfs(const Hypergraph& h, Dynamics dynamics, const BitConfig& w1) {
  check_size(h, w1, "w1");
  const CompactGraph g = compact(h);
  std::vector<bool> seen(std::size_t{1} << g.n, false);
  std::vector<std::uint64_t> queue{w1.to_u64()};
  seen[queue.front()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for_each_move(g, dynamics, queue[head], [&](std::uint64_t y, VertexEdgePair) {
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    });
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool config_reachable(const Hypergraph& h, Dynamics dynamics, const BitConfig& w1, const BitConfig& w2) {
  check_size(h, w2, "w2");
  const auto reach = config_bfs(h, dynamics, w1);
  return std::binary_search(reach.begin(), reach.end(), w2.to_u64());
}

std::optional<std::vector<VertexEdgePair>> config_path(const Hypergraph& h, Dynamics dynamics, const BitConfig& w1,
                                                       const BitConfig& w2) {
  check_size(h, w1, "w1");
  check_size(h, w2, "w2");
  const CompactGraph g = compact(h);
  const std::uint64_t start = w1.to_u64();
  const std::uint64_t goal = w2.to_u64();
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, VertexEdgePair>> parent;
  parent.emplace(start, std::pair{start, VertexEdgePair{}});
  std::vector<std::uint64_t> queue{start};
  for (std::size_t head = 0; head < queue.size() && !parent.count(goal); ++head) {
    const std::uint64_t x = queue[head];
    for_each_move(g, dynamics, x, [&](std::uint64_t y, VertexEdgePair p) {
      if (parent.emplace(y, std::pair{x, p}).second) queue.push_back(y);
    });
  }
  if (!parent.count(goal)) return std::nullopt;
  std::vector<VertexEdgePair> path;
  for (std::uint64_t x = goal; x != start;) {
    const auto& [prev, move] = parent.at(x);
    path.push_back(move);
    x = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<bool> bfs_stabilizing_set(const Hypergraph& h) {
  const CompactGraph g = compact(h);
  const std::size_t total = std::size_t{1} << g.n;
  // Eager moves reaching y along e come from x = y ^ e, legal iff x has a
  // live vertex in e, i.e. y has a dead one.
  auto predecessors = [&](std::uint64_t y, auto&& fn) {
    for (const std::uint64_t m : g.masks) {
      if ((~y & m) != 0) fn(y ^ m);
    }
  };
  std::vector<bool> reaches_zero(total, false);
  std::vector<std::uint64_t> queue{0};
  reaches_zero[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    predecessors(queue[head], [&](std::uint64_t x) {
      if (!reaches_zero[x]) {
        reaches_zero[x] = true;
        queue.push_back(x);
      }
    });
  }
  std::vector<bool> reaches_bad(total, false);
  queue.clear();
  for (std::uint64_t x = 0; x < total; ++x) {
    if (!reaches_zero[x]) {
      reaches_bad[x] = true;
      queue.push_back(x);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    predecessors(queue[head], [&](std::uint64_t x) {
      if (!reaches_bad[x]) {
        reaches_bad[x] = true;
        queue.push_back(x);
      }
    });
  }
  std::vector<bool> stabilizing(total);
  for (std::size_t x = 0; x < total; ++x) stabilizing[x] = !reaches_bad[x];
  return stabilizing;
}

void write_reachable_hex(std::ostream& out, const std::vector<std::uint64_t>& configs, std::size_t n) {
  for (const auto x : configs) out << BitVector::from_u64(n, x).to_hex() << '\n';
}

}  // namespace hyperdrift
