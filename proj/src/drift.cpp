#include "hyperdrift/drift.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "hyperdrift/combinatorics.hpp"
#include "hyperdrift/generators.hpp"
#include "hyperdrift/parallel.hpp"
#include "hyperdrift/rng.hpp"

namespace hyperdrift {

namespace {

/// Drift kept as an unreduced fraction (E⁻ − E⁺)/(E⁻ + E⁺) with a positive
/// denominator, for cheap comparisons inside enumeration loops.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool operator<(const Frac& o) const { return static_cast<Int128>(num) * o.den < static_cast<Int128>(o.num) * den; }
  Rational exact() const { return Rational(num, den); }
};

struct CompactEdges {
  std::vector<std::uint64_t> masks;
  std::vector<std::int64_t> sizes;
};

CompactEdges compact_edges(const Hypergraph& h) {
  CompactEdges c;
  for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
    c.masks.push_back(h.edge_mask(e).to_u64());
    c.sizes.push_back(static_cast<std::int64_t>(h.edge(e).size()));
  }
  return c;
}

void pair_counts(const CompactEdges& c, std::uint64_t a, std::int64_t& e_minus, std::int64_t& e_plus) {
  e_minus = 0;
  e_plus = 0;
  for (std::size_t e = 0; e < c.masks.size(); ++e) {
    const auto j = static_cast<std::int64_t>(std::popcount(a & c.masks[e]));
    if ((j & 1) != 0) {
      e_minus += j;
      e_plus += c.sizes[e] - j;
    }
  }
}

bool odd_connected_or_false(const Hypergraph& h) {
  if (h.num_vertices() == 0 || !is_connected(h)) return false;
  return is_odd_connected(h);
}

bool exempt_full_set(const Hypergraph& h) { return odd_case(h) == OddCase::AllEven && odd_connected_or_false(h); }

void require_enumerable(const Hypergraph& h) {
  if (h.num_vertices() == 0) throw std::invalid_argument("hypergraph has no vertices");
  if (h.num_vertices() > kMaxEnumerationVertices) {
    throw std::invalid_argument(
        fmt::format("subset enumeration limited to n <= {}, got {}", kMaxEnumerationVertices, h.num_vertices()));
  }
}

/// Σ over odd j of (#A-side incidences, #complement incidences, #edges) in K(n, k) at |A| = a.
struct UniformCounts {
  std::int64_t e_minus = 0;
  std::int64_t e_plus = 0;
  std::int64_t odd_edges = 0;
};

UniformCounts uniform_counts(std::int64_t n, std::int64_t k, std::int64_t a) {
  UniformCounts c;
  for (std::int64_t j = 1; j <= k; j += 2) {
    const std::int64_t edges = binomial(a, j) * binomial(n - a, k - j);
    c.odd_edges += edges;
    c.e_minus += j * edges;
    c.e_plus += (k - j) * edges;
  }
  return c;
}

boost::multiprecision::cpp_int big_binomial(std::size_t n, std::size_t k) {
  boost::multiprecision::cpp_int acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

}  // namespace

std::optional<Rational> drift_value(std::int64_t e_minus, std::int64_t e_plus) {
  if (e_minus + e_plus == 0) return std::nullopt;
  return Rational(e_minus - e_plus, e_minus + e_plus);
}

CutReport cut_report(const Hypergraph& h, const BitVector& A) {
  if (A.size() != h.num_vertices()) {
    throw std::invalid_argument(fmt::format("A has {} bits for {} vertices", A.size(), h.num_vertices()));
  }
  CutReport r;
  r.A = A;
  for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
    const auto j = static_cast<std::int64_t>(A.intersection_count(h.edge_mask(e)));
    if (j % 2 == 1) {
      r.odd_cut.push_back(e);
      r.e_minus += j;
      r.e_plus += static_cast<std::int64_t>(h.edge(e).size()) - j;
    }
  }
  r.d_odd = drift_value(r.e_minus, r.e_plus);
  return r;
}

std::optional<Rational> DriftProfile::min() const {
  std::optional<Rational> out;
  for (const auto& s : by_size) {
    if (s.min && (!out || *s.min < *out)) out = s.min;
  }
  return out;
}

std::optional<Rational> DriftProfile::max() const {
  std::optional<Rational> out;
  for (const auto& s : by_size) {
    if (s.max && (!out || *s.max > *out)) out = s.max;
  }
  return out;
}

bool is_complete_uniform(const Hypergraph& h) {
  if (h.num_edges() == 0) return false;
  const std::size_t k = h.edge(0).size();
  for (const auto& e : h.edges()) {
    if (e.size() != k) return false;
  }
  try {
    if (static_cast<std::int64_t>(h.num_edges()) !=
        binomial(static_cast<std::int64_t>(h.num_vertices()), static_cast<std::int64_t>(k))) {
      return false;
    }
  } catch (const std::overflow_error&) {
    return false;
  }
  auto edges = h.edges();
  std::sort(edges.begin(), edges.end());
  return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

DriftProfile complete_uniform_profile(std::size_t n, std::size_t k) {
  if (k == 0 || k > n) throw std::invalid_argument(fmt::format("K(n, k) needs 1 <= k <= n, got n = {}, k = {}", n, k));
  DriftProfile p;
  p.n = n;
  for (std::size_t a = 1; a <= n; ++a) {
    const auto c = uniform_counts(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k), static_cast<std::int64_t>(a));
    SizeStats s;
    s.size = a;
    s.subsets = big_binomial(n, a);
    const auto d = drift_value(c.e_minus, c.e_plus);
    if (d) {
      s.min = d;
      s.max = d;
      s.mean = to_double(*d);
    } else {
      s.undefined_count = s.subsets;
      s.mean = std::numeric_limits<double>::quiet_NaN();
    }
    p.by_size.push_back(std::move(s));
  }
  return p;
}

DriftProfile drift_profile_exact(const Hypergraph& h) {
  if (is_complete_uniform(h)) return complete_uniform_profile(h.num_vertices(), h.edge(0).size());
  require_enumerable(h);
  const std::size_t n = h.num_vertices();
  const CompactEdges edges = compact_edges(h);
  DriftProfile p;
  p.n = n;
  p.by_size.resize(n);
  parallel_for(n, [&](std::size_t idx) {
    const std::size_t a = idx + 1;
    SizeStats s;
    s.size = a;
    std::optional<Frac> lo;
    std::optional<Frac> hi;
    std::int64_t count = 0;
    std::int64_t undefined = 0;
    double sum = 0.0;
    const std::uint64_t first = a == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << a) - 1;
    for (std::uint64_t mask = first; mask != 0; mask = next_same_popcount(mask, n)) {
      ++count;
      std::int64_t em = 0;
      std::int64_t ep = 0;
      pair_counts(edges, mask, em, ep);
      if (em + ep == 0) {
        ++undefined;
        continue;
      }
      const Frac f{em - ep, em + ep};
      if (!lo || f < *lo) lo = f;
      if (!hi || *hi < f) hi = f;
      sum += static_cast<double>(f.num) / static_cast<double>(f.den);
    }
    s.subsets = count;
    s.undefined_count = undefined;
    if (lo) s.min = lo->exact();
    if (hi) s.max = hi->exact();
    s.mean = count > undefined ? sum / static_cast<double>(count - undefined) : std::numeric_limits<double>::quiet_NaN();
    p.by_size[idx] = std::move(s);
  });
  return p;
}

std::vector<SampledPoint> drift_profile_sampled(const Hypergraph& h, const std::vector<double>& deltas,
                                                std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("drift_profile_sampled needs at least one sample");
  const std::size_t n = h.num_vertices();
  std::vector<SampledPoint> out;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const double delta = deltas[i];
    if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument(fmt::format("density {} outside [0, 1]", delta));
    SampledPoint pt;
    pt.delta = delta;
    pt.size = static_cast<std::size_t>(std::floor(delta * static_cast<double>(n) + 1e-9));
    pt.samples = samples;
    Rng rng(derive_seed(seed, i));
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t defined = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      const auto r = cut_report(h, random_bits_of_weight(n, pt.size, rng));
      if (!r.d_odd) {
        ++pt.undefined_count;
        continue;
      }
      const double d = to_double(*r.d_odd);
      sum += d;
      sum_sq += d * d;
      ++defined;
      if (!pt.min || *r.d_odd < *pt.min) pt.min = r.d_odd;
      if (!pt.max || *r.d_odd > *pt.max) pt.max = r.d_odd;
    }
    if (defined == 0) {
      pt.mean = std::numeric_limits<double>::quiet_NaN();
      pt.half_width = std::numeric_limits<double>::quiet_NaN();
    } else {
      pt.mean = sum / static_cast<double>(defined);
      const double var = defined > 1 ? std::max(0.0, (sum_sq - sum * pt.mean) / static_cast<double>(defined - 1)) : 0.0;
      pt.half_width = 1.96 * std::sqrt(var / static_cast<double>(defined));
    }
    out.push_back(pt);
  }
  return out;
}

double asymptotic_drift_k5(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument(fmt::format("density {} outside [0, 1]", delta));
  const double d = delta;
  const double c = 1.0 - delta;
  const double num = std::pow(d, 4) + 2.0 * d * d * c * c - 3.0 * std::pow(c, 4);
  const double den = std::pow(d, 4) + 10.0 * d * d * c * c + 5.0 * std::pow(c, 4);
  return num / den;
}

namespace {

std::size_t require_regular(const Hypergraph& h) {
  const auto k = h.regular_degree();
  if (!k) {
    const auto [lo, hi] = h.degree_range();
    throw std::invalid_argument(fmt::format("odd Cheeger time needs a regular hypergraph, degrees range over [{}, {}]", lo, hi));
  }
  return *k;
}

TauResult make_tau(std::size_t n, std::size_t k, std::int64_t min_em, bool include_full, bool exact) {
  TauResult t;
  t.k = k;
  t.min_e_minus = min_em;
  t.includes_full_set = include_full;
  t.exact = exact;
  if (min_em > 0) t.value = Rational(static_cast<std::int64_t>(n * k), min_em);
  return t;
}

}  // namespace

TauResult tau_odd(const Hypergraph& h, FullSet full) {
  const std::size_t k = require_regular(h);
  const std::size_t n = h.num_vertices();
  const bool include_full = full == FullSet::Include || !exempt_full_set(h);
  const std::size_t top = include_full ? n : n - 1;
  std::int64_t min_em = std::numeric_limits<std::int64_t>::max();
  if (is_complete_uniform(h)) {
    const auto w = static_cast<std::int64_t>(h.edge(0).size());
    for (std::size_t a = 1; a <= top; ++a) {
      min_em = std::min(min_em, uniform_counts(static_cast<std::int64_t>(n), w, static_cast<std::int64_t>(a)).e_minus);
    }
    return make_tau(n, k, min_em, include_full, true);
  }
  require_enumerable(h);
  const CompactEdges edges = compact_edges(h);
  std::vector<std::int64_t> per_size(top, std::numeric_limits<std::int64_t>::max());
  parallel_for(top, [&](std::size_t idx) {
    const std::size_t a = idx + 1;
    const std::uint64_t first = (std::uint64_t{1} << a) - 1;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::uint64_t mask = first; mask != 0; mask = next_same_popcount(mask, n)) {
      std::int64_t em = 0;
      std::int64_t ep = 0;
      pair_counts(edges, mask, em, ep);
      best = std::min(best, em);
      if (best == 0) break;
    }
    per_size[idx] = best;
  });
  for (const auto v : per_size) min_em = std::min(min_em, v);
  return make_tau(n, k, min_em, include_full, true);
}

TauResult tau_odd_sampled(const Hypergraph& h, std::size_t samples_per_size, std::uint64_t seed, FullSet full) {
  const std::size_t k = require_regular(h);
  const std::size_t n = h.num_vertices();
  const bool include_full = full == FullSet::Include || !exempt_full_set(h);
  const std::size_t top = include_full ? n : n - 1;
  std::int64_t min_em = std::numeric_limits<std::int64_t>::max();
  for (std::size_t a = 1; a <= top; ++a) {
    Rng rng(derive_seed(seed, a));
    for (std::size_t s = 0; s < samples_per_size; ++s) {
      min_em = std::min(min_em, cut_report(h, random_bits_of_weight(n, a, rng)).e_minus);
    }
  }
  return make_tau(n, k, min_em, include_full, false);
}

Classification classify(const Hypergraph& h) { return classify(h, drift_profile_exact(h)); }

Classification classify(const Hypergraph& h, const DriftProfile& profile) {
  const std::size_t n = profile.n;
  const bool exempt = exempt_full_set(h);
  for (const auto& s : profile.by_size) {
    if (s.undefined_count == 0) continue;
    if (s.size == n && exempt) continue;
    return Unclassified{fmt::format("{} subsets of size {} have an empty odd cut", s.undefined_count.str(), s.size)};
  }
  const auto lo = profile.min();
  if (!lo) return Unclassified{"no subset has a defined drift"};
  if (*lo > Rational(0)) return CaseI{*lo};
  if (*lo == Rational(0)) {
    CaseII c;
    try {
      c.tau = tau_odd(h);
    } catch (const std::invalid_argument&) {
    }
    return c;
  }
  std::optional<Rational> most_negative;
  for (const auto& s : profile.by_size) {
    if (s.max && (!most_negative || *s.max < *most_negative)) most_negative = s.max;
  }
  if (!most_negative || *most_negative >= Rational(0)) return Unclassified{"negative drift values but no uniformly negative size"};
  const Rational delta = -*most_negative / 2;
  std::size_t best_lo = 0;
  std::size_t best_hi = 0;
  std::size_t run_lo = 0;
  for (const auto& s : profile.by_size) {
    const bool neg = s.max && *s.max < -delta;
    if (neg) {
      if (run_lo == 0) run_lo = s.size;
      if (s.size - run_lo > best_hi - best_lo || best_lo == 0) {
        best_lo = run_lo;
        best_hi = s.size;
      }
    } else {
      run_lo = 0;
    }
  }
  NegativeWindow w;
  w.delta = delta;
  w.lo = best_lo;
  w.hi = best_hi;
  w.eta1 = static_cast<double>(best_lo - 1) / static_cast<double>(n);
  w.eta2 = static_cast<double>(best_hi + 1) / static_cast<double>(n);
  return w;
}

Classification classify_sampled(const Hypergraph& h, const std::vector<SampledPoint>& points, double margin) {
  (void)h;
  if (points.empty()) return Unclassified{"no sampled points"};
  bool all_positive = true;
  std::optional<Rational> lo;
  for (const auto& p : points) {
    if (p.undefined_count > 0 || !p.min || to_double(*p.min) <= margin) all_positive = false;
    if (p.min && (!lo || *p.min < *lo)) lo = p.min;
  }
  if (all_positive && lo) return CaseI{*lo};
  std::size_t best_first = 0;
  std::size_t best_len = 0;
  std::size_t run_first = 0;
  std::size_t run_len = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const bool neg = p.max && to_double(*p.max) < -margin && p.mean + p.half_width < -margin;
    if (neg) {
      if (run_len == 0) run_first = i;
      ++run_len;
      if (run_len > best_len) {
        best_len = run_len;
        best_first = run_first;
      }
    } else {
      run_len = 0;
    }
  }
  if (best_len == 0) return Unclassified{"sampled evidence is not one-sided with the requested margin"};
  NegativeWindow w;
  std::optional<Rational> top;
  for (std::size_t i = best_first; i < best_first + best_len; ++i) {
    if (!top || *points[i].max > *top) top = points[i].max;
  }
  w.delta = -*top;
  w.lo = points[best_first].size;
  w.hi = points[best_first + best_len - 1].size;
  w.eta1 = points[best_first].delta;
  w.eta2 = points[best_first + best_len - 1].delta;
  return w;
}

std::string describe(const Classification& c) {
  struct Visitor {
    std::string operator()(const CaseI& x) const {
      return fmt::format("CaseI delta_min={} ({:.6f})", to_string(x.delta_min), to_double(x.delta_min));
    }
    std::string operator()(const CaseII& x) const {
      if (!x.tau) return "CaseII tau=unavailable (not regular)";
      if (!x.tau->value) return "CaseII tau=unbounded";
      return fmt::format("CaseII tau={} ({:.6f})", to_string(*x.tau->value), to_double(*x.tau->value));
    }
    std::string operator()(const NegativeWindow& x) const {
      return fmt::format("NegativeWindow eta1={:.6f} eta2={:.6f} delta={} ({:.6f}) sizes={}..{}", x.eta1, x.eta2,
                         to_string(x.delta), to_double(x.delta), x.lo, x.hi);
    }
    std::string operator()(const Unclassified& x) const { return "Unclassified " + x.reason; }
  };
  return std::visit(Visitor{}, c);
}

namespace {

std::string decimal(const std::optional<Rational>& r) { return r ? fmt::format("{:.10g}", to_double(*r)) : ""; }
std::string decimal(double d) { return std::isnan(d) ? "" : fmt::format("{:.10g}", d); }

}  // namespace

void write_drift_csv(std::ostream& out, const DriftProfile& profile) {
  out << "delta,size,min,mean,max,undefined_count\n";
  for (const auto& s : profile.by_size) {
    const double delta = static_cast<double>(s.size) / static_cast<double>(profile.n);
    out << fmt::format("{:.6f},{},{},{},{},{}\n", delta, s.size, decimal(s.min), decimal(s.mean), decimal(s.max),
                       s.undefined_count.str());
  }
}

void write_sampled_csv(std::ostream& out, const std::vector<SampledPoint>& points) {
  out << "delta,size,min,mean,max,undefined_count,half_width,samples\n";
  for (const auto& p : points) {
    out << fmt::format("{:.6f},{},{},{},{},{},{},{}\n", p.delta, p.size, decimal(p.min), decimal(p.mean),
                       decimal(p.max), p.undefined_count, decimal(p.half_width), p.samples);
  }
}

}  // namespace hyperdrift
