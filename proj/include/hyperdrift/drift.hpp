#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperdrift/bitvec.hpp"
#include "hyperdrift/hypergraph.hpp"
#include "hyperdrift/rational.hpp"

namespace hyperdrift {

struct CutReport {
  BitVector A;
  std::vector<EdgeIndex> odd_cut;
  /// Pairs (v, e) with e in the odd cut and v in e ∩ A.
  std::int64_t e_minus = 0;
  /// Pairs (w, e) with e in the odd cut and w in e \ A.
  std::int64_t e_plus = 0;
  /// (E⁻ − E⁺)/(E⁻ + E⁺); absent when the odd cut is empty.
  std::optional<Rational> d_odd;
};

CutReport cut_report(const Hypergraph& h, const BitVector& A);

/// (E⁻ − E⁺)/(E⁻ + E⁺) or nothing when both are zero.
std::optional<Rational> drift_value(std::int64_t e_minus, std::int64_t e_plus);

struct SizeStats {
  std::size_t size = 0;
  boost::multiprecision::cpp_int subsets = 0;
  boost::multiprecision::cpp_int undefined_count = 0;
  std::optional<Rational> min;
  std::optional<Rational> max;
  /// Mean over subsets with a defined drift; NaN when none.
  double mean = 0.0;
};

struct DriftProfile {
  std::size_t n = 0;
  /// Entries for |A| = 1..n.
  std::vector<SizeStats> by_size;

  const SizeStats& at_size(std::size_t size) const { return by_size.at(size - 1); }
  /// Min and max over every nonempty A with a defined drift.
  std::optional<Rational> min() const;
  std::optional<Rational> max() const;
};

/// Largest n for subset enumeration.
inline constexpr std::size_t kMaxEnumerationVertices = 24;

/// True when h lists every k-subset of its vertices exactly once.
bool is_complete_uniform(const Hypergraph& h);

/// Exact per-cardinality extrema: closed-form counting for complete uniform
/// hypergraphs, enumeration of all 2^n - 1 subsets otherwise (n <= 24).
DriftProfile drift_profile_exact(const Hypergraph& h);
/// Closed-form profile of K(n, k); E± depend on A only through |A|.
DriftProfile complete_uniform_profile(std::size_t n, std::size_t k);

struct SampledPoint {
  double delta = 0.0;
  std::size_t size = 0;
  std::size_t samples = 0;
  std::size_t undefined_count = 0;
  double mean = 0.0;
  /// Normal-approximation 95% half-width of the mean.
  double half_width = 0.0;
  /// Extremes among the sampled subsets.
  std::optional<Rational> min;
  std::optional<Rational> max;
};

/// For each δ, samples uniform A with |A| = floor(δ n). Deterministic given seed.
std::vector<SampledPoint> drift_profile_sampled(const Hypergraph& h, const std::vector<double>& deltas,
                                                std::size_t samples, std::uint64_t seed);

/// Limit drift of K(n, 5) at density δ.
double asymptotic_drift_k5(double delta);

enum class FullSet { Auto, Include };

struct TauResult {
  /// sup of nk / E⁻(A); absent when some admissible A has E⁻ = 0.
  std::optional<Rational> value;
  std::int64_t min_e_minus = 0;
  std::size_t k = 0;
  bool includes_full_set = true;
  /// False for sampled lower bounds.
  bool exact = true;
};

/// Odd Cheeger time over 0 < |A| <= n. Auto leaves out A = V when every edge
/// is even and h is odd-connected. Throws std::invalid_argument for
/// non-regular h (the message reports the degree range) and for n > 24 unless
/// h is complete uniform.
TauResult tau_odd(const Hypergraph& h, FullSet full = FullSet::Auto);
/// Lower bound from random subsets of every size.
TauResult tau_odd_sampled(const Hypergraph& h, std::size_t samples_per_size, std::uint64_t seed,
                          FullSet full = FullSet::Auto);

struct CaseI {
  Rational delta_min;
};
struct CaseII {
  std::optional<TauResult> tau;
};
struct NegativeWindow {
  double eta1 = 0.0;
  double eta2 = 0.0;
  Rational delta;
  /// Sizes lo..hi form the window: every A there has drift < -delta.
  std::size_t lo = 0;
  std::size_t hi = 0;
};
struct Unclassified {
  std::string reason;
};
using Classification = std::variant<CaseI, CaseII, NegativeWindow, Unclassified>;

/// Exact classification from drift_profile_exact. Subsets other than V (in
/// the all-even odd-connected case) with an empty odd cut give Unclassified.
/// NegativeWindow uses δ = half the most negative per-size maximum and the
/// widest run of sizes whose maximum lies below −δ.
Classification classify(const Hypergraph& h);
Classification classify(const Hypergraph& h, const DriftProfile& profile);
/// From sampled statistics: CaseI when every sampled value exceeds margin;
/// NegativeWindow over the widest run of grid points whose sampled maximum
/// and mean + half-width both lie below -margin; Unclassified otherwise.
Classification classify_sampled(const Hypergraph& h, const std::vector<SampledPoint>& points, double margin);

std::string describe(const Classification& c);

/// Rows "delta,size,min,mean,max,undefined_count".
void write_drift_csv(std::ostream& out, const DriftProfile& profile);
void write_sampled_csv(std::ostream& out, const std::vector<SampledPoint>& points);

}  // namespace hyperdrift
