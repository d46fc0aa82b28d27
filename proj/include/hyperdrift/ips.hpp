#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperdrift/bitvec.hpp"
#include "hyperdrift/hypergraph.hpp"
#include "hyperdrift/rng.hpp"

namespace hyperdrift {

using BitConfig = BitVector;

enum class ArwMode { Eager, Lazy };

/// Eager move: requires state[p.v] = 1 (throws std::invalid_argument
/// otherwise); every vertex of p.e flips.
BitConfig arw_step(const Hypergraph& h, BitConfig state, VertexEdgePair p);
/// Lazy move: identity when state[p.v] = 0, otherwise the eager move.
BitConfig arw_step_lazy(const Hypergraph& h, BitConfig state, VertexEdgePair p);
void arw_apply(const Hypergraph& h, BitConfig& state, VertexEdgePair p, ArwMode mode);

/// Uniform vertex, then uniform edge containing it. Throws when the chosen
/// vertex has degree 0.
VertexEdgePair sample_pair(const Hypergraph& h, Rng& rng);
/// Uniform live vertex (r-th set bit), then uniform edge containing it.
VertexEdgePair sample_live_pair(const Hypergraph& h, const BitConfig& state, Rng& rng);
VertexEdgePair sample_pair(const Hypergraph& h, const BitConfig& state, ArwMode mode, Rng& rng);

struct StopTime {
  std::uint64_t steps = 0;
  bool censored = false;
  friend bool operator==(const StopTime&, const StopTime&) = default;
};

/// Annihilation time of the walk from init; eager runs stop at 0 since no
/// move is possible there.
StopTime run_arw(const Hypergraph& h, const BitConfig& init, ArwMode mode, std::uint64_t seed, std::uint64_t max_steps);

/// Per-vertex multisets of labels 0..L-1. Exact mode stores unbounded
/// multiplicities; mod-2 mode keeps only their parities.
class MultisetState {
 public:
  using Count = boost::multiprecision::cpp_int;

  MultisetState() = default;
  MultisetState(std::size_t num_vertices, std::size_t num_labels, bool mod2 = false);
  /// A_v = {v} for v in `holders`, empty elsewhere; labels are vertex ids.
  static MultisetState singletons(const BitVector& holders, bool mod2 = false);
  /// A_v = {v} for every vertex.
  static MultisetState distinct(std::size_t n, bool mod2 = false);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_labels() const noexcept { return labels_; }
  bool mod2() const noexcept { return mod2_; }

  Count count(std::size_t v, std::size_t label) const;
  void set_count(std::size_t v, std::size_t label, const Count& c);
  /// |A_v|, reduced mod 2 in mod-2 mode.
  Count size(std::size_t v) const;
  bool size_odd(std::size_t v) const;
  bool empty(std::size_t v) const;
  /// Σ_v multiplicity of label.
  Count total(std::size_t label) const;

  /// A_to ⊎= A_from.
  void add_into(std::size_t to, std::size_t from);
  void clear(std::size_t v);
  /// A_to = ⊎ of A_v over v in `sources` other than `skip`.
  void assign_sum(std::size_t to, std::span<const Vertex> sources, Vertex skip);

  /// Vertices with |A_v| odd.
  BitVector odd_sizes() const;

  friend bool operator==(const MultisetState&, const MultisetState&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t labels_ = 0;
  bool mod2_ = false;
  std::vector<Count> counts_;
  std::vector<BitVector> parity_;
};

/// A_w ⊎= A_i for every other w in e, then A_i = ∅.
MultisetState crw_step(const Hypergraph& h, MultisetState state, VertexEdgePair p);
void crw_apply(const Hypergraph& h, MultisetState& state, VertexEdgePair p);
/// A_i = ⊎ of A_w over the other vertices w of e, others unchanged.
MultisetState voter_step(const Hypergraph& h, MultisetState state, VertexEdgePair p);
void voter_apply(const Hypergraph& h, MultisetState& state, VertexEdgePair p);
/// A_i = ⊕ of A_w over the other vertices w of e.
BitConfig two_party_step(const Hypergraph& h, BitConfig state, VertexEdgePair p);
void two_party_apply(const Hypergraph& h, BitConfig& state, VertexEdgePair p);

/// |A_j| even for every j in B.
bool crw_parity_on(const MultisetState& state, const BitVector& B);
/// Every label has even total multiplicity over the vertices of B.
bool voter_parity_on(const MultisetState& state, const BitVector& B);
/// ⊕_{i ∈ B} state_i = 0.
bool parity_on(const BitConfig& state, const BitVector& B);

struct CoupledOutcome {
  StopTime c_ann;
  StopTime c_coal;
  /// First time no tagged multiset carries a live witness.
  StopTime c_p;
  /// Live witnesses matched the walk and forgetting times matched the
  /// coalescing walk after every step.
  bool projections_agree = true;
};

/// Runs the tagged process P from B together with an annihilating walk and
/// a coalescing walk driven by the same pairs. Eager mode draws the vertex
/// among those holding a live witness.
CoupledOutcome coupled_process_P(const Hypergraph& h, const BitVector& B, ArwMode mode, std::uint64_t seed,
                                 std::uint64_t max_steps);

/// Events at times 1..size(); each pair's vertex lies in its edge.
struct Schedule {
  std::vector<VertexEdgePair> events;

  std::size_t size() const noexcept { return events.size(); }
  /// Throws std::invalid_argument when an event does not fit h.
  void validate(const Hypergraph& h) const;
};

Schedule random_schedule(const Hypergraph& h, std::size_t length, Rng& rng);
/// CSV "t,v,e".
void write_schedule_csv(std::ostream& out, const Schedule& s);
Schedule read_schedule_csv(std::istream& in);

struct DualityReport {
  /// Per prefix length t = 0..|schedule|.
  std::vector<bool> crw_parity;
  std::vector<bool> voter_parity;
  /// First prefix length with the predicate, absent when never reached.
  std::optional<std::size_t> crw_time;
  std::optional<std::size_t> voter_time;
  bool iff_holds = true;
  /// Per prefix: odd-size CRW vertices equal odd-count voter opinions on B.
  bool odd_sets_agree = true;
};

/// Lazy coalescing walk from B along the schedule versus, for every prefix,
/// the multiset voter model from distinct opinions along the reversed prefix.
DualityReport duality_harness(const Hypergraph& h, const BitVector& B, const Schedule& schedule, bool mod2 = true);

struct DEpsilonOutcome {
  BitVector D;
  StopTime t_parity;
  StopTime c_2vm;
};

/// D has each vertex independently with probability 1/2 - eps; the two-party
/// model runs from D under uniform lazy pairs. t_parity is the first t >= 0
/// with D_t = 0 (some odd edge) or D_t ∈ {0, 1} (all edges even); c_2vm is the
/// first t with ⊕_{i ∈ B} D_t(i) = 0.
DEpsilonOutcome d_epsilon_experiment(const Hypergraph& h, double eps, const BitVector& B, std::uint64_t seed,
                                     std::uint64_t max_steps);

struct VoterCoupling {
  StopTime c_vm;
  StopTime c_2vm;
  /// The two-party state equaled the parity of A-opinions after every step.
  bool coupled = true;
};

/// Multiset voter model (mod 2) from distinct opinions and the two-party
/// model from A on one shared lazy schedule; both first parity times on B.
VoterCoupling coupled_voter_run(const Hypergraph& h, const BitVector& A, const BitVector& B, std::uint64_t seed,
                                std::uint64_t max_steps);

enum class Dynamics { ArwEager, ArwLazy, TwoParty };

/// Largest n accepted by the configuration-space searches.
inline constexpr std::size_t kMaxBfsVertices = 22;

/// Configurations reachable from w1 (w1 included), as sorted integers with
/// bit i for vertex i.
std::vector<std::uint64_t> config_bfs(const Hypergraph& h, Dynamics dynamics, const BitConfig& w1);
bool config_reachable(const Hypergraph& h, Dynamics dynamics, const BitConfig& w1, const BitConfig& w2);
/// A shortest move sequence from w1 to w2, absent when unreachable.
std::optional<std::vector<VertexEdgePair>> config_path(const Hypergraph& h, Dynamics dynamics, const BitConfig& w1,
                                                       const BitConfig& w2);
/// Indicator over all 2^n configurations: 0 reachable for the eager walk from
/// the configuration and from each of its descendants.
std::vector<bool> bfs_stabilizing_set(const Hypergraph& h);
/// Hex strings of sorted configurations, one per line.
void write_reachable_hex(std::ostream& out, const std::vector<std::uint64_t>& configs, std::size_t n);

}  // namespace hyperdrift
