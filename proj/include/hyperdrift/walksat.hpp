#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hyperdrift/rational.hpp"
#include "hyperdrift/rng.hpp"
#include "hyperdrift/xorsat.hpp"

namespace hyperdrift {

/// One WalkSAT move: the unsatisfied equation picked and the variable flipped.
struct WalkSatMove {
  std::uint32_t equation = 0;
  Variable variable = 0;
  friend bool operator==(const WalkSatMove&, const WalkSatMove&) = default;
};

struct WalkSatRun {
  std::uint64_t steps = 0;
  bool censored = false;
  std::uint64_t seed = 0;
  Assignment initial;
  Assignment final;
  /// Filled when recording was requested: moves[t] leads from step t to t+1,
  /// unsat[t] is the unsatisfied count after t moves (steps + 1 entries).
  std::vector<WalkSatMove> moves;
  std::vector<std::size_t> unsat;

  friend bool operator==(const WalkSatRun&, const WalkSatRun&) = default;
};

/// Repeatedly picks the r-th unsatisfied equation in index order with
/// r = rng.uniform(#unsat), then its variable at position rng.uniform(width),
/// and flips it. Stops when satisfied (steps = moves made) or after max_steps
/// moves (censored).
WalkSatRun walksat(const XorSatInstance& inst, const Assignment& x0, std::uint64_t seed, std::uint64_t max_steps,
                   bool record = false);

/// Hamming distance to the unique solution after every move of a recorded
/// run. Throws std::invalid_argument unless the instance is uniquely
/// satisfiable and the run carries moves.
std::vector<std::size_t> u_trajectory(const XorSatInstance& inst, const WalkSatRun& run);

/// Rows "t,unsat,u"; the u column is empty when no unique solution is given.
void write_trajectory_csv(std::ostream& out, const WalkSatRun& run, const std::optional<Assignment>& solution);

class StartPolicy {
 public:
  enum class Kind { Fixed, Uniform, Hamming };

  static StartPolicy fixed(Assignment x);
  static StartPolicy uniform();
  /// Witness with exactly `distance` uniformly chosen bits flipped.
  static StartPolicy hamming(Assignment witness, std::size_t distance);

  Kind kind() const noexcept { return kind_; }
  Assignment draw(std::size_t n, Rng& rng) const;

 private:
  Kind kind_ = Kind::Uniform;
  Assignment point_;
  std::size_t distance_ = 0;
};

struct HittingStats {
  std::size_t trials = 0;
  std::size_t censored = 0;
  bool all_censored = false;
  /// Mean and median over uncensored trials; NaN when all are censored.
  double mean = 0.0;
  double median = 0.0;
  /// Mean with censored trials counted as max_steps.
  double mean_capped = 0.0;
  std::vector<std::uint64_t> steps;
  std::vector<bool> censored_flags;
};

/// Trial i draws its start from stream derive_seed(derive_seed(seed, i), 0)
/// and walks with seed derive_seed(derive_seed(seed, i), 1). Trials run in
/// parallel; results are ordered by trial index.
HittingStats mean_hitting_time(const XorSatInstance& inst, const StartPolicy& policy, std::size_t trials,
                               std::uint64_t seed, std::uint64_t max_steps);

struct StepDrift {
  Rational p_down;
  Rational p_up;
  Rational drift() const { return p_down - p_up; }
};

/// Exact probabilities that one WalkSAT move from x decreases or increases
/// the distance to `solution`. Requires x to leave some equation unsatisfied.
StepDrift one_step_u_drift(const XorSatInstance& inst, const Assignment& x, const Assignment& solution);

}  // namespace hyperdrift
