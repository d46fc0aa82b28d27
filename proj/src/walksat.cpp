#include "hyperdrift/walksat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "hyperdrift/generators.hpp"
#include "hyperdrift/gf2.hpp"
#include "hyperdrift/parallel.hpp"

namespace hyperdrift {

namespace {

class UnsatTracker {
 public:
  UnsatTracker(const XorSatInstance& inst, const Assignment& x)
      : occ_(inst.occurrences()), unsat_(inst.num_equations()) {
    for (std::size_t i = 0; i < inst.num_equations(); ++i) {
      if (!inst.equation_satisfied(i, x)) {
        unsat_.set(i);
        ++count_;
      }
    }
  }

  std::size_t count() const noexcept { return count_; }
  std::size_t select(std::size_t r) const { return unsat_.select(r); }

  void flip(Variable v) {
    for (const auto i : occ_[v]) {
      if (unsat_.test(i)) {
        --count_;
      } else {
        ++count_;
      }
      unsat_.flip(i);
    }
  }

 private:
  std::vector<std::vector<std::uint32_t>> occ_;
  BitVector unsat_;
  std::size_t count_ = 0;
};

}  // namespace

WalkSatRun walksat(const XorSatInstance& inst, const Assignment& x0, std::uint64_t seed, std::uint64_t max_steps,
                   bool record) {
  if (x0.size() != inst.num_variables()) {
    throw std::invalid_argument(fmt::format("start has {} bits for {} variables", x0.size(), inst.num_variables()));
  }
  WalkSatRun run;
  run.seed = seed;
  run.initial = x0;
  Assignment x = x0;
  UnsatTracker tracker(inst, x);
  Rng rng(seed);
  if (record) run.unsat.push_back(tracker.count());
  while (tracker.count() > 0) {
    if (run.steps == max_steps) {
      run.censored = true;
      break;
    }
    const auto eq = static_cast<std::uint32_t>(tracker.select(rng.uniform(tracker.count())));
    const auto& vars = inst.equation(eq).vars;
    const Variable v = vars[rng.uniform(vars.size())];
    x.flip(v);
    tracker.flip(v);
    ++run.steps;
    if (record) {
      run.moves.push_back({eq, v});
      run.unsat.push_back(tracker.count());
    }
  }
  run.final = std::move(x);
  return run;
}

std::vector<std::size_t> u_trajectory(const XorSatInstance& inst, const WalkSatRun& run) {
  const auto solved = gf2::solve(inst.system());
  if (solved.status != gf2::SolveStatus::Unique) {
    throw std::invalid_argument("u trajectory requires a uniquely satisfiable instance");
  }
  if (run.moves.size() != run.steps) throw std::invalid_argument("u trajectory requires a recorded run");
  const Assignment& z = *solved.witness;
  std::vector<std::size_t> u;
  u.reserve(run.steps + 1);
  std::size_t d = hamming_distance(run.initial, z);
  u.push_back(d);
  Assignment x = run.initial;
  for (const auto& mv : run.moves) {
    x.flip(mv.variable);
    d = x.test(mv.variable) == z.test(mv.variable) ? d - 1 : d + 1;
    u.push_back(d);
  }
  return u;
}

void write_trajectory_csv(std::ostream& out, const WalkSatRun& run, const std::optional<Assignment>& solution) {
  if (run.unsat.size() != run.steps + 1) throw std::invalid_argument("trajectory export requires a recorded run");
  out << "t,unsat,u\n";
  Assignment x = run.initial;
  std::size_t d = solution ? hamming_distance(x, *solution) : 0;
  for (std::size_t t = 0; t <= run.steps; ++t) {
    if (t > 0) {
      const Variable v = run.moves[t - 1].variable;
      x.flip(v);
      if (solution) d = x.test(v) == solution->test(v) ? d - 1 : d + 1;
    }
    out << t << ',' << run.unsat[t] << ',';
    if (solution) out << d;
    out << '\n';
  }
}

StartPolicy StartPolicy::fixed(Assignment x) {
  StartPolicy p;
  p.kind_ = Kind::Fixed;
  p.point_ = std::move(x);
  return p;
}

StartPolicy StartPolicy::uniform() { return StartPolicy{}; }

StartPolicy StartPolicy::hamming(Assignment witness, std::size_t distance) {
  if (distance > witness.size()) {
    throw std::invalid_argument(fmt::format("distance {} exceeds {} variables", distance, witness.size()));
  }
  StartPolicy p;
  p.kind_ = Kind::Hamming;
  p.point_ = std::move(witness);
  p.distance_ = distance;
  return p;
}

Assignment StartPolicy::draw(std::size_t n, Rng& rng) const {
  switch (kind_) {
    case Kind::Fixed:
      if (point_.size() != n) throw std::invalid_argument("fixed start has the wrong length");
      return point_;
    case Kind::Uniform:
      return random_bits(n, rng);
    case Kind::Hamming:
      if (point_.size() != n) throw std::invalid_argument("witness has the wrong length");
      return point_ ^ random_bits_of_weight(n, distance_, rng);
  }
  return {};
}

HittingStats mean_hitting_time(const XorSatInstance& inst, const StartPolicy& policy, std::size_t trials,
                               std::uint64_t seed, std::uint64_t max_steps) {
  if (trials == 0) throw std::invalid_argument("mean_hitting_time needs at least one trial");
  HittingStats stats;
  stats.trials = trials;
  stats.steps.assign(trials, 0);
  std::vector<char> censored(trials, 0);
  parallel_for(trials, [&](std::size_t i) {
    const std::uint64_t trial_seed = derive_seed(seed, i);
    Rng start_rng(derive_seed(trial_seed, 0));
    const Assignment x0 = policy.draw(inst.num_variables(), start_rng);
    const auto run = walksat(inst, x0, derive_seed(trial_seed, 1), max_steps);
    stats.steps[i] = run.steps;
    censored[i] = run.censored ? 1 : 0;
  });
  std::vector<std::uint64_t> finished;
  double capped = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    stats.censored_flags.push_back(censored[i] != 0);
    if (censored[i] != 0) {
      ++stats.censored;
      capped += static_cast<double>(max_steps);
    } else {
      finished.push_back(stats.steps[i]);
      capped += static_cast<double>(stats.steps[i]);
    }
  }
  stats.mean_capped = capped / static_cast<double>(trials);
  stats.all_censored = finished.empty();
  if (stats.all_censored) {
    stats.mean = std::numeric_limits<double>::quiet_NaN();
    stats.median = std::numeric_limits<double>::quiet_NaN();
    return stats;
  }
  double sum = 0.0;
  for (const auto s : finished) sum += static_cast<double>(s);
  stats.mean = sum / static_cast<double>(finished.size());
  std::sort(finished.begin(), finished.end());
  const std::size_t mid = finished.size() / 2;
  stats.median = finished.size() % 2 == 1 ? static_cast<double>(finished[mid])
                                          : 0.5 * static_cast<double>(finished[mid - 1] + finished[mid]);
  return stats;
}

StepDrift one_step_u_drift(const XorSatInstance& inst, const Assignment& x, const Assignment& solution) {
  std::vector<std::size_t> unsat;
  for (std::size_t i = 0; i < inst.num_equations(); ++i) {
    if (!inst.equation_satisfied(i, x)) unsat.push_back(i);
  }
  if (unsat.empty()) throw std::invalid_argument("one_step_u_drift needs an unsatisfied equation");
  StepDrift out{Rational(0), Rational(0)};
  const auto u = static_cast<std::int64_t>(unsat.size());
  for (const auto i : unsat) {
    const auto& vars = inst.equation(i).vars;
    const Rational weight(1, u * static_cast<std::int64_t>(vars.size()));
    for (const Variable v : vars) {
      if (x.test(v) != solution.test(v)) {
        out.p_down += weight;
      } else {
        out.p_up += weight;
      }
    }
  }
  return out;
}

}  // namespace hyperdrift
