#pragma once

#include <cstdint>

namespace hyperdrift {

/// Counter-based SplitMix64 stream.
///
/// The i-th output (i = 1, 2, ...) is mix(seed + i * 0x9e3779b97f4a7c15) with
/// the standard SplitMix64 finalizer, so any implementation of the same
/// recurrence replays identical runs from the same 64-bit seed. Bounded draws
/// use Lemire's multiply-shift method with rejection, one 64-bit output per
/// attempt.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept : counter_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept { return next(); }
  std::uint64_t next() noexcept;

  /// Uniform integer in [0, bound). Requires bound > 0.
  std::uint64_t uniform(std::uint64_t bound);
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform_real() noexcept;
  bool bernoulli(double p) noexcept { return uniform_real() < p; }

  std::uint64_t state() const noexcept { return counter_; }

 private:
  std::uint64_t counter_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for the stream with the given index under a parent seed; used to give
/// every trial its own independent stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace hyperdrift
