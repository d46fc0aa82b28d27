#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hyperdrift {

__extension__ typedef __int128 Int128;

/// C(n, k) in 64 bits; throws std::overflow_error when it does not fit.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > static_cast<Int128>(INT64_MAX)) throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::int64_t>(acc);
}

/// Calls fn(const std::vector<std::uint32_t>&) for every k-subset of
/// {0..n-1} in lexicographic order.
template <class Fn>
void for_each_k_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::uint32_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<std::uint32_t>(i);
  while (true) {
    fn(static_cast<const std::vector<std::uint32_t>&>(c));
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

/// Next larger 64-bit mask with the same popcount (Gosper's hack). Returns 0
/// after the last mask of width n.
inline std::uint64_t next_same_popcount(std::uint64_t x, std::size_t n) {
  if (x == 0) return 0;
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  if (r == 0) return 0;
  const std::uint64_t next = (((r ^ x) >> 2) / c) | r;
  if (n < 64 && (next >> n) != 0) return 0;
  return next;
}

}  // namespace hyperdrift
