#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperdrift {

/// Fixed-length packed bit vector.
///
/// Used for assignments, particle configurations, vertex subsets and rows of
/// GF(2) matrices. Bit i lives in word i / 64 at position i % 64; bits beyond
/// size() in the last word are always zero, so word-level equality and
/// popcounts are exact.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false);

  /// Parses a string of '0'/'1' characters; character i is bit i.
  static BitVector from_string(std::string_view bits);
  /// Low `size` bits of `value` (size <= 64).
  static BitVector from_u64(std::size_t size, std::uint64_t value);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  bool operator[](std::size_t i) const { return test(i); }
  void set(std::size_t i, bool value = true);
  void reset(std::size_t i) { set(i, false); }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void flip_all();
  void clear();

  std::size_t count() const noexcept;
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  bool all() const noexcept { return count() == size_; }
  /// Parity of the number of set bits.
  bool parity() const noexcept;

  /// Index of the lowest set bit, or size() if none.
  std::size_t find_first() const noexcept;
  /// Index of the r-th set bit (0-based) in increasing order. Requires r < count().
  std::size_t select(std::size_t r) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  /// Parity of |this ∩ other|.
  bool dot(const BitVector& other) const;
  std::size_t intersection_count(const BitVector& other) const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  /// Orders by size, then by the integer value of the bits (bit 0 least significant).
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  /// Integer value with bit i as 2^i. Requires size() <= 64.
  std::uint64_t to_u64() const;
  /// '0'/'1' characters, bit 0 first.
  std::string to_string() const;
  /// Hex of to_u64(), zero-padded to ceil(size/4) digits. Requires size() <= 64.
  std::string to_hex() const;

  std::vector<std::size_t> ones() const;

  template <class Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(w * kWordBits + bit);
        bits &= bits - 1;
      }
    }
  }

 private:
  void trim() noexcept;

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

std::size_t hamming_distance(const BitVector& a, const BitVector& b);

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept;
};

}  // namespace hyperdrift
