#include "hyperdrift/bitvec.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace hyperdrift {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + BitVector::kWordBits - 1) / BitVector::kWordBits; }

void require_same_size(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(fmt::format("bit vector size mismatch: {} vs {}", a.size(), b.size()));
  }
}

}  // namespace

BitVector::BitVector(std::size_t size, bool value)
    : size_(size), words_(word_count(size), value ? ~Word{0} : Word{0}) {
  trim();
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument(fmt::format("invalid bit character '{}' at position {}", bits[i], i));
    }
  }
  return v;
}

BitVector BitVector::from_u64(std::size_t size, std::uint64_t value) {
  if (size > kWordBits) throw std::invalid_argument("from_u64 supports at most 64 bits");
  BitVector v(size);
  if (size > 0) {
    v.words_[0] = value;
    v.trim();
  }
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const Word mask = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void BitVector::flip_all() {
  for (auto& w : words_) w = ~w;
  trim();
}

void BitVector::clear() {
  for (auto& w : words_) w = 0;
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (const Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::any() const noexcept {
  for (const Word w : words_) {
    if (w != 0) return true;
  }
  return false;
}

bool BitVector::parity() const noexcept {
  Word acc = 0;
  for (const Word w : words_) acc ^= w;
  return (std::popcount(acc) & 1) != 0;
}

std::size_t BitVector::find_first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return size_;
}

std::size_t BitVector::select(std::size_t r) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const auto c = static_cast<std::size_t>(std::popcount(words_[w]));
    if (r < c) {
      Word bits = words_[w];
      for (std::size_t skip = 0; skip < r; ++skip) bits &= bits - 1;
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    }
    r -= c;
  }
  throw std::out_of_range("select: rank exceeds number of set bits");
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

bool BitVector::dot(const BitVector& other) const {
  require_same_size(*this, other);
  Word acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return (std::popcount(acc) & 1) != 0;
}

std::size_t BitVector::intersection_count(const BitVector& other) const {
  require_same_size(*this, other);
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
  }
  return total;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::uint64_t BitVector::to_u64() const {
  if (size_ > kWordBits) throw std::out_of_range("to_u64 requires at most 64 bits");
  return words_.empty() ? 0 : words_[0];
}

std::string BitVector::to_string() const {
  std::string out(size_, '0');
  for_each_set([&](std::size_t i) { out[i] = '1'; });
  return out;
}

std::string BitVector::to_hex() const {
  const std::size_t digits = std::max<std::size_t>(1, (size_ + 3) / 4);
  return fmt::format("{:0{}x}", to_u64(), digits);
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each_set([&](std::size_t i) { out.push_back(i); });
  return out;
}

void BitVector::trim() noexcept {
  const std::size_t tail = size_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

std::size_t hamming_distance(const BitVector& a, const BitVector& b) {
  require_same_size(a, b);
  std::size_t total = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) total += static_cast<std::size_t>(std::popcount(wa[w] ^ wb[w]));
  return total;
}

std::size_t BitVectorHash::operator()(const BitVector& v) const noexcept {
  std::size_t h = v.size() * 0x9e3779b97f4a7c15ULL;
  for (const auto w : v.words()) {
    h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace hyperdrift
