#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace bfc {

/// Packed bit sequence of length 2^k, little-endian within 64-bit words.
/// Padding bits above the logical length are kept zero by all helpers.
using BitWords = std::vector<std::uint64_t>;

inline int popcount(std::uint64_t x) { return std::popcount(x); }

inline std::size_t word_count(int log2len) {
  return log2len >= 6 ? (std::size_t{1} << (log2len - 6)) : 1;
}

inline BitWords make_bit_words(int log2len) {
  return BitWords(word_count(log2len), 0);
}

inline bool get_bit(const BitWords& w, std::uint64_t i) {
  return (w[i >> 6] >> (i & 63)) & 1u;
}

inline void set_bit(BitWords& w, std::uint64_t i, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (v)
    w[i >> 6] |= mask;
  else
    w[i >> 6] &= ~mask;
}

inline void flip_bit(BitWords& w, std::uint64_t i) {
  w[i >> 6] ^= std::uint64_t{1} << (i & 63);
}

inline std::uint64_t count_ones(const BitWords& w) {
  std::uint64_t total = 0;
  for (std::uint64_t word : w) total += std::popcount(word);
  return total;
}

inline bool all_zero(const BitWords& w) {
  for (std::uint64_t word : w)
    if (word != 0) return false;
  return true;
}

namespace detail {

// Positions within a 64-bit word whose bit b (b < 6) of the index is set.
inline constexpr std::uint64_t kIndexBitMask[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

}  // namespace detail

/// In-place mod-2 subset-sum transform: bits[S] <- XOR over T subseteq S of
/// bits[T]. One butterfly pass per index bit; self-inverse over F2.
inline void subset_xor_transform(BitWords& w, int log2len) {
  const int in_word = log2len < 6 ? log2len : 6;
  for (int b = 0; b < in_word; ++b) {
    const int shift = 1 << b;
    for (auto& word : w) word ^= (word << shift) & detail::kIndexBitMask[b];
  }
  for (int b = 6; b < log2len; ++b) {
    const std::size_t stride = std::size_t{1} << (b - 6);
    for (std::size_t block = 0; block < w.size(); block += 2 * stride)
      for (std::size_t j = 0; j < stride; ++j)
        w[block + stride + j] ^= w[block + j];
  }
}

/// In-place mod-2 superset-sum transform: bits[S] <- XOR over T supseteq S.
/// Mirror image of subset_xor_transform; also self-inverse.
inline void superset_xor_transform(BitWords& w, int log2len) {
  const int in_word = log2len < 6 ? log2len : 6;
  for (int b = 0; b < in_word; ++b) {
    const int shift = 1 << b;
    for (auto& word : w) word ^= (word >> shift) & ~detail::kIndexBitMask[b];
  }
  for (int b = 6; b < log2len; ++b) {
    const std::size_t stride = std::size_t{1} << (b - 6);
    for (std::size_t block = 0; block < w.size(); block += 2 * stride)
      for (std::size_t j = 0; j < stride; ++j)
        w[block + j] ^= w[block + stride + j];
  }
}

/// Compresses the bits of `value` selected by `selector` into the low bits of
/// the result, preserving order (software PEXT).
inline std::uint32_t extract_bits(std::uint32_t value, std::uint32_t selector) {
  std::uint32_t out = 0;
  int k = 0;
  while (selector != 0) {
    const std::uint32_t low = selector & (~selector + 1);
    if (value & low) out |= std::uint32_t{1} << k;
    ++k;
    selector &= selector - 1;
  }
  return out;
}

/// Inverse of extract_bits: spreads the low bits of `value` onto the set bits
/// of `selector` (software PDEP).
inline std::uint32_t deposit_bits(std::uint32_t value, std::uint32_t selector) {
  std::uint32_t out = 0;
  while (selector != 0) {
    const std::uint32_t low = selector & (~selector + 1);
    if (value & 1u) out |= low;
    value >>= 1;
    selector &= selector - 1;
  }
  return out;
}

/// Calls fn(mask) for every mask in [0, 2^n) in order of increasing popcount,
/// numerically ascending within each popcount class. Stops early if fn
/// returns false.
template <typename Fn>
bool for_each_mask_by_weight(int n, int max_weight, Fn&& fn) {
  for (int k = 0; k <= max_weight; ++k) {
    if (k == 0) {
      if (!fn(std::uint32_t{0})) return false;
      continue;
    }
    if (k > n) break;
    // Gosper's hack: next mask with the same popcount.
    std::uint32_t mask = (std::uint32_t{1} << k) - 1;
    const std::uint32_t limit = std::uint32_t{1} << n;
    while (mask < limit) {
      if (!fn(mask)) return false;
      const std::uint32_t c = mask & (~mask + 1);
      const std::uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return true;
}

}  // namespace bfc
