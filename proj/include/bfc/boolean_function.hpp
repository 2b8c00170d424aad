#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bfc/bits.hpp"
#include "bfc/errors.hpp"

namespace bfc {

/// Transforms allocate 2^n words, so dimensions beyond this fail fast
/// instead of thrashing.
inline constexpr int max_dimension = 24;

inline void check_dimension(int n) {
  if (n < 1 || n > max_dimension)
    throw dimension_cap_error("dimension n=" + std::to_string(n) +
                              " outside supported range [1, " +
                              std::to_string(max_dimension) + "]");
}

/// Truth table of f: {0,1}^n -> {0,1}.
///
/// Point encoding: the point x corresponds to the integer whose bit j-1 is
/// x_j (coordinate 1 is the least significant bit). The same encoding maps a
/// subset S of [n] to its characteristic mask, so a point and the set it
/// indicates share one integer.
class BooleanFunction {
public:
  explicit BooleanFunction(int n) : n_(check(n)), bits_(make_bit_words(n)) {}

  BooleanFunction(int n, BitWords table_bits)
      : n_(check(n)), bits_(std::move(table_bits)) {
    if (bits_.size() != word_count(n_))
      throw precondition_error("table word count does not match dimension");
  }

  /// Builds a function whose whole table fits in one word (n <= 6).
  static BooleanFunction from_packed(int n, std::uint64_t table) {
    check_dimension(n);
    if (n > 6) throw precondition_error("from_packed requires n <= 6");
    if (n < 6 && (table >> (std::uint64_t{1} << n)) != 0)
      throw precondition_error("packed table has bits beyond 2^n");
    BooleanFunction f(n);
    f.bits_[0] = table;
    return f;
  }

  int n() const { return n_; }
  std::uint64_t table_size() const { return std::uint64_t{1} << n_; }
  std::uint32_t full_mask() const {
    return static_cast<std::uint32_t>(table_size() - 1);
  }

  bool value(std::uint64_t x) const { return get_bit(bits_, x); }
  void set_value(std::uint64_t x, bool v) { set_bit(bits_, x, v); }

  std::uint64_t support_size() const { return count_ones(bits_); }
  bool is_zero() const { return all_zero(bits_); }

  const BitWords& table_words() const { return bits_; }

  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

private:
  static int check(int n) {
    check_dimension(n);
    return n;
  }

  int n_;
  BitWords bits_;
};

/// A family of subsets of [n], stored as strictly increasing n-bit masks
/// (bit j-1 set <=> element j in the set).
class SetFamily {
public:
  SetFamily(int n, std::vector<std::uint32_t> members)
      : n_(0), members_(std::move(members)) {
    check_dimension(n);
    n_ = n;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i] >= limit)
        throw precondition_error("family member mask " +
                                 std::to_string(members_[i]) +
                                 " out of range for n=" + std::to_string(n));
      if (i > 0 && members_[i - 1] >= members_[i])
        throw precondition_error("family members must be strictly increasing");
    }
  }

  int n() const { return n_; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<std::uint32_t>& members() const { return members_; }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

private:
  int n_;
  std::vector<std::uint32_t> members_;
};

/// The supported set of f: all points where f = 1, ascending.
inline SetFamily support(const BooleanFunction& f) {
  std::vector<std::uint32_t> members;
  members.reserve(static_cast<std::size_t>(f.support_size()));
  const std::uint64_t size = f.table_size();
  for (std::uint64_t x = 0; x < size; ++x)
    if (f.value(x)) members.push_back(static_cast<std::uint32_t>(x));
  return SetFamily(f.n(), std::move(members));
}

/// Indicator function of a mask list; duplicates are tolerated and collapse.
inline BooleanFunction from_support(int n,
                                    const std::vector<std::uint32_t>& members) {
  check_dimension(n);
  BooleanFunction f(n);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint32_t m : members) {
    if (m >= limit)
      throw precondition_error("support mask " + std::to_string(m) +
                               " out of range for n=" + std::to_string(n));
    f.set_value(m, true);
  }
  return f;
}

/// Mod-2 subset-sum transform of a bit sequence of length 2^log2len:
/// out[S] = XOR over T subseteq S of in[T]. Self-inverse.
inline BitWords zeta_subset_f2(BitWords bits, int log2len) {
  subset_xor_transform(bits, log2len);
  return bits;
}

inline void check_mask(std::uint32_t mask, int n, const char* what) {
  if (mask >= (std::uint64_t{1} << n))
    throw precondition_error(std::string(what) + " mask " +
                             std::to_string(mask) +
                             " out of range for n=" + std::to_string(n));
}

/// Parity of the number of family members containing A.
inline int zeta_superset_parity(const SetFamily& family, std::uint32_t a_mask) {
  check_mask(a_mask, family.n(), "containment");
  int parity = 0;
  for (std::uint32_t member : family.members())
    if ((member & a_mask) == a_mask) parity ^= 1;
  return parity;
}

}  // namespace bfc
