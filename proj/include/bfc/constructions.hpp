#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bfc/anf.hpp"
#include "bfc/boolean_function.hpp"

namespace bfc {

/// A subcube given by fixed coordinates: coordinate j (1-based) pinned to
/// value v. The number of fixes is the co-dimension.
struct SubcubeSpec {
  int n = 0;
  std::vector<std::pair<int, int>> fixes;

  int codimension() const { return static_cast<int>(fixes.size()); }
};

inline void validate(const SubcubeSpec& spec) {
  check_dimension(spec.n);
  std::uint32_t seen = 0;
  for (const auto& [coord, value] : spec.fixes) {
    if (coord < 1 || coord > spec.n)
      throw precondition_error("subcube fix coordinate " +
                               std::to_string(coord) + " outside [1, " +
                               std::to_string(spec.n) + "]");
    if (value != 0 && value != 1)
      throw precondition_error("subcube fix value must be 0 or 1");
    const std::uint32_t bit = std::uint32_t{1} << (coord - 1);
    if (seen & bit)
      throw precondition_error("subcube fixes coordinate " +
                               std::to_string(coord) + " twice");
    seen |= bit;
  }
}

/// Indicator of the subcube: 1 exactly on points matching every fix.
inline BooleanFunction subcube(const SubcubeSpec& spec) {
  validate(spec);
  std::uint32_t fixed_mask = 0;
  std::uint32_t pattern = 0;
  for (const auto& [coord, value] : spec.fixes) {
    const std::uint32_t bit = std::uint32_t{1} << (coord - 1);
    fixed_mask |= bit;
    if (value) pattern |= bit;
  }
  BooleanFunction f(spec.n);
  const std::uint64_t size = f.table_size();
  for (std::uint64_t x = 0; x < size; ++x)
    if ((static_cast<std::uint32_t>(x) & fixed_mask) == pattern)
      f.set_value(x, true);
  return f;
}

/// True iff the support is exactly a subcube (possibly a single point or
/// the whole cube). The coordinates constant across all members define the
/// only cube that could match; equality is then a size check.
inline bool is_subcube(const SetFamily& family) {
  if (family.empty()) return false;
  std::uint32_t and_all = ~std::uint32_t{0};
  std::uint32_t or_all = 0;
  for (std::uint32_t member : family.members()) {
    and_all &= member;
    or_all |= member;
  }
  const std::uint32_t full = (std::uint32_t{1} << family.n()) - 1;
  const std::uint32_t constant = full & ~(and_all ^ or_all);
  const int free = family.n() - popcount(std::uint64_t{constant});
  return family.size() == (std::uint64_t{1} << free);
}

/// The 4-variable equality witness whose support is not a subcube. Built
/// from its known support; construction re-evaluates the defining integer
/// polynomial x1 + x2 + x3*x4 - x1*x2 - x1*x4 - x2*x3 at every point and
/// aborts if the two routes ever disagree.
inline BooleanFunction equality_example_n4() {
  static const std::vector<std::uint32_t> kSupport = {1, 2, 3, 5, 10, 12, 13, 14};
  BooleanFunction f = from_support(4, kSupport);
  for (std::uint32_t x = 0; x < 16; ++x) {
    const int x1 = x & 1, x2 = (x >> 1) & 1, x3 = (x >> 2) & 1,
              x4 = (x >> 3) & 1;
    const int value = x1 + x2 + x3 * x4 - x1 * x2 - x1 * x4 - x2 * x3;
    if (value != 0 && value != 1)
      throw std::logic_error("n=4 example polynomial left {0,1}");
    if ((value == 1) != f.value(x))
      throw std::logic_error("n=4 example support disagrees with polynomial");
  }
  return f;
}

/// The 15-variable function with sensitivity 7 and VC-dimension 7, so
/// VC + s = 14 < 15. Three pairwise-disjoint 3-dimensional subcubes are cut
/// out of {0,1}^9, and the remainder is embedded in {0,1}^15 with
/// coordinates 10..15 pinned to 0.
inline BooleanFunction counterexample_n15() {
  std::vector<std::uint32_t> members;
  members.reserve(488);
  for (std::uint32_t m = 0; m < 512; ++m) {
    const bool cube1 = (m & 0b111111000u) == 0;
    const bool cube2 = (m & 0b000000111u) == 0 &&
                       (m & 0b111000000u) == 0b111000000u;
    const bool cube3 = (m & 0b000111111u) == 0b000111111u;
    if (!cube1 && !cube2 && !cube3) members.push_back(m);
  }
  return from_support(15, members);
}

// Random generation uses std::mt19937_64, whose output sequence is fully
// pinned down by the standard, so tables are identical across platforms for
// a given seed.

/// Each table bit is set independently with probability p. Bits are decided
/// by comparing the top 53 bits of one engine draw (as a dyadic rational in
/// [0,1)) against p.
inline BooleanFunction random_function(int n, double p, std::uint64_t seed) {
  check_dimension(n);
  if (p < 0.0 || p > 1.0)
    throw precondition_error("density p must lie in [0, 1]");
  std::mt19937_64 engine(seed);
  BooleanFunction f(n);
  const std::uint64_t size = f.table_size();
  for (std::uint64_t x = 0; x < size; ++x) {
    const double u =
        static_cast<double>(engine() >> 11) * 0x1.0p-53;
    if (u < p) f.set_value(x, true);
  }
  return f;
}

/// Uniformly random non-zero polynomial among ANF coefficients of monomial
/// size <= d, returned as its truth table. The all-zero draw is rejected
/// and the engine keeps running, so results stay reproducible per seed.
inline BooleanFunction random_low_f2_degree(int n, int d, std::uint64_t seed) {
  check_dimension(n);
  if (d < 0 || d > n)
    throw precondition_error("degree bound d must lie in [0, n]");
  std::mt19937_64 engine(seed);
  F2Polynomial poly{n, make_bit_words(n)};
  const std::uint64_t size = std::uint64_t{1} << n;
  for (;;) {
    for (std::uint64_t s = 0; s < size; ++s)
      if (popcount(s) <= d) set_bit(poly.coeffs, s, engine() & 1);
    if (!poly.is_zero()) break;
  }
  return evaluate(poly);
}

}  // namespace bfc
