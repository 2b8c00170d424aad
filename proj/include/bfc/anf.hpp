#pragma once

#include <cstdint>
#include <string>

#include "bfc/boolean_function.hpp"

namespace bfc {

/// Algebraic normal form over F2: coefficient bit S is c_S, the coefficient
/// of the monomial prod_{j in S} x_j.
struct F2Polynomial {
  int n = 0;
  BitWords coeffs;

  bool coefficient(std::uint32_t monomial_mask) const {
    return get_bit(coeffs, monomial_mask);
  }
  bool is_zero() const { return all_zero(coeffs); }
};

/// ANF coefficients via the mod-2 subset-sum transform of the truth table:
/// c_S = XOR over T subseteq S of f(T). The transform is self-inverse, so it
/// both encodes and evaluates.
inline F2Polynomial anf(const BooleanFunction& f) {
  return F2Polynomial{f.n(), zeta_subset_f2(f.table_words(), f.n())};
}

/// Evaluates the polynomial at every point, returning the truth table.
inline BooleanFunction evaluate(const F2Polynomial& p) {
  return BooleanFunction(p.n, zeta_subset_f2(p.coeffs, p.n));
}

inline int f2_degree(const F2Polynomial& p) {
  int deg = -1;
  const std::uint64_t size = std::uint64_t{1} << p.n;
  for (std::uint64_t s = 0; s < size; ++s)
    if (get_bit(p.coeffs, s)) deg = std::max(deg, popcount(s));
  if (deg < 0) throw zero_function_error("F2-degree of the zero function");
  return deg;
}

inline int f2_degree(const BooleanFunction& f) { return f2_degree(anf(f)); }

/// Finds a set S with |S| <= vc whose complementary monomial x^{[n] \ S} has
/// a set ANF coefficient, witnessing deg_F2(f) >= n - vc. Search runs by
/// increasing popcount, numerically ascending within each size, so the
/// returned witness is deterministic. Existence is guaranteed whenever vc is
/// the VC-dimension of supp(f); a miss means corrupted state and aborts.
inline std::uint32_t monomial_witness(const BooleanFunction& f, int vc) {
  if (f.is_zero())
    throw zero_function_error("monomial witness requires a non-zero function");
  const F2Polynomial poly = anf(f);
  const std::uint32_t full = f.full_mask();
  std::uint32_t found = 0;
  bool ok = false;
  for_each_mask_by_weight(f.n(), vc, [&](std::uint32_t s) {
    if (poly.coefficient(full & ~s)) {
      found = s;
      ok = true;
      return false;  // first hit in (popcount, value) order
    }
    return true;
  });
  if (!ok)
    throw std::logic_error(
        "monomial witness not found; VC input or ANF state is inconsistent");
  return found;
}

/// For f supported on points of Hamming weight <= r, asserts the degree
/// lower bound deg_F2(f) >= n - r.
inline bool weight_bounded_degree_check(const BooleanFunction& f, int r) {
  if (f.is_zero())
    throw zero_function_error(
        "weight-bounded degree check requires a non-zero function");
  const std::uint64_t size = f.table_size();
  for (std::uint64_t x = 0; x < size; ++x)
    if (f.value(x) && popcount(x) > r)
      throw precondition_error("support mask " + std::to_string(x) +
                               " has weight above the bound r=" +
                               std::to_string(r));
  return f2_degree(f) >= f.n() - r;
}

}  // namespace bfc
