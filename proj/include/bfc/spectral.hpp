#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "bfc/boolean_function.hpp"

namespace bfc {

/// Unnormalized Walsh-Hadamard coefficients: coeffs[S] = 2^n * f_hat(S),
/// where f_hat(S) = E_x[f(x) * (-1)^popcount(S & x)]. All integers; every
/// equality question about the spectrum is decided exactly.
struct FourierSpectrum {
  int n = 0;
  std::vector<std::int32_t> coeffs;
};

/// Fast Walsh-Hadamard transform of the truth table, exact integers.
inline FourierSpectrum wht(const BooleanFunction& f) {
  const std::uint64_t size = f.table_size();
  std::vector<std::int32_t> a(size);
  for (std::uint64_t x = 0; x < size; ++x) a[x] = f.value(x) ? 1 : 0;
  for (std::uint64_t half = 1; half < size; half <<= 1) {
    for (std::uint64_t block = 0; block < size; block += 2 * half) {
      for (std::uint64_t j = block; j < block + half; ++j) {
        const std::int32_t u = a[j];
        const std::int32_t v = a[j + half];
        a[j] = u + v;
        a[j + half] = u - v;
      }
    }
  }
  return FourierSpectrum{f.n(), std::move(a)};
}

/// Largest |S| with a non-zero coefficient. The all-zero spectrum (f = 0)
/// has no degree.
inline int fourier_degree(const FourierSpectrum& spectrum) {
  int deg = -1;
  for (std::size_t s = 0; s < spectrum.coeffs.size(); ++s)
    if (spectrum.coeffs[s] != 0)
      deg = std::max(deg, popcount(static_cast<std::uint64_t>(s)));
  if (deg < 0) throw zero_function_error("degree of the zero function");
  return deg;
}

inline int fourier_degree(const BooleanFunction& f) {
  return fourier_degree(wht(f));
}

/// Number of non-zero Fourier coefficients.
inline std::uint64_t spectral_support_size(const FourierSpectrum& spectrum) {
  std::uint64_t count = 0;
  for (std::int32_t c : spectrum.coeffs) count += (c != 0);
  return count;
}

struct UncertaintyReport {
  int n = 0;
  std::uint64_t support_size = 0;
  std::uint64_t spectral_support_size = 0;
  double lhs_bits = 0.0;  // log2 |supp(f)| + log2 |supp(f_hat)|
  bool holds = false;
};

/// Checks |supp(f)| * |supp(f_hat)| >= 2^n. The comparison is done on the
/// integer product; lhs_bits is informational only.
inline UncertaintyReport check_uncertainty(const BooleanFunction& f) {
  if (f.is_zero())
    throw zero_function_error("uncertainty check requires a non-zero function");
  UncertaintyReport report;
  report.n = f.n();
  report.support_size = f.support_size();
  report.spectral_support_size = spectral_support_size(wht(f));
  report.lhs_bits = std::log2(static_cast<double>(report.support_size)) +
                    std::log2(static_cast<double>(report.spectral_support_size));
  report.holds = report.support_size * report.spectral_support_size >=
                 (std::uint64_t{1} << f.n());
  return report;
}

}  // namespace bfc
