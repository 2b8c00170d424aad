#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bfc/constructions.hpp"
#include "bfc/spectral.hpp"
#include "oracles.hpp"

using namespace bfc;

namespace {

BooleanFunction parity_function(int n) {
  BooleanFunction f(n);
  for (std::uint64_t x = 0; x < f.table_size(); ++x)
    if (popcount(x) & 1) f.set_value(x, true);
  return f;
}

}  // namespace

TEST_CASE("spectrum of the constant one", "[spectral]") {
  BooleanFunction f(3);
  for (std::uint64_t x = 0; x < 8; ++x) f.set_value(x, true);
  const FourierSpectrum spectrum = wht(f);
  CHECK(spectrum.coeffs[0] == 8);
  for (std::uint64_t s = 1; s < 8; ++s) CHECK(spectrum.coeffs[s] == 0);
  CHECK(fourier_degree(spectrum) == 0);
  CHECK(spectral_support_size(spectrum) == 1);
}

TEST_CASE("spectrum of AND on two variables", "[spectral]") {
  const FourierSpectrum spectrum = wht(BooleanFunction::from_packed(2, 0b1000));
  CHECK(spectrum.coeffs == std::vector<std::int32_t>{1, -1, -1, 1});
  CHECK(spectral_support_size(spectrum) == 4);
}

TEST_CASE("wht agrees with direct summation on every n=4 function",
          "[spectral]") {
  for (std::uint64_t table = 0; table < 65536; ++table) {
    const BooleanFunction f = BooleanFunction::from_packed(4, table);
    REQUIRE(wht(f).coeffs == oracle::direct_spectrum(f));
  }
}

TEST_CASE("degree of the zero spectrum is an error", "[spectral]") {
  CHECK_THROWS_AS(fourier_degree(BooleanFunction(3)), zero_function_error);
}

TEST_CASE("degree of the n=4 equality example is 2", "[spectral]") {
  CHECK(fourier_degree(equality_example_n4()) == 2);
}

TEST_CASE("parity has full degree", "[spectral]") {
  const BooleanFunction f = parity_function(5);
  CHECK(fourier_degree(f) == 5);
  CHECK(oracle::direct_fourier_degree(f) == 5);
}

TEST_CASE("dictator has two spectral coefficients", "[spectral]") {
  BooleanFunction f(3);
  for (std::uint64_t x = 0; x < 8; ++x)
    if (x & 1) f.set_value(x, true);
  CHECK(spectral_support_size(wht(f)) == 2);
}

TEST_CASE("double transform reproduces 2^n times the table", "[spectral]") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    BooleanFunction f(6);
    for (std::uint64_t x = 0; x < 64; ++x) f.set_value(x, rng() & 1);
    const FourierSpectrum once = wht(f);
    // Feed the spectrum back through the same butterflies.
    std::vector<std::int32_t> a = once.coeffs;
    for (std::uint64_t half = 1; half < 64; half <<= 1)
      for (std::uint64_t block = 0; block < 64; block += 2 * half)
        for (std::uint64_t j = block; j < block + half; ++j) {
          const std::int32_t u = a[j], v = a[j + half];
          a[j] = u + v;
          a[j + half] = u - v;
        }
    for (std::uint64_t x = 0; x < 64; ++x) {
      REQUIRE(a[x] % 64 == 0);
      REQUIRE(a[x] / 64 == (f.value(x) ? 1 : 0));
    }
  }
}

TEST_CASE("uncertainty product at the equality cases", "[spectral]") {
  BooleanFunction one(5);
  for (std::uint64_t x = 0; x < 32; ++x) one.set_value(x, true);
  const UncertaintyReport r1 = check_uncertainty(one);
  CHECK(r1.holds);
  CHECK(r1.support_size * r1.spectral_support_size == 32);

  const UncertaintyReport r2 =
      check_uncertainty(BooleanFunction::from_packed(2, 0b1000));
  CHECK(r2.holds);
  CHECK(r2.support_size * r2.spectral_support_size == 4);

  CHECK_THROWS_AS(check_uncertainty(BooleanFunction(4)), zero_function_error);
}

TEST_CASE("uncertainty and Schwartz-Zippel hold exhaustively at n <= 3",
          "[spectral]") {
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t table = 1; table < (std::uint64_t{1} << size);
         ++table) {
      const BooleanFunction f = BooleanFunction::from_packed(n, table);
      REQUIRE(check_uncertainty(f).holds);
      const int deg = fourier_degree(f);
      REQUIRE((f.support_size() << deg) >= size);
    }
  }
}
