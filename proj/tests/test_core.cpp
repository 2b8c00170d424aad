#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "bfc/boolean_function.hpp"
#include "bfc/io.hpp"
#include "oracles.hpp"

using namespace bfc;

TEST_CASE("support of the zero function is empty", "[core]") {
  BooleanFunction f(3);
  CHECK(support(f).members().empty());
}

TEST_CASE("support of AND on two variables", "[core]") {
  BooleanFunction f = BooleanFunction::from_packed(2, 0b1000);
  CHECK(support(f).members() == std::vector<std::uint32_t>{3});
}

TEST_CASE("from_support inverts support", "[core]") {
  CHECK(from_support(2, {3}) == BooleanFunction::from_packed(2, 0b1000));
  CHECK(from_support(1, {}).is_zero());

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    BooleanFunction f(6);
    for (std::uint64_t x = 0; x < 64; ++x) f.set_value(x, rng() & 1);
    CHECK(from_support(6, support(f).members()) == f);
  }
}

TEST_CASE("from_support rejects out-of-range masks", "[core]") {
  CHECK_THROWS_AS(from_support(3, {8}), precondition_error);
}

TEST_CASE("set family invariants are enforced", "[core]") {
  CHECK_THROWS_AS(SetFamily(3, {2, 2}), precondition_error);
  CHECK_THROWS_AS(SetFamily(3, {3, 1}), precondition_error);
  CHECK_THROWS_AS(SetFamily(2, {4}), precondition_error);
}

TEST_CASE("dimension cap is enforced", "[core]") {
  CHECK_THROWS_AS(BooleanFunction(0), dimension_cap_error);
  CHECK_THROWS_AS(BooleanFunction(25), dimension_cap_error);
}

TEST_CASE("subset zeta mod 2: indicator of the empty set", "[core]") {
  // Everything contains the empty set, so the transform is all-ones.
  BitWords bits = make_bit_words(4);
  set_bit(bits, 0, true);
  const BitWords out = zeta_subset_f2(bits, 4);
  for (std::uint64_t s = 0; s < 16; ++s) CHECK(get_bit(out, s));
}

TEST_CASE("subset zeta mod 2: indicator of the full set is fixed", "[core]") {
  BitWords bits = make_bit_words(3);
  set_bit(bits, 7, true);
  CHECK(zeta_subset_f2(bits, 3) == bits);
}

TEST_CASE("subset zeta mod 2 is an involution", "[core]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    BitWords bits = make_bit_words(8);
    for (std::uint64_t i = 0; i < 256; ++i) set_bit(bits, i, rng() & 1);
    CHECK(zeta_subset_f2(zeta_subset_f2(bits, 8), 8) == bits);
  }
}

TEST_CASE("subset zeta mod 2 agrees with the direct oracle", "[core]") {
  // Exhaustive over every input at n <= 3, sampled at n = 4.
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t input = 0; input < (std::uint64_t{1} << size);
         ++input) {
      std::vector<int> in(size);
      BitWords bits = make_bit_words(n);
      for (std::uint64_t i = 0; i < size; ++i) {
        in[i] = (input >> i) & 1;
        set_bit(bits, i, in[i]);
      }
      const std::vector<int> expected = oracle::direct_subset_xor(in);
      const BitWords got = zeta_subset_f2(bits, n);
      for (std::uint64_t s = 0; s < size; ++s)
        REQUIRE(get_bit(got, s) == (expected[s] != 0));
    }
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> in(16);
    BitWords bits = make_bit_words(4);
    for (std::uint64_t i = 0; i < 16; ++i) {
      in[i] = rng() & 1;
      set_bit(bits, i, in[i]);
    }
    const std::vector<int> expected = oracle::direct_subset_xor(in);
    const BitWords got = zeta_subset_f2(bits, 4);
    for (std::uint64_t s = 0; s < 16; ++s)
      REQUIRE(get_bit(got, s) == (expected[s] != 0));
  }
}

TEST_CASE("superset containment parity", "[core]") {
  // Full family: 2^(n-|A|) supersets, even whenever |A| < n.
  std::vector<std::uint32_t> all;
  for (std::uint32_t m = 0; m < 16; ++m) all.push_back(m);
  const SetFamily full(4, all);
  for (std::uint32_t a = 0; a < 15; ++a)
    CHECK(zeta_superset_parity(full, a) == 0);
  CHECK(zeta_superset_parity(full, 15) == 1);

  const SetFamily just_empty(3, {0});
  CHECK(zeta_superset_parity(just_empty, 0) == 1);

  const SetFamily example(4, {1, 2, 3, 5, 10, 12, 13, 14});
  CHECK(zeta_superset_parity(example, 0) == 0);  // 8 members
}

TEST_CASE("bft format round-trips", "[core]") {
  BooleanFunction f = from_support(4, {1, 2, 3, 5, 10, 12, 13, 14});
  std::istringstream in(format_bft(f));
  CHECK(parse_bft(in, "mem") == f);
}

TEST_CASE("bft parse errors carry locations", "[core]") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_bft(in, "f.bft");
  };
  CHECK_THROWS_WITH(parse("2\n011\n"),
                    Catch::Matchers::ContainsSubstring("f.bft:2"));
  CHECK_THROWS_WITH(parse("2\n01x1\n"),
                    Catch::Matchers::ContainsSubstring("f.bft:2:3"));
  CHECK_THROWS_WITH(parse("x\n0101\n"),
                    Catch::Matchers::ContainsSubstring("f.bft:1"));
  CHECK_THROWS_WITH(parse("26\n00\n"),
                    Catch::Matchers::ContainsSubstring("f.bft:1"));
}

TEST_CASE("support format round-trips", "[core]") {
  const SetFamily family(4, {0, 3, 7, 12});
  std::istringstream in(format_support(family));
  CHECK(parse_support(in, "mem") == family);

  std::istringstream bad("supp 3\n5\n2\n");
  CHECK_THROWS_WITH(parse_support(bad, "s.txt"),
                    Catch::Matchers::ContainsSubstring("s.txt:3"));
}

TEST_CASE("auto-detect reads either format", "[core]") {
  BooleanFunction f = from_support(3, {1, 6});
  std::istringstream as_bft(format_bft(f));
  std::istringstream as_supp(format_support(support(f)));
  CHECK(parse_function_auto(as_bft, "a") == f);
  CHECK(parse_function_auto(as_supp, "b") == f);
}
