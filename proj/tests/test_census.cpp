#include <catch2/catch_amalgamated.hpp>

#include "bfc/census.hpp"
#include "oracles.hpp"

using namespace bfc;

namespace {

// Fully independent census: definitional VC scan, direct-summation degree,
// direct subset-sum F2-degree. Usable at n <= 2 only.
CensusRow naive_census(int n) {
  CensusRow row;
  row.n = n;
  const std::uint64_t size = std::uint64_t{1} << n;
  row.total_functions = std::uint64_t{1} << size;
  for (std::uint64_t table = 1; table < row.total_functions; ++table) {
    const BooleanFunction f = BooleanFunction::from_packed(n, table);
    const int vc = oracle::naive_vc(support(f));
    if (vc + oracle::direct_fourier_degree(f) == n) ++row.deg_equality_count;
    if (vc + oracle::direct_f2_degree(f) == n) ++row.f2_equality_count;
  }
  return row;
}

}  // namespace

TEST_CASE("census rows at n <= 3", "[census]") {
  const CensusRow r1 = equality_census(1);
  CHECK(r1.total_functions == 4);
  CHECK(r1.deg_equality_count == 3);
  CHECK(r1.f2_equality_count == 3);

  const CensusRow r2 = equality_census(2);
  CHECK(r2.total_functions == 16);
  CHECK(r2.deg_equality_count == 9);
  CHECK(r2.f2_equality_count == 11);

  const CensusRow r3 = equality_census(3);
  CHECK(r3.total_functions == 256);
  CHECK(r3.deg_equality_count == 55);
  CHECK(r3.f2_equality_count == 83);
}

TEST_CASE("census agrees with a fully independent implementation",
          "[census]") {
  for (int n = 1; n <= 2; ++n) {
    const CensusRow fast = equality_census(n);
    const CensusRow slow = naive_census(n);
    CHECK(fast.deg_equality_count == slow.deg_equality_count);
    CHECK(fast.f2_equality_count == slow.f2_equality_count);
  }
}

TEST_CASE("census counts are thread-count independent", "[census]") {
  const CensusRow base = equality_census(3, 1);
  for (int threads : {2, 3, 8}) {
    const CensusRow row = equality_census(3, threads);
    CHECK(row.deg_equality_count == base.deg_equality_count);
    CHECK(row.f2_equality_count == base.f2_equality_count);
  }
}

TEST_CASE("census equality lists match the counts", "[census]") {
  CensusLists lists;
  const CensusRow row = equality_census(2, 2, &lists);
  REQUIRE(lists.deg_equality.size() == row.deg_equality_count);
  REQUIRE(lists.f2_equality.size() == row.f2_equality_count);
  for (std::uint64_t table : lists.f2_equality) {
    const BooleanFunction f = BooleanFunction::from_packed(2, table);
    const int vc = vc_dimension(support(f)).dimension;
    REQUIRE(vc + f2_degree(f) == 2);
  }
  // Listed functions also satisfy the real-degree bound; the slack there is
  // exactly the gap between the two degrees.
  for (std::uint64_t table : lists.f2_equality) {
    const BooleanFunction f = BooleanFunction::from_packed(2, table);
    const int vc = vc_dimension(support(f)).dimension;
    const int deg = fourier_degree(f);
    const int degf2 = f2_degree(f);
    REQUIRE(deg >= degf2);
    REQUIRE(vc + deg >= 2);
  }
}

TEST_CASE("census dimension cap", "[census]") {
  CHECK_THROWS_AS(equality_census(5), dimension_cap_error);
  CHECK_THROWS_AS(equality_census(0), dimension_cap_error);
  CHECK_THROWS_AS(verify_exhaustive(5), dimension_cap_error);
}

TEST_CASE("exhaustive suite passes at n = 2", "[census]") {
  const SuiteReport report = verify_exhaustive(2);
  CHECK(report.trials == 15);
  CHECK(report.all_passed());
  for (const auto& [name, passed] : report.pass_counts)
    CHECK(passed == 15);
  CHECK_FALSE(report.first_counterexample.has_value());
}

TEST_CASE("exhaustive suite is thread-count independent", "[census]") {
  const SuiteReport base = verify_exhaustive(3, 1);
  const SuiteReport threaded = verify_exhaustive(3, 4);
  CHECK(base.pass_counts == threaded.pass_counts);
  CHECK(base.all_passed() == threaded.all_passed());
}

TEST_CASE("an injected flipped verdict is located exactly", "[census]") {
  const detail::VerdictFlip flip{7, "vc_plus_deg"};
  for (int threads : {1, 3}) {
    const SuiteReport report = detail::verify_exhaustive_impl(2, threads, flip);
    CHECK_FALSE(report.all_passed());
    REQUIRE(report.first_counterexample.has_value());
    CHECK(report.first_counterexample->index == 7);
    CHECK(report.first_counterexample->check == "vc_plus_deg");
    CHECK(report.first_counterexample->function_bft == "2\n1110\n");
    for (const auto& [name, passed] : report.pass_counts) {
      if (name == "vc_plus_deg")
        CHECK(passed == 14);
      else
        CHECK(passed == 15);
    }
  }
}

TEST_CASE("sampled suite with zero trials is an empty pass", "[census]") {
  const SuiteReport report = verify_sampled(6, 0, 7);
  CHECK(report.trials == 0);
  CHECK(report.all_passed());
}

TEST_CASE("sampled suite passes at n = 6", "[census]") {
  const SuiteReport report = verify_sampled(6, 25, 7);
  CHECK(report.trials == 50);
  CHECK(report.all_passed());
  CHECK(report.notes.empty());
}

TEST_CASE("sampled suite skips capped checks above n = 8", "[census]") {
  const SuiteReport report = verify_sampled(10, 3, 7);
  CHECK(report.all_passed());
  REQUIRE(report.notes.size() == 2);
  for (const auto& [name, passed] : report.pass_counts) {
    CHECK(name != "vc_plus_cert");
    CHECK(name != "vc_plus_depth");
  }
}

TEST_CASE("sampled suite is deterministic per seed", "[census]") {
  const SuiteReport a = verify_sampled(7, 10, 42, 1);
  const SuiteReport b = verify_sampled(7, 10, 42, 4);
  CHECK(a.pass_counts == b.pass_counts);
}
