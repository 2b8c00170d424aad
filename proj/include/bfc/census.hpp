#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bfc/anf.hpp"
#include "bfc/boolean_function.hpp"
#include "bfc/constructions.hpp"
#include "bfc/io.hpp"
#include "bfc/measures.hpp"
#include "bfc/spectral.hpp"
#include "bfc/vc.hpp"

namespace bfc {

/// Equality counts over every non-zero function on n variables.
struct CensusRow {
  int n = 0;
  std::uint64_t total_functions = 0;  // 2^(2^n), zero function included
  std::uint64_t deg_equality_count = 0;   // non-zero f with deg + VC == n
  std::uint64_t f2_equality_count = 0;    // non-zero f with deg_F2 + VC == n
};

/// Optional raw listings of the equality cases, as packed truth tables.
struct CensusLists {
  std::vector<std::uint64_t> deg_equality;
  std::vector<std::uint64_t> f2_equality;
};

inline constexpr int census_max_dimension = 4;

namespace detail {

inline int clamp_threads(int threads) {
  if (threads < 1) return 1;
  if (threads > 64) return 64;
  return threads;
}

template <typename Worker>
void run_partitioned(std::uint64_t begin, std::uint64_t end, int threads,
                     Worker&& worker) {
  threads = clamp_threads(threads);
  const std::uint64_t total = end - begin;
  if (threads == 1 || total < 2) {
    worker(0, begin, end);
    return;
  }
  const std::uint64_t chunk = (total + threads - 1) / threads;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    const std::uint64_t lo = begin + chunk * static_cast<std::uint64_t>(t);
    if (lo >= end) break;
    const std::uint64_t hi = std::min(end, lo + chunk);
    pool.emplace_back([&worker, t, lo, hi] { worker(t, lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Walks all 2^(2^n) truth tables and counts the equality cases of both
/// trade-offs. Partial counts from disjoint index ranges merge by addition,
/// so the result does not depend on the thread count.
inline CensusRow equality_census(int n, int threads = 1,
                                 CensusLists* lists = nullptr) {
  if (n < 1 || n > census_max_dimension)
    throw dimension_cap_error("census supports n in [1, " +
                              std::to_string(census_max_dimension) + "]");
  const std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
  threads = detail::clamp_threads(threads);

  struct Partial {
    std::uint64_t deg_eq = 0;
    std::uint64_t f2_eq = 0;
    std::vector<std::uint64_t> deg_list;
    std::vector<std::uint64_t> f2_list;
  };
  std::vector<Partial> partials(threads);

  detail::run_partitioned(
      1, total, threads, [&](int worker, std::uint64_t lo, std::uint64_t hi) {
        Partial& part = partials[worker];
        for (std::uint64_t table = lo; table < hi; ++table) {
          const BooleanFunction f = BooleanFunction::from_packed(n, table);
          const int vc = vc_dimension(support(f)).dimension;
          if (vc + fourier_degree(f) == n) {
            ++part.deg_eq;
            if (lists) part.deg_list.push_back(table);
          }
          if (vc + f2_degree(f) == n) {
            ++part.f2_eq;
            if (lists) part.f2_list.push_back(table);
          }
        }
      });

  CensusRow row;
  row.n = n;
  row.total_functions = total;
  for (const Partial& part : partials) {
    row.deg_equality_count += part.deg_eq;
    row.f2_equality_count += part.f2_eq;
    if (lists) {
      lists->deg_equality.insert(lists->deg_equality.end(),
                                 part.deg_list.begin(), part.deg_list.end());
      lists->f2_equality.insert(lists->f2_equality.end(),
                                part.f2_list.begin(), part.f2_list.end());
    }
  }
  return row;
}

// ---------------------------------------------------------------------------
// Batch inequality verification
// ---------------------------------------------------------------------------

enum class SuiteCheck : int {
  vc_plus_deg,
  vc_plus_degf2,
  uncertainty,
  sauer_shelah,
  schwartz_zippel,
  deg_ge_degf2,
  degf2_le_log_spectral,
  s_squared_vs_deg,
  vc_plus_depth,
  vc_plus_cert,
  two_vc_plus_s,
  design_equivalence,
};

inline constexpr std::array<SuiteCheck, 12> all_suite_checks = {
    SuiteCheck::vc_plus_deg,        SuiteCheck::vc_plus_degf2,
    SuiteCheck::uncertainty,        SuiteCheck::sauer_shelah,
    SuiteCheck::schwartz_zippel,    SuiteCheck::deg_ge_degf2,
    SuiteCheck::degf2_le_log_spectral, SuiteCheck::s_squared_vs_deg,
    SuiteCheck::vc_plus_depth,      SuiteCheck::vc_plus_cert,
    SuiteCheck::two_vc_plus_s,      SuiteCheck::design_equivalence,
};

inline const char* suite_check_name(SuiteCheck check) {
  switch (check) {
    case SuiteCheck::vc_plus_deg: return "vc_plus_deg";
    case SuiteCheck::vc_plus_degf2: return "vc_plus_degf2";
    case SuiteCheck::uncertainty: return "uncertainty";
    case SuiteCheck::sauer_shelah: return "sauer_shelah";
    case SuiteCheck::schwartz_zippel: return "schwartz_zippel";
    case SuiteCheck::deg_ge_degf2: return "deg_ge_degf2";
    case SuiteCheck::degf2_le_log_spectral: return "degf2_le_log_spectral";
    case SuiteCheck::s_squared_vs_deg: return "s_squared_vs_deg";
    case SuiteCheck::vc_plus_depth: return "vc_plus_depth";
    case SuiteCheck::vc_plus_cert: return "vc_plus_cert";
    case SuiteCheck::two_vc_plus_s: return "two_vc_plus_s";
    case SuiteCheck::design_equivalence: return "design_equivalence";
  }
  return "?";
}

/// Heavy measures only run for dimensions the sampled/exhaustive suites can
/// afford; above these the corresponding checks are dropped with a note.
struct SuiteCaps {
  int certificate = 8;
  int decision_tree = 8;
};

inline std::vector<SuiteCheck> active_suite_checks(int n,
                                                   const SuiteCaps& caps) {
  std::vector<SuiteCheck> checks;
  for (SuiteCheck check : all_suite_checks) {
    if (check == SuiteCheck::vc_plus_cert && n > caps.certificate) continue;
    if (check == SuiteCheck::vc_plus_depth && n > caps.decision_tree) continue;
    checks.push_back(check);
  }
  return checks;
}

/// Evaluates every requested check on one non-zero function. Results are in
/// the order of `checks`.
inline std::vector<bool> evaluate_suite_checks(
    const BooleanFunction& f, const std::vector<SuiteCheck>& checks) {
  const int n = f.n();
  const SetFamily family = support(f);
  const int vc = vc_dimension(family).dimension;
  const FourierSpectrum spectrum = wht(f);
  const int deg = fourier_degree(spectrum);
  const int degf2 = f2_degree(f);
  const std::uint64_t supp = f.support_size();
  const std::uint64_t spec_supp = spectral_support_size(spectrum);
  const std::uint64_t cube = std::uint64_t{1} << n;

  MeasureCaps no_cap;
  no_cap.certificate = max_dimension;
  no_cap.decision_tree = max_dimension;

  std::vector<bool> results;
  results.reserve(checks.size());
  for (SuiteCheck check : checks) {
    bool holds = false;
    switch (check) {
      case SuiteCheck::vc_plus_deg:
        holds = vc + deg >= n;
        break;
      case SuiteCheck::vc_plus_degf2:
        holds = vc + degf2 >= n;
        break;
      case SuiteCheck::uncertainty:
        holds = supp * spec_supp >= cube;
        break;
      case SuiteCheck::sauer_shelah:
        holds = sauer_check(family);
        break;
      case SuiteCheck::schwartz_zippel:
        holds = (supp << deg) >= cube;
        break;
      case SuiteCheck::deg_ge_degf2:
        holds = deg >= degf2;
        break;
      case SuiteCheck::degf2_le_log_spectral:
        holds = (std::uint64_t{1} << degf2) <= spec_supp;
        break;
      case SuiteCheck::s_squared_vs_deg: {
        const int s = sensitivity(f);
        holds = static_cast<long long>(s) * s >= deg;
        break;
      }
      case SuiteCheck::vc_plus_depth:
        holds = vc + decision_tree_depth(f, no_cap) >= n;
        break;
      case SuiteCheck::vc_plus_cert:
        holds = vc + certificate_complexity(f, no_cap) >= n;
        break;
      case SuiteCheck::two_vc_plus_s:
        holds = 2 * vc + sensitivity(f) >= n;
        break;
      case SuiteCheck::design_equivalence: {
        holds = true;
        for (int d = 0; d <= n - 1 && holds; ++d) {
          const bool a = null_design_check_containment(family, d).holds;
          const bool b = null_design_check_trace(family, d).holds;
          const bool c = null_design_check_disjoint(family, d).holds;
          holds = (a == b) && (b == c);
        }
        break;
      }
    }
    results.push_back(holds);
  }
  return results;
}

struct SuiteCounterexample {
  std::string check;
  std::uint64_t index = 0;     // table index (exhaustive) or trial number
  std::string function_bft;    // reproducible encoding of the failing f
};

struct SuiteReport {
  enum class Mode { exhaustive, sampled };
  int n = 0;
  Mode mode = Mode::exhaustive;
  std::uint64_t trials = 0;
  std::vector<std::pair<std::string, std::uint64_t>> pass_counts;
  std::vector<std::string> notes;
  std::optional<SuiteCounterexample> first_counterexample;

  bool all_passed() const {
    for (const auto& [name, passes] : pass_counts)
      if (passes != trials) return false;
    return !first_counterexample.has_value();
  }
};

namespace detail {

/// Test hook: forces the named check's verdict to flip for one function,
/// letting the harness confirm that failures are located exactly.
struct VerdictFlip {
  std::uint64_t index = 0;
  std::string check;
};

struct SuitePartial {
  std::vector<std::uint64_t> passes;
  std::optional<SuiteCounterexample> first;
};

inline void merge_partials(SuiteReport& report,
                           std::vector<SuitePartial>& partials) {
  for (const SuitePartial& part : partials) {
    if (part.passes.empty()) continue;
    for (std::size_t i = 0; i < report.pass_counts.size(); ++i)
      report.pass_counts[i].second += part.passes[i];
    if (part.first &&
        (!report.first_counterexample ||
         part.first->index < report.first_counterexample->index))
      report.first_counterexample = part.first;
  }
}

inline SuiteReport verify_exhaustive_impl(
    int n, int threads, const std::optional<VerdictFlip>& flip) {
  if (n < 1 || n > census_max_dimension)
    throw dimension_cap_error("exhaustive verification supports n in [1, " +
                              std::to_string(census_max_dimension) + "]");
  const SuiteCaps caps;  // n <= 4 keeps every check active
  const std::vector<SuiteCheck> checks = active_suite_checks(n, caps);
  const std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);

  SuiteReport report;
  report.n = n;
  report.mode = SuiteReport::Mode::exhaustive;
  report.trials = total - 1;  // the zero function is skipped
  for (SuiteCheck check : checks)
    report.pass_counts.emplace_back(suite_check_name(check), 0);

  threads = clamp_threads(threads);
  std::vector<SuitePartial> partials(threads);
  run_partitioned(1, total, threads,
                  [&](int worker, std::uint64_t lo, std::uint64_t hi) {
                    SuitePartial& part = partials[worker];
                    part.passes.assign(checks.size(), 0);
                    for (std::uint64_t table = lo; table < hi; ++table) {
                      const BooleanFunction f =
                          BooleanFunction::from_packed(n, table);
                      std::vector<bool> results =
                          evaluate_suite_checks(f, checks);
                      for (std::size_t i = 0; i < checks.size(); ++i) {
                        bool holds = results[i];
                        if (flip && flip->index == table &&
                            flip->check == suite_check_name(checks[i]))
                          holds = !holds;
                        if (holds) {
                          ++part.passes[i];
                        } else if (!part.first || table < part.first->index) {
                          part.first = SuiteCounterexample{
                              suite_check_name(checks[i]), table,
                              format_bft(f)};
                        }
                      }
                    }
                  });
  merge_partials(report, partials);
  return report;
}

}  // namespace detail

/// Runs every inequality and the three-way design-condition equivalence on
/// all non-zero functions of dimension n. Thread partials merge by addition;
/// the reported counterexample is the one with the smallest table index.
inline SuiteReport verify_exhaustive(int n, int threads = 1) {
  return detail::verify_exhaustive_impl(n, threads, std::nullopt);
}

/// Same check set on sampled functions: `trials` density-1/2 tables plus
/// `trials` random bounded-degree polynomials (degree bound cycling over
/// 1..n). Fully determined by (n, trials, seed).
inline SuiteReport verify_sampled(int n, std::uint64_t trials,
                                  std::uint64_t seed, int threads = 1,
                                  const SuiteCaps& caps = {}) {
  check_dimension(n);
  const std::vector<SuiteCheck> checks = active_suite_checks(n, caps);

  SuiteReport report;
  report.n = n;
  report.mode = SuiteReport::Mode::sampled;
  report.trials = 2 * trials;
  for (SuiteCheck check : checks)
    report.pass_counts.emplace_back(suite_check_name(check), 0);
  if (n > caps.certificate)
    report.notes.push_back("vc_plus_cert skipped: n exceeds cap " +
                           std::to_string(caps.certificate));
  if (n > caps.decision_tree)
    report.notes.push_back("vc_plus_depth skipped: n exceeds cap " +
                           std::to_string(caps.decision_tree));
  if (trials == 0) return report;

  auto sample = [n, trials, seed](std::uint64_t trial) {
    if (trial < trials) {
      std::uint64_t s = seed + trial;
      BooleanFunction f = random_function(n, 0.5, s);
      while (f.is_zero()) f = random_function(n, 0.5, s += 0x9E3779B97F4A7C15ull);
      return f;
    }
    const std::uint64_t i = trial - trials;
    const int d = 1 + static_cast<int>(i % static_cast<std::uint64_t>(n));
    return random_low_f2_degree(n, d, seed + trials + i);
  };

  const int nthreads = detail::clamp_threads(threads);
  std::vector<detail::SuitePartial> partials(nthreads);
  detail::run_partitioned(
      0, 2 * trials, nthreads,
      [&](int worker, std::uint64_t lo, std::uint64_t hi) {
        detail::SuitePartial& part = partials[worker];
        part.passes.assign(checks.size(), 0);
        for (std::uint64_t trial = lo; trial < hi; ++trial) {
          const BooleanFunction f = sample(trial);
          std::vector<bool> results = evaluate_suite_checks(f, checks);
          for (std::size_t i = 0; i < checks.size(); ++i) {
            if (results[i]) {
              ++part.passes[i];
            } else if (!part.first || trial < part.first->index) {
              part.first = SuiteCounterexample{suite_check_name(checks[i]),
                                               trial, format_bft(f)};
            }
          }
        }
      });
  detail::merge_partials(report, partials);
  return report;
}

}  // namespace bfc
