#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bfc/anf.hpp"
#include "bfc/boolean_function.hpp"
#include "bfc/spectral.hpp"
#include "bfc/vc.hpp"

namespace bfc {

struct MeasureCaps {
  int certificate = 10;
  int decision_tree = 12;
};

/// Number of single-bit flips at x that change f.
inline int sensitivity_at(const BooleanFunction& f, std::uint64_t x) {
  const bool base = f.value(x);
  int count = 0;
  for (int i = 0; i < f.n(); ++i)
    count += f.value(x ^ (std::uint64_t{1} << i)) != base;
  return count;
}

inline int sensitivity(const BooleanFunction& f) {
  int best = 0;
  const std::uint64_t size = f.table_size();
  for (std::uint64_t x = 0; x < size; ++x)
    best = std::max(best, sensitivity_at(f, x));
  return best;
}

namespace detail {

/// Does fixing the coordinates in p_mask to the values of x force f
/// constant? Scans the subcube of free coordinates, exiting at the first
/// disagreement.
inline bool is_certificate(const BooleanFunction& f, std::uint64_t x,
                           std::uint32_t p_mask) {
  const bool target = f.value(x);
  const std::uint32_t base = static_cast<std::uint32_t>(x) & p_mask;
  const std::uint32_t free = f.full_mask() & ~p_mask;
  std::uint32_t sub = free;
  for (;;) {
    if (f.value(base | sub) != target) return false;
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return true;
}

}  // namespace detail

/// Smallest variable set whose fixing at x makes f constant. Supersets of
/// certificates are certificates, so scanning by increasing size makes the
/// first hit the minimum.
inline int certificate_complexity_at(const BooleanFunction& f,
                                     std::uint64_t x) {
  int result = f.n();  // the full set always certifies
  for_each_mask_by_weight(f.n(), f.n(), [&](std::uint32_t p) {
    if (detail::is_certificate(f, x, p)) {
      result = popcount(std::uint64_t{p});
      return false;
    }
    return true;
  });
  return result;
}

inline int certificate_complexity(const BooleanFunction& f,
                                  const MeasureCaps& caps = {}) {
  if (f.n() > caps.certificate)
    throw dimension_cap_error("certificate complexity capped at n=" +
                              std::to_string(caps.certificate));
  int best = 0;
  const std::uint64_t size = f.table_size();
  for (std::uint64_t x = 0; x < size; ++x)
    best = std::max(best, certificate_complexity_at(f, x));
  return best;
}

namespace detail {

class DepthSolver {
public:
  explicit DepthSolver(const BooleanFunction& f) : f_(f) {}

  int depth() { return solve(0, 0); }

private:
  // Restriction key: coordinates in `fixed` are pinned to the bits of
  // `vals` (vals subseteq fixed); the rest are free.
  int solve(std::uint32_t fixed, std::uint32_t vals) {
    const std::uint64_t key =
        (static_cast<std::uint64_t>(fixed) << f_.n()) | vals;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::uint32_t free = f_.full_mask() & ~fixed;
    int result = 0;
    if (!constant_on(vals, free)) {
      result = std::numeric_limits<int>::max();
      for (std::uint32_t rest = free; rest != 0; rest &= rest - 1) {
        const std::uint32_t bit = rest & (~rest + 1);
        const int d0 = solve(fixed | bit, vals);
        const int d1 = solve(fixed | bit, vals | bit);
        result = std::min(result, 1 + std::max(d0, d1));
      }
    }
    memo_.emplace(key, result);
    return result;
  }

  bool constant_on(std::uint32_t base, std::uint32_t free) const {
    const bool first = f_.value(base | free);
    std::uint32_t sub = free;
    for (;;) {
      if (f_.value(base | sub) != first) return false;
      if (sub == 0) return true;
      sub = (sub - 1) & free;
    }
  }

  const BooleanFunction& f_;
  std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace detail

/// Depth of the shallowest decision tree: 0 for constants, otherwise
/// 1 + min over queried variables of the worse branch. Memoized over the at
/// most 3^n restrictions; the cache lives and dies with the call.
inline int decision_tree_depth(const BooleanFunction& f,
                               const MeasureCaps& caps = {}) {
  if (f.n() > caps.decision_tree)
    throw dimension_cap_error("decision-tree depth capped at n=" +
                              std::to_string(caps.decision_tree));
  return detail::DepthSolver(f).depth();
}

/// Statistics of the hypercube subgraph induced by a family: edges join
/// members differing in exactly one coordinate. density = edge_count /
/// vertex_count, kept as an exact pair.
struct GraphStats {
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  int min_degree = 0;

  std::uint64_t density_num() const { return edge_count; }
  std::uint64_t density_den() const { return vertex_count; }
  double density() const {
    return static_cast<double>(edge_count) / static_cast<double>(vertex_count);
  }
};

inline GraphStats one_inclusion_stats(const SetFamily& family) {
  if (family.empty())
    throw empty_family_error("one-inclusion graph of the empty family");
  BitWords membership = make_bit_words(family.n());
  for (std::uint32_t member : family.members())
    set_bit(membership, member, true);
  GraphStats stats;
  stats.vertex_count = family.size();
  stats.min_degree = family.n();
  for (std::uint32_t member : family.members()) {
    int degree = 0;
    for (int i = 0; i < family.n(); ++i) {
      const std::uint32_t neighbor = member ^ (std::uint32_t{1} << i);
      if (get_bit(membership, neighbor)) {
        ++degree;
        if (neighbor > member) ++stats.edge_count;
      }
    }
    stats.min_degree = std::min(stats.min_degree, degree);
  }
  return stats;
}

struct InequalityVerdict {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
  long long slack = 0;  // lhs - rhs
};

/// Measures plus the per-inequality verdicts. Measures above their caps are
/// left empty and listed in `skipped`, and inequalities needing them are
/// omitted; everything else is still reported.
struct TradeoffReport {
  int n = 0;
  std::optional<int> vc, deg, degf2, s, cert, depth;
  std::vector<InequalityVerdict> inequalities;
  std::vector<std::string> skipped;
};

namespace detail {

inline InequalityVerdict verdict(std::string name, long long lhs,
                                 long long rhs) {
  return InequalityVerdict{std::move(name), lhs, rhs, lhs >= rhs, lhs - rhs};
}

}  // namespace detail

inline TradeoffReport tradeoff_report(const BooleanFunction& f,
                                      const MeasureCaps& caps = {}) {
  if (f.is_zero())
    throw zero_function_error("trade-off report requires a non-zero function");
  TradeoffReport report;
  report.n = f.n();
  const int n = f.n();
  report.vc = vc_dimension(support(f)).dimension;
  report.deg = fourier_degree(f);
  report.degf2 = f2_degree(f);
  report.s = sensitivity(f);
  if (n <= caps.certificate)
    report.cert = certificate_complexity(f, caps);
  else
    report.skipped.push_back("certificate");
  if (n <= caps.decision_tree)
    report.depth = decision_tree_depth(f, caps);
  else
    report.skipped.push_back("decision_tree");

  auto& out = report.inequalities;
  out.push_back(detail::verdict("vc_plus_deg", *report.vc + *report.deg, n));
  out.push_back(
      detail::verdict("vc_plus_degf2", *report.vc + *report.degf2, n));
  if (report.depth)
    out.push_back(
        detail::verdict("vc_plus_depth", *report.vc + *report.depth, n));
  if (report.cert)
    out.push_back(
        detail::verdict("vc_plus_cert", *report.vc + *report.cert, n));
  out.push_back(
      detail::verdict("two_vc_plus_s", 2ll * *report.vc + *report.s, n));
  out.push_back(detail::verdict("s_squared_vs_deg",
                                static_cast<long long>(*report.s) * *report.s,
                                *report.deg));
  // The plain VC + s >= n comparison is reported as data; it is known to
  // fail for some functions and carries no expectation of holding.
  out.push_back(detail::verdict("vc_plus_s", *report.vc + *report.s, n));
  return report;
}

}  // namespace bfc
