#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bfc/boolean_function.hpp"

namespace bfc {

/// Proof that a family shatters t_mask: for every U subseteq t_mask there is
/// a member F with F & t_mask == U. Realizers are stored as (trace, member)
/// pairs, ascending by trace, one per submask of t_mask.
struct ShatterWitness {
  std::uint32_t t_mask = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> realizers;
};

/// Re-checks a witness against the family it claims to describe.
inline bool validate_witness(const SetFamily& family,
                             const ShatterWitness& witness) {
  const std::uint32_t t = witness.t_mask;
  const std::size_t expected = std::size_t{1} << popcount(t);
  if (witness.realizers.size() != expected) return false;
  std::int64_t last_trace = -1;
  for (const auto& [trace, member] : witness.realizers) {
    if (static_cast<std::int64_t>(trace) <= last_trace) return false;
    last_trace = trace;
    if ((trace & ~t) != 0) return false;
    if ((member & t) != trace) return false;
    if (!std::binary_search(family.members().begin(), family.members().end(),
                            member))
      return false;
  }
  return true;
}

/// Tests whether the family shatters t_mask. The realizer for each trace is
/// the smallest member achieving it, so witnesses are deterministic.
inline std::optional<ShatterWitness> is_shattered(const SetFamily& family,
                                                  std::uint32_t t_mask) {
  check_mask(t_mask, family.n(), "shattering candidate");
  const int k = popcount(t_mask);
  const std::uint32_t traces_needed = std::uint32_t{1} << k;
  // Realizer per compressed trace; members are scanned in ascending order, so
  // the first hit per trace is the smallest.
  std::vector<std::int64_t> realizer(traces_needed, -1);
  std::uint32_t found = 0;
  for (std::uint32_t member : family.members()) {
    const std::uint32_t idx = extract_bits(member & t_mask, t_mask);
    if (realizer[idx] < 0) {
      realizer[idx] = member;
      if (++found == traces_needed) break;
    }
  }
  if (found != traces_needed) return std::nullopt;
  ShatterWitness witness;
  witness.t_mask = t_mask;
  witness.realizers.reserve(traces_needed);
  for (std::uint32_t idx = 0; idx < traces_needed; ++idx)
    witness.realizers.emplace_back(deposit_bits(idx, t_mask),
                                   static_cast<std::uint32_t>(realizer[idx]));
  return witness;
}

struct VcResult {
  int dimension = 0;
  ShatterWitness witness;
};

/// VC-dimension with a witness for a largest shattered set.
///
/// Layered search: level k keeps the shattered k-sets; a (k+1)-set is a
/// candidate only if all its k-subsets were shattered (shattering is
/// downward closed). Candidates extend each shattered set past its highest
/// element, so every set is generated once; scanning in ascending mask order
/// makes the reported witness the numerically smallest at the top level.
inline VcResult vc_dimension(const SetFamily& family) {
  if (family.empty())
    throw empty_family_error("VC-dimension of the empty family");
  VcResult best;
  best.witness = *is_shattered(family, 0);  // empty set, realized by any member
  std::vector<std::uint32_t> shattered{0};
  for (int k = 1; k <= family.n(); ++k) {
    std::vector<std::uint32_t> candidates;
    std::unordered_set<std::uint32_t> prev(shattered.begin(), shattered.end());
    for (std::uint32_t t : shattered) {
      const int top = t == 0 ? -1 : 63 - std::countl_zero(std::uint64_t{t});
      for (int j = top + 1; j < family.n(); ++j) {
        const std::uint32_t cand = t | (std::uint32_t{1} << j);
        bool viable = true;
        for (std::uint32_t rest = cand; rest != 0 && viable;
             rest &= rest - 1) {
          const std::uint32_t low = rest & (~rest + 1);
          viable = prev.contains(cand & ~low);
        }
        if (viable) candidates.push_back(cand);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    std::vector<std::uint32_t> next;
    std::optional<ShatterWitness> level_witness;
    for (std::uint32_t cand : candidates) {
      if (auto witness = is_shattered(family, cand)) {
        if (!level_witness) level_witness = std::move(witness);
        next.push_back(cand);
      }
    }
    if (next.empty()) break;
    best.dimension = k;
    best.witness = std::move(*level_witness);
    shattered = std::move(next);
  }
  return best;
}

/// Outcome of one parity condition at order d. When the condition fails,
/// set_mask identifies the offending set; trace_mask is present only for the
/// intersection-count condition, naming the trace whose count is odd.
struct DesignViolation {
  std::uint32_t set_mask = 0;
  std::optional<std::uint32_t> trace_mask;
};

struct DesignCheckReport {
  int d = 0;
  bool holds = false;
  std::optional<DesignViolation> violation;
};

namespace detail {

/// Packed parity table over all masks: bit A = parity of #{F in family :
/// A subseteq F}. One superset transform of the membership indicator.
inline BitWords containment_parity_table(const SetFamily& family) {
  BitWords indicator = make_bit_words(family.n());
  for (std::uint32_t member : family.members()) flip_bit(indicator, member);
  superset_xor_transform(indicator, family.n());
  return indicator;
}

/// Packed parity table: bit Y = parity of #{F in family : F subseteq Y}.
inline BitWords subset_parity_table(const SetFamily& family) {
  BitWords indicator = make_bit_words(family.n());
  for (std::uint32_t member : family.members()) flip_bit(indicator, member);
  subset_xor_transform(indicator, family.n());
  return indicator;
}

}  // namespace detail

/// Condition: every containment count #{F : A subseteq F} with |A| <= d is
/// even. Reports the first odd A in (popcount, value) order.
inline DesignCheckReport null_design_check_containment(const SetFamily& family,
                                                       int d) {
  const BitWords parity = detail::containment_parity_table(family);
  DesignCheckReport report;
  report.d = d;
  report.holds = for_each_mask_by_weight(family.n(), d, [&](std::uint32_t a) {
    if (get_bit(parity, a)) {
      report.violation = DesignViolation{a, std::nullopt};
      return false;
    }
    return true;
  });
  return report;
}

/// Condition: for every S with |S| <= d and every T subseteq S, the count
/// #{F : F & S == T} is even. Reports the first odd (S, T).
inline DesignCheckReport null_design_check_trace(const SetFamily& family,
                                                 int d) {
  DesignCheckReport report;
  report.d = d;
  std::vector<std::uint8_t> parity;
  report.holds = for_each_mask_by_weight(family.n(), d, [&](std::uint32_t s) {
    const std::uint32_t traces = std::uint32_t{1} << popcount(s);
    parity.assign(traces, 0);
    for (std::uint32_t member : family.members())
      parity[extract_bits(member & s, s)] ^= 1;
    for (std::uint32_t idx = 0; idx < traces; ++idx) {
      if (parity[idx]) {
        report.violation = DesignViolation{s, deposit_bits(idx, s)};
        return false;
      }
    }
    return true;
  });
  return report;
}

/// Condition: every disjointness count #{F : F & S == 0} with |S| <= d is
/// even. Reports the first odd S.
inline DesignCheckReport null_design_check_disjoint(const SetFamily& family,
                                                    int d) {
  const BitWords parity = detail::subset_parity_table(family);
  const std::uint32_t full = (std::uint32_t{1} << family.n()) - 1;
  DesignCheckReport report;
  report.d = d;
  report.holds = for_each_mask_by_weight(family.n(), d, [&](std::uint32_t s) {
    // F & S == 0  <=>  F subseteq complement of S
    if (get_bit(parity, full & ~s)) {
      report.violation = DesignViolation{s, std::nullopt};
      return false;
    }
    return true;
  });
  return report;
}

/// Constructive shattered-set extraction for a support whose containment
/// counts are all even up to order d.
///
/// Let s be the largest order at which the parity condition still holds, so
/// some (s+1)-set S has an odd containment count. Restricted to S, every
/// trace count is then odd (mod-2 Moebius inversion of the containment
/// sums), so every subset of S appears as a trace. Taking T = the lowest
/// d+1 elements of S, each U subseteq T is realized by a member whose trace
/// on S is U together with S \ T.
inline ShatterWitness extract_shattered_from_design(const BooleanFunction& f,
                                                    int d) {
  const SetFamily family = support(f);
  if (family.empty())
    throw zero_function_error(
        "shattered-set extraction requires a non-zero function");
  if (d < 0 || d > f.n() - 1)
    throw precondition_error("order d=" + std::to_string(d) +
                             " outside [0, n-1]");
  const BitWords parity = detail::containment_parity_table(family);
  // Smallest weight with an odd containment count; a non-zero support always
  // has one since the parity table is an invertible image of the table.
  std::uint32_t s_mask = 0;
  bool found = false;
  for_each_mask_by_weight(f.n(), f.n(), [&](std::uint32_t a) {
    if (get_bit(parity, a)) {
      s_mask = a;
      found = true;
      return false;
    }
    return true;
  });
  if (!found || popcount(std::uint64_t{s_mask}) <= d) {
    if (!found)
      throw std::logic_error("non-zero support with all-even containments");
    throw precondition_error(
        "support is not a null design of order " + std::to_string(d) +
        "; containment count of mask " + std::to_string(s_mask) + " is odd");
  }

  // Keep the d+1 lowest elements of S.
  std::uint32_t t_mask = 0;
  std::uint32_t rest = s_mask;
  for (int taken = 0; taken < d + 1; ++taken) {
    const std::uint32_t low = rest & (~rest + 1);
    t_mask |= low;
    rest &= rest - 1;
  }

  ShatterWitness witness;
  witness.t_mask = t_mask;
  const std::uint32_t outside = s_mask & ~t_mask;
  const std::uint32_t traces = std::uint32_t{1} << (d + 1);
  witness.realizers.reserve(traces);
  for (std::uint32_t idx = 0; idx < traces; ++idx) {
    const std::uint32_t u = deposit_bits(idx, t_mask);
    const std::uint32_t wanted = u | outside;
    std::uint32_t member = 0;
    bool member_found = false;
    for (std::uint32_t candidate : family.members()) {
      if ((candidate & s_mask) == wanted) {
        member = candidate;
        member_found = true;
        break;
      }
    }
    if (!member_found)
      throw std::logic_error("trace " + std::to_string(wanted) +
                             " on the violating set is unrealized");
    witness.realizers.emplace_back(u, member);
  }
  if (!validate_witness(family, witness) || !is_shattered(family, t_mask))
    throw std::logic_error("extracted witness failed re-validation");
  return witness;
}

/// Exact binomial-sum size bound: |family| <= sum_{i<=VC} C(n, i).
inline bool sauer_check(const SetFamily& family) {
  if (family.empty())
    throw empty_family_error("size bound check on the empty family");
  const int d = vc_dimension(family).dimension;
  const int n = family.n();
  std::uint64_t bound = 0;
  std::uint64_t binom = 1;  // C(n, 0)
  for (int i = 0; i <= d; ++i) {
    bound += binom;
    binom = binom * static_cast<std::uint64_t>(n - i) /
            static_cast<std::uint64_t>(i + 1);
  }
  return family.size() <= bound;
}

}  // namespace bfc
