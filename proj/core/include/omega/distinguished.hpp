#pragma once

/**
 * @file distinguished.hpp
 * @brief The distinguishedness predicate for integer pairs (s,t), enumeration
 *        of the distinguished set, order-growth profiles, closed-form order
 *        valuations, multiples charts, and arithmetic-progression generation.
 *
 * An integer r >= 2 coprime to s is distinguished with respect to (s,t) when
 * r divides t*(1 + s + ... + s^{ord_r(s)-1}). Equivalently, ord_r(s) =
 * ord_{gr}(s) with g = (s-1)/gcd(s-1,t). Every predicate here evaluates both
 * criteria and insists they agree.
 */

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "omega/modnt.hpp"

namespace omega {

/// The pair (s,t) with the derived quantities every criterion needs.
struct PairContext {
    std::int64_t s = 2;
    std::int64_t t = 1;
    std::int64_t g = 1;      ///< (s-1)/gcd(s-1,t)
    std::int64_t g_bar = 1;  ///< radical of g
    Factorization g_factors;
    /// Set when t falls outside 1 <= t <= s-2, the hypothesis of the basis
    /// theorem. The predicate itself is still well-defined.
    bool outside_theorem_range = false;
};

PairContext make_pair_context(std::int64_t s, std::int64_t t);

/// Full witness record for one distinguishedness query.
struct DistinguishedVerdict {
    std::int64_t r = 0;
    bool distinguished = false;
    std::int64_t ord_r = 0;       ///< ord_r(s)
    std::int64_t ord_gr = 0;      ///< ord_{gr}(s)
    std::int64_t beta_mod_r = 0;  ///< t*(1+s+...+s^{ord_r-1}) mod r
};

/// Decide whether r is distinguished w.r.t. ctx, computing the divisibility
/// criterion and the order-equality criterion independently and requiring
/// them to agree. Requires r >= 2 and gcd(r, s) = 1.
DistinguishedVerdict is_distinguished(const PairContext& ctx, std::int64_t r);

/// All distinguished r in [lo, hi], ascending. `jobs` > 1 shards the range
/// into fixed blocks processed in parallel; the output is identical to the
/// sequential result. lo > hi yields the empty list; lo is clamped to 2.
std::vector<std::int64_t> enumerate_distinguished(const PairContext& ctx, std::int64_t lo,
                                                  std::int64_t hi, int jobs = 1);

struct OrderGrowthRow {
    int ell = 0;
    std::int64_t ord = 0;     ///< ord_{p^ell}(s)
    std::int64_t lambda = 0;  ///< ord_{p^{ell+1}}(s) / ord_{p^ell}(s), always 1 or p
    int delta = 0;            ///< nu_p(s^{ord_{p^ell}(s)} - 1) - ell
};

/// How ord_{p^ell}(s) grows with ell, and the stabilization point alpha past
/// which every step multiplies the order by p.
struct OrderGrowthProfile {
    std::int64_t s = 0;
    std::int64_t p = 0;
    std::vector<OrderGrowthRow> rows;  ///< ell = 1..max_ell
    int alpha = 0;
};

OrderGrowthProfile order_growth_profile(std::int64_t s, std::int64_t p, int max_ell);

/// nu_p(ord_{p^ell}(s)) by the closed formula, valid for primes p | s-1:
/// for p > 2 it is max(0, ell - nu_p(s-1)); for p = 2 it is 0, 1, or
/// 1 + ell - nu_2(s^2-1) depending on where ell sits.
int ord_valuation_closed_form(std::int64_t s, std::int64_t p, int ell);

/// Grid of verdicts for p_1^{t_1}...p_n^{t_n} * k over all exponent tuples
/// with t_i <= bounds[i], where the p_i are the primes of g. Each entry is
/// computed both from the per-prime structural conditions and from the
/// direct predicate; any disagreement throws.
struct MultiplesChart {
    std::int64_t s = 0, t = 0, k = 0;
    std::vector<std::int64_t> primes;  ///< primes of g, ascending
    std::vector<int> bounds;           ///< inclusive exponent bound per prime
    std::vector<bool> values;          ///< row-major over exponent tuples

    std::size_t index_of(const std::vector<int>& exponents) const;
    bool at(const std::vector<int>& exponents) const;
};

MultiplesChart multiples_chart(const PairContext& ctx, std::int64_t k,
                               const std::vector<int>& bounds);

/// First `count` members b*r + m*(g_bar*r*s), m = 0..count-1, of the
/// arithmetic progression of distinguished integers through b*r. Every member
/// is re-verified; a counterexample throws std::logic_error since it would
/// falsify the progression theorem.
std::vector<std::int64_t> progression_members(const PairContext& ctx, std::int64_t r,
                                              std::int64_t b, int count);

/// Scan report for the residue classes 10 and 14 mod 24 under (3,1).
struct TenFourteenReport {
    std::int64_t limit = 0;
    std::int64_t checked_10 = 0;
    std::int64_t checked_14 = 0;
    std::int64_t jacobi_checked = 0;
    std::vector<std::int64_t> not_distinguished;  ///< expected empty
    std::vector<std::int64_t> jacobi_failures;    ///< offending k, expected empty

    bool ok() const { return not_distinguished.empty() && jacobi_failures.empty(); }
};

/// For every r <= limit with r == 10 or 14 mod 24: check r is
/// (3,1)-distinguished, and for r = 10+24k also that (2+4k / 5+12k) = -1.
TenFourteenReport check_10_14_mod_24(std::int64_t limit);

/// Scan report for the containment Omega(s,t) within Omega(s,gcd(t,s-1)) and,
/// when gcd(s-1,t) | gcd(s-1,t'), within Omega(s,t').
struct DescentReport {
    std::int64_t s = 0, t = 0, t_prime = 0, limit = 0;
    bool gcd_divides = false;  ///< gcd(s-1,t) | gcd(s-1,t')
    std::vector<std::int64_t> descent_violations;
    std::vector<std::int64_t> t_prime_violations;

    bool ok() const { return descent_violations.empty() && t_prime_violations.empty(); }
};

DescentReport descent_check(std::int64_t s, std::int64_t t, std::int64_t t_prime,
                            std::int64_t limit);

/// Exploratory search for progression moduli through a distinguished alpha.
/// A mu is a candidate when alpha + mu*m stayed distinguished for every
/// m = 1..depth that the predicate accepts; nothing beyond the scan depth is
/// claimed. The guaranteed modulus g_bar*alpha*s is always a candidate.
struct MinimalProgressionScan {
    std::int64_t alpha = 0;
    std::int64_t mu_bound = 0;
    int depth = 0;
    std::vector<std::int64_t> candidates;  ///< ascending; first entry is minimal
};

MinimalProgressionScan minimal_progression_scan(const PairContext& ctx, std::int64_t alpha,
                                                std::int64_t mu_bound, int depth);

/// The exact integer t*(s^k-1)/(s-1), for display only. Throws once the
/// result would exceed ~10^4 decimal digits.
mpz_class beta_exact(std::int64_t s, std::int64_t t, std::uint64_t k);

}  // namespace omega
