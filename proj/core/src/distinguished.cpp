#include "omega/distinguished.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace omega {

namespace {

using std::int64_t;
using std::uint64_t;
using i128 = __int128;

int64_t mod_floor(int64_t a, int64_t m) {
    int64_t v = a % m;
    return v < 0 ? v + m : v;
}

int64_t checked_mul(int64_t a, int64_t b, const char* who) {
    i128 p = i128(a) * i128(b);
    if (p >= i128(INT64_MAX) || p <= -i128(INT64_MAX)) {
        throw std::domain_error(std::string(who) + ": product " + std::to_string(a) + "*" +
                                std::to_string(b) + " exceeds the 63-bit modulus range");
    }
    return int64_t(p);
}

int64_t pow_checked(int64_t p, int e, const char* who) {
    int64_t v = 1;
    for (int i = 0; i < e; ++i) v = checked_mul(v, p, who);
    return v;
}

}  // namespace

PairContext make_pair_context(int64_t s, int64_t t) {
    if (s < 2) throw std::domain_error("make_pair_context: s must be >= 2");
    PairContext ctx;
    ctx.s = s;
    ctx.t = t;
    const int64_t d = std::gcd(s - 1, t < 0 ? -t : t);  // gcd(s-1, 0) = s-1
    ctx.g = d == 0 ? 1 : (s - 1) / d;
    ctx.g_factors = factorize(ctx.g);
    ctx.g_bar = ctx.g_factors.radical();
    ctx.outside_theorem_range = t < 1 || t > s - 2;
    return ctx;
}

DistinguishedVerdict is_distinguished(const PairContext& ctx, int64_t r) {
    if (r < 2) {
        throw std::domain_error("is_distinguished: r = " + std::to_string(r) +
                                " (the definition requires r >= 2)");
    }
    const int64_t shared = std::gcd(r, ctx.s);
    if (shared != 1) {
        throw std::domain_error("is_distinguished: gcd(r, s) = " + std::to_string(shared) +
                                " for r = " + std::to_string(r) + ", s = " +
                                std::to_string(ctx.s));
    }
    DistinguishedVerdict v;
    v.r = r;
    v.ord_r = multiplicative_order(ctx.s, r);
    v.ord_gr = multiplicative_order(ctx.s, checked_mul(ctx.g, r, "is_distinguished"));
    v.beta_mod_r =
        mod_floor(ctx.t, r) * i128(geometric_sum_mod(ctx.s, uint64_t(v.ord_r), r)) % r;
    const bool by_divisibility = v.beta_mod_r == 0;
    const bool by_orders = v.ord_r == v.ord_gr;
    if (by_divisibility != by_orders) {
        throw std::logic_error("is_distinguished: divisibility and order criteria disagree at r = " +
                               std::to_string(r) + " (s = " + std::to_string(ctx.s) +
                               ", t = " + std::to_string(ctx.t) + ")");
    }
    v.distinguished = by_divisibility;
    return v;
}

std::vector<int64_t> enumerate_distinguished(const PairContext& ctx, int64_t lo, int64_t hi,
                                             int jobs) {
    lo = std::max<int64_t>(lo, 2);
    if (lo > hi) return {};

    auto scan_block = [&ctx](int64_t a, int64_t b) {
        std::vector<int64_t> found;
        for (int64_t r = a; r <= b; ++r) {
            if (std::gcd(r, ctx.s) != 1) continue;
            if (is_distinguished(ctx, r).distinguished) found.push_back(r);
        }
        return found;
    };

    if (jobs <= 1) return scan_block(lo, hi);

    // Fixed-size blocks merged in index order keep the output identical to a
    // sequential scan no matter how many workers run.
    constexpr int64_t kBlock = 512;
    const int64_t nblocks = (hi - lo) / kBlock + 1;
    auto results = std::vector<std::vector<int64_t>>(std::size_t(nblocks));
    std::atomic<int64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (;;) {
                const int64_t i = next.fetch_add(1);
                if (i >= nblocks) return;
                const int64_t a = lo + i * kBlock;
                const int64_t b = std::min(hi, a + kBlock - 1);
                results[std::size_t(i)] = scan_block(a, b);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(nblocks);  // drain remaining blocks
        }
    };
    std::vector<std::thread> pool;
    const int nthreads = std::min<int64_t>(jobs, nblocks);
    pool.reserve(std::size_t(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    std::vector<int64_t> out;
    for (auto& block : results) out.insert(out.end(), block.begin(), block.end());
    return out;
}

namespace {

// nu_p(s^ord - 1) without forming s^ord: scan the powers p^j representable in
// 63 bits for the largest one with s^ord == 1 mod p^j.
int valuation_of_order_kernel(int64_t s, int64_t p, int64_t ord, int ell) {
    int j = ell;
    int64_t pj = pow_checked(p, ell, "order_growth_profile");
    for (;;) {
        if (pj > INT64_MAX / p) {
            throw std::domain_error(
                "order_growth_profile: nu_p(s^ord - 1) exceeds the 63-bit scan range");
        }
        pj *= p;
        if (mod_pow(s, uint64_t(ord), pj) != 1) return j - ell;
        ++j;
    }
}

}  // namespace

OrderGrowthProfile order_growth_profile(int64_t s, int64_t p, int max_ell) {
    if (!is_prime(p)) {
        throw std::domain_error("order_growth_profile: p = " + std::to_string(p) +
                                " is not prime");
    }
    if (s % p == 0) {
        throw std::domain_error("order_growth_profile: p = " + std::to_string(p) +
                                " divides s = " + std::to_string(s));
    }
    if (max_ell < 1) throw std::domain_error("order_growth_profile: max_ell must be >= 1");

    OrderGrowthProfile profile;
    profile.s = s;
    profile.p = p;

    // Orders up to max_ell + 1 (each lambda looks one level ahead).
    std::vector<int64_t> ords(std::size_t(max_ell) + 2, 0);
    int64_t pe = 1;
    for (int ell = 1; ell <= max_ell + 1; ++ell) {
        pe = checked_mul(pe, p, "order_growth_profile");
        ords[std::size_t(ell)] = multiplicative_order(s, pe);
    }
    for (int ell = 1; ell <= max_ell; ++ell) {
        OrderGrowthRow row;
        row.ell = ell;
        row.ord = ords[std::size_t(ell)];
        row.lambda = ords[std::size_t(ell) + 1] / ords[std::size_t(ell)];
        if (row.lambda != 1 && row.lambda != p) {
            throw std::logic_error("order_growth_profile: lambda outside {1, p} at ell = " +
                                   std::to_string(ell));
        }
        row.delta = valuation_of_order_kernel(s, p, row.ord, ell);
        profile.rows.push_back(row);
    }

    // alpha: scan past max_ell if necessary, stopping at the first witness
    // lambda(ell) = p with ell >= 2; the stabilization lemma makes every
    // later lambda equal p as well.
    auto ord_at = [&](int ell) {
        if (ell <= max_ell + 1) return ords[std::size_t(ell)];
        return multiplicative_order(s, pow_checked(p, ell, "order_growth_profile"));
    };
    int witness = 0;
    for (int ell = 2; witness == 0; ++ell) {
        if (ord_at(ell + 1) / ord_at(ell) == p) witness = ell;
    }
    profile.alpha = (witness == 2 && profile.rows[0].lambda == p) ? 1 : witness;
    return profile;
}

int ord_valuation_closed_form(int64_t s, int64_t p, int ell) {
    if (s < 2) throw std::domain_error("ord_valuation_closed_form: s must be >= 2");
    if (!is_prime(p)) {
        throw std::domain_error("ord_valuation_closed_form: p = " + std::to_string(p) +
                                " is not prime");
    }
    if ((s - 1) % p != 0) {
        throw std::domain_error("ord_valuation_closed_form: p = " + std::to_string(p) +
                                " does not divide s - 1 = " + std::to_string(s - 1) +
                                " (formula scope)");
    }
    if (ell < 1) throw std::domain_error("ord_valuation_closed_form: ell must be >= 1");
    if (p > 2) {
        const int v = valuation(p, s - 1);
        return ell <= v ? 0 : ell - v;
    }
    const int v1 = valuation(2, s - 1);
    const int v2 = v1 + valuation(2, s + 1);  // nu_2(s^2-1), overflow-free
    if (ell <= v1) return 0;
    if (ell <= v2) return 1;
    return 1 + ell - v2;
}

std::size_t MultiplesChart::index_of(const std::vector<int>& exponents) const {
    if (exponents.size() != bounds.size()) {
        throw std::domain_error("MultiplesChart: exponent tuple has wrong arity");
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        if (exponents[i] < 0 || exponents[i] > bounds[i]) {
            throw std::domain_error("MultiplesChart: exponent out of bounds");
        }
        idx = idx * std::size_t(bounds[i] + 1) + std::size_t(exponents[i]);
    }
    return idx;
}

bool MultiplesChart::at(const std::vector<int>& exponents) const {
    return values[index_of(exponents)];
}

MultiplesChart multiples_chart(const PairContext& ctx, int64_t k,
                               const std::vector<int>& bounds) {
    const int64_t gs = checked_mul(ctx.g, ctx.s, "multiples_chart");
    const int64_t shared = std::gcd(k, gs);
    if (k < 1 || shared != 1) {
        throw std::domain_error("multiples_chart: gcd(k, g*s) = " + std::to_string(shared) +
                                " for k = " + std::to_string(k) + ", expected 1");
    }
    const auto& primes = ctx.g_factors.factors;
    if (bounds.size() != primes.size()) {
        throw std::domain_error("multiples_chart: expected one bound per prime of g (" +
                                std::to_string(primes.size()) + ")");
    }

    MultiplesChart chart;
    chart.s = ctx.s;
    chart.t = ctx.t;
    chart.k = k;
    chart.bounds = bounds;
    for (const auto& f : primes) chart.primes.push_back(f.prime);

    const int64_t ord_k = multiplicative_order(ctx.s, k);
    const int nu2_s1 = ctx.s % 2 == 1 ? valuation(2, ctx.s - 1) : 0;
    const int nu2_s2 = ctx.s % 2 == 1 ? nu2_s1 + valuation(2, ctx.s + 1) : 0;

    std::size_t total = 1;
    for (int b : bounds) {
        if (b < 0) throw std::domain_error("multiples_chart: bounds must be >= 0");
        total *= std::size_t(b + 1);
    }
    chart.values.resize(total);

    std::vector<int> exps(primes.size(), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        // decode idx (row-major, same layout as index_of)
        std::size_t rem = idx;
        for (std::size_t i = primes.size(); i-- > 0;) {
            exps[i] = int(rem % std::size_t(bounds[i] + 1));
            rem /= std::size_t(bounds[i] + 1);
        }

        // Route 1: the per-prime structural conditions.
        bool structural = true;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            const int64_t p = primes[i].prime;
            const int j = primes[i].exponent;
            const int ti = exps[i];
            const bool c1 = j + ti <= valuation(p, ctx.s - 1);
            const bool c2 = p == 2 && nu2_s1 < ti && ti + j <= nu2_s2;
            bool c3 = false;
            if (!c1 && !c2) {
                const int64_t pe = pow_checked(p, ti + j, "multiples_chart");
                c3 = ord_k % multiplicative_order(ctx.s, pe) == 0;
            }
            if (!(c1 || c2 || c3)) {
                structural = false;
                break;
            }
        }

        // Route 2: the predicate itself.
        int64_t r = k;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            r = checked_mul(r, pow_checked(primes[i].prime, exps[i], "multiples_chart"),
                            "multiples_chart");
        }
        const bool direct = r >= 2 && is_distinguished(ctx, r).distinguished;

        if (structural != direct) {
            throw std::logic_error(
                "multiples_chart: structural conditions disagree with the predicate at r = " +
                std::to_string(r));
        }
        chart.values[idx] = direct;
    }
    return chart;
}

std::vector<int64_t> progression_members(const PairContext& ctx, int64_t r, int64_t b,
                                         int count) {
    if (count < 1) throw std::domain_error("progression_members: count must be >= 1");
    if (!is_distinguished(ctx, r).distinguished) {
        throw std::domain_error("progression_members: r = " + std::to_string(r) +
                                " is not distinguished w.r.t. (" + std::to_string(ctx.s) + "," +
                                std::to_string(ctx.t) + ")");
    }
    const int64_t gbar_s = checked_mul(ctx.g_bar, ctx.s, "progression_members");
    const int64_t shared = std::gcd(b, gbar_s);
    if (shared != 1) {
        throw std::domain_error("progression_members: gcd(b, g_bar*s) = " +
                                std::to_string(shared) + ", expected 1");
    }
    const int64_t step = checked_mul(gbar_s, r, "progression_members");
    const int64_t start = checked_mul(b, r, "progression_members");
    std::vector<int64_t> members;
    members.reserve(std::size_t(count));
    for (int m = 0; m < count; ++m) {
        i128 val = i128(start) + i128(step) * m;
        if (val >= INT64_MAX) {
            throw std::domain_error("progression_members: member exceeds the 63-bit range");
        }
        const int64_t member = int64_t(val);
        if (!is_distinguished(ctx, member).distinguished) {
            // Would falsify the progression theorem.
            throw std::logic_error("progression_members: member " + std::to_string(member) +
                                   " failed re-verification");
        }
        members.push_back(member);
    }
    return members;
}

TenFourteenReport check_10_14_mod_24(int64_t limit) {
    if (limit < 10) throw std::domain_error("check_10_14_mod_24: limit must be >= 10");
    TenFourteenReport report;
    report.limit = limit;
    const PairContext ctx = make_pair_context(3, 1);
    for (int64_t r = 10; r <= limit; r += 24) {
        ++report.checked_10;
        if (!is_distinguished(ctx, r).distinguished) report.not_distinguished.push_back(r);
        const int64_t k = (r - 10) / 24;
        ++report.jacobi_checked;
        if (jacobi_symbol(2 + 4 * k, 5 + 12 * k) != -1) report.jacobi_failures.push_back(k);
    }
    for (int64_t r = 14; r <= limit; r += 24) {
        ++report.checked_14;
        if (!is_distinguished(ctx, r).distinguished) report.not_distinguished.push_back(r);
    }
    std::sort(report.not_distinguished.begin(), report.not_distinguished.end());
    return report;
}

DescentReport descent_check(int64_t s, int64_t t, int64_t t_prime, int64_t limit) {
    DescentReport report;
    report.s = s;
    report.t = t;
    report.t_prime = t_prime;
    report.limit = limit;

    const PairContext ctx_t = make_pair_context(s, t);
    const int64_t gcd_t = std::gcd(s - 1, t < 0 ? -t : t);
    const int64_t gcd_tp = std::gcd(s - 1, t_prime < 0 ? -t_prime : t_prime);
    const PairContext ctx_descent = make_pair_context(s, gcd_t == 0 ? s - 1 : gcd_t);
    report.gcd_divides = gcd_tp == 0 ? gcd_t == 0 : (gcd_t == 0 ? false : gcd_tp % gcd_t == 0);
    const PairContext ctx_tp = make_pair_context(s, t_prime);

    for (int64_t r = 2; r <= limit; ++r) {
        if (std::gcd(r, s) != 1) continue;
        if (!is_distinguished(ctx_t, r).distinguished) continue;
        if (!is_distinguished(ctx_descent, r).distinguished)
            report.descent_violations.push_back(r);
        if (report.gcd_divides && !is_distinguished(ctx_tp, r).distinguished)
            report.t_prime_violations.push_back(r);
    }
    return report;
}

MinimalProgressionScan minimal_progression_scan(const PairContext& ctx, int64_t alpha,
                                                int64_t mu_bound, int depth) {
    if (depth < 1) throw std::domain_error("minimal_progression_scan: depth must be >= 1");
    if (mu_bound < 1) throw std::domain_error("minimal_progression_scan: mu_bound must be >= 1");
    if (!is_distinguished(ctx, alpha).distinguished) {
        throw std::domain_error("minimal_progression_scan: alpha = " + std::to_string(alpha) +
                                " is not distinguished");
    }
    MinimalProgressionScan scan;
    scan.alpha = alpha;
    scan.mu_bound = mu_bound;
    scan.depth = depth;
    for (int64_t mu = 1; mu <= mu_bound; ++mu) {
        bool all = true;
        for (int m = 1; m <= depth && all; ++m) {
            const int64_t member = checked_mul(mu, m, "minimal_progression_scan") + alpha;
            // members sharing a factor with s fall outside the predicate's
            // domain and disqualify the modulus
            if (std::gcd(member, ctx.s) != 1 || !is_distinguished(ctx, member).distinguished) {
                all = false;
            }
        }
        if (all) scan.candidates.push_back(mu);
    }
    return scan;
}

mpz_class beta_exact(int64_t s, int64_t t, uint64_t k) {
    if (s < 2) throw std::domain_error("beta_exact: s must be >= 2");
    const mpz_class base(static_cast<long>(s));
    const std::size_t digits_per_power = mpz_sizeinbase(base.get_mpz_t(), 10);
    if (k > 0 && k * digits_per_power > 10000) {
        throw std::domain_error("beta_exact: result would exceed ~10^4 digits; refusing");
    }
    mpz_class numerator;
    mpz_pow_ui(numerator.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k));
    numerator -= 1;
    mpz_class result = numerator / mpz_class(static_cast<long>(s - 1));
    return result * mpz_class(static_cast<long>(t));
}

}  // namespace omega
