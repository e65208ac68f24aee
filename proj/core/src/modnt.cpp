#include "omega/modnt.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace omega {

namespace {

using std::int64_t;
using std::uint64_t;
using u128 = unsigned __int128;

int64_t mod_floor(int64_t a, int64_t m) {
    int64_t v = a % m;
    return v < 0 ? v + m : v;
}

int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
    return static_cast<int64_t>(u128(a) * u128(b) % u128(m));
}

int64_t add_mod(int64_t a, int64_t b, int64_t m) {
    int64_t v = a + b;  // both in [0, m), m < 2^63 => no overflow past 2^64
    return v >= m ? v - m : v;
}

void require_modulus(int64_t m, const char* who) {
    if (m < 1) {
        throw std::domain_error(std::string(who) + ": modulus must be >= 1, got " +
                                std::to_string(m));
    }
}

// {sum, power} = {1 + s + ... + s^{k-1} mod m, s^k mod m}
std::pair<int64_t, int64_t> geometric_pair(int64_t s, uint64_t k, int64_t m) {
    if (k == 0) return {0, 1 % m};
    if (k & 1) {
        auto [sum, pw] = geometric_pair(s, k - 1, m);
        return {add_mod(sum, pw, m), mul_mod(pw, s, m)};
    }
    auto [sum, pw] = geometric_pair(s, k / 2, m);
    return {mul_mod(sum, add_mod(1 % m, pw, m), m), mul_mod(pw, pw, m)};
}

uint64_t mul_mod_u(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(u128(a) * u128(b) % u128(m));
}

uint64_t pow_mod_u(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod_u(r, b, m);
        b = mul_mod_u(b, b, m);
        e >>= 1;
    }
    return r;
}

// Sieved primes up to 2^16; enough trial division to leave any 63-bit
// composite cofactor with both prime factors above the sieve bound.
const std::vector<int32_t>& small_primes() {
    static const std::vector<int32_t> primes = [] {
        constexpr int bound = 1 << 16;
        std::vector<bool> sieve(bound, true);
        std::vector<int32_t> out;
        for (int i = 2; i < bound; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (int j = 2 * i; j < bound; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Brent's cycle-finding rho. Deterministic: the polynomial increment and the
// starting point are derived from (n, attempt) via splitmix64.
uint64_t pollard_brent(uint64_t n, int attempt) {
    const uint64_t c = splitmix64(n ^ uint64_t(attempt)) % (n - 1) + 1;
    uint64_t y = splitmix64(n + uint64_t(attempt) * 0x9e3779b97f4a7c15ULL) % (n - 2) + 2;
    uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto f = [&](uint64_t v) { return (mul_mod_u(v, v, n) + c) % n; };
    while (g == 1) {
        x = y;
        for (uint64_t i = 0; i < r; ++i) y = f(y);
        for (uint64_t k = 0; k < r && g == 1; k += 128) {
            ys = y;
            const uint64_t lim = std::min<uint64_t>(128, r - k);
            for (uint64_t i = 0; i < lim; ++i) {
                y = f(y);
                q = mul_mod_u(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void factor_recursive(uint64_t n, std::vector<int64_t>& out) {
    if (n == 1) return;
    if (is_prime(static_cast<int64_t>(n))) {
        out.push_back(static_cast<int64_t>(n));
        return;
    }
    uint64_t d = n;
    for (int attempt = 0; d == n; ++attempt) d = pollard_brent(n, attempt);
    factor_recursive(d, out);
    factor_recursive(n / d, out);
}

}  // namespace

bool Factorization::contains(int64_t p) const {
    return exponent_of(p) > 0;
}

int Factorization::exponent_of(int64_t p) const {
    for (const auto& f : factors)
        if (f.prime == p) return f.exponent;
    return 0;
}

int64_t Factorization::radical() const {
    int64_t rad = 1;
    for (const auto& f : factors) rad *= f.prime;
    return rad;
}

int64_t mod_pow(int64_t base, uint64_t exp, int64_t m) {
    require_modulus(m, "mod_pow");
    int64_t b = mod_floor(base, m);
    int64_t r = 1 % m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return r;
}

int64_t geometric_sum_mod(int64_t s, uint64_t k, int64_t m) {
    require_modulus(m, "geometric_sum_mod");
    return geometric_pair(mod_floor(s, m), k, m).first;
}

int64_t multiplicative_order(int64_t s, int64_t r) {
    if (r < 1) throw std::domain_error("multiplicative_order: r must be >= 1");
    if (r == 1) return 1;
    const int64_t sm = mod_floor(s, r);
    const int64_t g = std::gcd(sm, r);
    if (g != 1) {
        throw std::domain_error("multiplicative_order: gcd(s, r) = " + std::to_string(g) +
                                ", expected 1 (s = " + std::to_string(s) +
                                ", r = " + std::to_string(r) + ")");
    }
    // Group exponent lambda(r): the order divides it.
    int64_t lambda = 1;
    for (const auto& [p, e] : factorize(r).factors) {
        int64_t lp;
        if (p == 2) {
            lp = e == 1 ? 1 : e == 2 ? 2 : int64_t(1) << (e - 2);
        } else {
            lp = p - 1;
            for (int i = 1; i < e; ++i) lp *= p;
        }
        lambda = std::lcm(lambda, lp);
    }
    int64_t d = lambda;
    for (const auto& [q, e] : factorize(lambda).factors) {
        (void)e;
        while (d % q == 0 && mod_pow(sm, uint64_t(d / q), r) == 1) d /= q;
    }
    return d;
}

int valuation(int64_t p, int64_t m) {
    if (p < 2 || !is_prime(p))
        throw std::domain_error("valuation: p = " + std::to_string(p) + " is not prime");
    if (m < 1)
        throw std::domain_error("valuation: m must be >= 1 (valuation of 0 is infinite)");
    int j = 0;
    while (m % p == 0) {
        m /= p;
        ++j;
    }
    return j;
}

int jacobi_symbol(int64_t a, int64_t b) {
    if (b < 1 || b % 2 == 0)
        throw std::domain_error("jacobi_symbol: b = " + std::to_string(b) +
                                " must be odd and positive");
    int sign = 1;
    uint64_t ua;
    if (a < 0) {
        // (-1/b) supplement: (-1/b) = (-1)^{(b-1)/2}.
        if (b % 4 == 3) sign = -sign;
        ua = (a == INT64_MIN ? (uint64_t(1) << 63) : uint64_t(-a)) % uint64_t(b);
    } else {
        ua = uint64_t(a) % uint64_t(b);
    }
    uint64_t ub = uint64_t(b);
    while (ua != 0) {
        while (ua % 2 == 0) {
            ua /= 2;
            const uint64_t m8 = ub % 8;
            if (m8 == 3 || m8 == 5) sign = -sign;
        }
        std::swap(ua, ub);
        if (ua % 4 == 3 && ub % 4 == 3) sign = -sign;
        ua %= ub;
    }
    return ub == 1 ? sign : 0;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    const uint64_t un = uint64_t(n);
    uint64_t d = un - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // These twelve bases decide primality for everything below 3.3 * 10^24.
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        uint64_t x = pow_mod_u(a, d, un);
        if (x == 1 || x == un - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod_u(x, x, un);
            if (x == un - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Factorization factorize(int64_t m) {
    if (m < 1) throw std::domain_error("factorize: m must be >= 1");
    Factorization out;
    out.value = m;
    uint64_t n = uint64_t(m);
    std::vector<int64_t> primes;
    for (int32_t p : small_primes()) {
        if (uint64_t(p) * uint64_t(p) > n) break;
        while (n % uint64_t(p) == 0) {
            n /= uint64_t(p);
            primes.push_back(p);
        }
    }
    factor_recursive(n, primes);
    std::sort(primes.begin(), primes.end());
    for (int64_t p : primes) {
        if (!out.factors.empty() && out.factors.back().prime == p) {
            ++out.factors.back().exponent;
        } else {
            out.factors.push_back({p, 1});
        }
    }
    return out;
}

}  // namespace omega
