#pragma once

/**
 * @file modnt.hpp
 * @brief Exact modular and multiplicative number theory on 63-bit integers.
 *
 * All moduli are 64-bit signed with 128-bit intermediates; anything wider is
 * a domain error, never silent wraparound. Every function is a pure value
 * computation and safe to call from any number of threads.
 */

#include <cstdint>
#include <vector>

namespace omega {

/// One prime-power factor p^e of a factored integer.
struct PrimePower {
    std::int64_t prime = 0;
    int exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Complete prime factorization of a positive 63-bit integer.
///
/// Factors are sorted by strictly increasing prime and multiply back to
/// `value`; the factorization of 1 is empty.
struct Factorization {
    std::int64_t value = 1;
    std::vector<PrimePower> factors;

    bool contains(std::int64_t p) const;
    int exponent_of(std::int64_t p) const;
    /// Product of the distinct primes (the radical); 1 when value == 1.
    std::int64_t radical() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// base^exp mod m, for m >= 1.
std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t m);

/// (1 + s + ... + s^{k-1}) mod m in O(log k) modular steps, never forming
/// the (astronomically large) integer sum itself.
std::int64_t geometric_sum_mod(std::int64_t s, std::uint64_t k, std::int64_t m);

/// Least d >= 1 with s^d == 1 mod r. Requires gcd(s, r) = 1.
///
/// Computed by stripping primes from the group exponent of (Z/rZ)*, so large
/// r (up to ~10^9) is fine; no naive iteration.
std::int64_t multiplicative_order(std::int64_t s, std::int64_t r);

/// Largest j with p^j | m, for prime p and m >= 1.
int valuation(std::int64_t p, std::int64_t m);

/// Jacobi symbol (a/b) for odd b >= 1; 0 iff gcd(a, b) > 1.
int jacobi_symbol(std::int64_t a, std::int64_t b);

/// Deterministic Miller-Rabin, exact for every 63-bit input.
bool is_prime(std::int64_t n);

/// Factor 1 <= m < 2^63: trial division over a sieved prime table, then
/// Brent's rho with a deterministic seed sequence. The result is sorted and
/// therefore independent of the rho parameters that found it.
Factorization factorize(std::int64_t m);

}  // namespace omega
