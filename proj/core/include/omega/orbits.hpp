#pragma once

/**
 * @file orbits.hpp
 * @brief Cyclotomic cosets (orbits of n -> s*n mod r) and affine orbits
 *        (n -> s*n + t mod r), with least-element representative systems.
 */

#include <cstdint>
#include <map>
#include <vector>

namespace omega {

enum class OrbitKind { multiplicative, affine };

/// A partition of {0, ..., r-1} into orbits of the generating map, keyed by
/// the least element of each orbit.
struct OrbitSet {
    std::int64_t r = 1;
    OrbitKind kind = OrbitKind::multiplicative;
    std::int64_t s = 0;
    std::int64_t t = 0;  ///< 0 for multiplicative orbits
    std::map<std::int64_t, std::vector<std::int64_t>> orbits;
    std::vector<std::int64_t> rep_of;  ///< residue -> its representative

    std::vector<std::int64_t> representatives() const;
};

/// The s-cyclotomic coset {s^i * n mod r : i in Z}, sorted. gcd(s,r) = 1.
std::vector<std::int64_t> cyclotomic_coset(std::int64_t s, std::int64_t r, std::int64_t n);

/// The orbit of n under n -> s*n + t mod r (a bijection, so the forward
/// iteration closes into the full cycle), sorted. gcd(s,r) = 1.
std::vector<std::int64_t> affine_orbit(std::int64_t s, std::int64_t t, std::int64_t r,
                                       std::int64_t n);

/// The full partition of {0,...,r-1}; t is ignored for multiplicative kind.
OrbitSet representatives(OrbitKind kind, std::int64_t s, std::int64_t t, std::int64_t r);

}  // namespace omega
