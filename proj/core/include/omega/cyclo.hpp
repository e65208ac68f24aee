#pragma once

/**
 * @file cyclo.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(w_r), w_r = e^{2*pi*i/r}.
 *
 * Elements are kept canonically reduced modulo the r-th cyclotomic polynomial
 * with arbitrary-precision rational coefficients, so equality is plain
 * coefficient comparison. Alongside the canonical form, an exponent multiset
 * records how an element arose as a sum of roots of unity; the multiset view
 * is strictly finer than field equality and both are exposed.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace omega {

/// Phi_r as integer coefficients, ascending degree, monic, for 1 <= r <= 10^3.
/// Computed by dividing x^r - 1 by the Phi_d of the proper divisors d.
std::vector<mpz_class> cyclotomic_polynomial(std::int64_t r);

/// Euler phi via factorization.
std::int64_t euler_phi(std::int64_t r);

/// An element of Q(w_r), reduced mod Phi_r: a polynomial in w_r of degree
/// < phi(r) with exact rational coefficients.
class CycloElement {
  public:
    CycloElement() : conductor_(1), coeffs_(1, mpq_class(0)) {}

    static CycloElement zero(std::int64_t r);
    static CycloElement one(std::int64_t r);
    static CycloElement constant(std::int64_t r, const mpq_class& value);
    /// w_r^a (a reduced mod r).
    static CycloElement root_power(std::int64_t r, std::int64_t a);
    /// From an arbitrary-length coefficient vector in powers of w_r; reduced.
    static CycloElement from_polynomial(std::int64_t r, std::vector<mpq_class> poly);

    std::int64_t conductor() const { return conductor_; }
    const std::vector<mpq_class>& coefficients() const { return coeffs_; }
    bool is_zero() const;
    bool is_rational() const;
    /// The coefficient of w^0 (the full value if is_rational()).
    const mpq_class& rational_part() const { return coeffs_[0]; }

    CycloElement& operator+=(const CycloElement& rhs);
    CycloElement& operator-=(const CycloElement& rhs);
    CycloElement& operator*=(const CycloElement& rhs);
    CycloElement& operator/=(const CycloElement& rhs);
    CycloElement operator-() const;

    friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
    friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
    friend CycloElement operator*(CycloElement a, const CycloElement& b) { return a *= b; }
    friend CycloElement operator/(CycloElement a, const CycloElement& b) { return a /= b; }
    friend bool operator==(const CycloElement&, const CycloElement&) = default;

    CycloElement& scale(const mpq_class& c);

    /// "1 - 1/2*w^3 + w^5" in the canonical power basis.
    std::string to_string() const;

  private:
    CycloElement(std::int64_t r, std::vector<mpq_class> reduced)
        : conductor_(r), coeffs_(std::move(reduced)) {}

    std::int64_t conductor_;
    std::vector<mpq_class> coeffs_;
};

/// A multiset of residues a mod r, standing for the formal sum of w_r^a with
/// multiplicities. Conversion to CycloElement is additive.
struct ExponentMultiset {
    std::int64_t r = 1;
    std::map<std::int64_t, std::int64_t> counts;  ///< residue -> multiplicity >= 1

    ExponentMultiset() = default;
    explicit ExponentMultiset(std::int64_t conductor) : r(conductor) {}

    void add(std::int64_t a, std::int64_t multiplicity = 1);
    std::int64_t size() const;  ///< total multiplicity
    std::vector<std::int64_t> support() const;
    /// Residues multiplied by c mod r (multiplicities merge, e.g. scaling by 0).
    ExponentMultiset scaled(std::int64_t c) const;
    /// Residues shifted by +c mod r.
    ExponentMultiset shifted(std::int64_t c) const;
    /// Multiplicities divided by their gcd.
    ExponentMultiset normalized() const;

    friend bool operator==(const ExponentMultiset&, const ExponentMultiset&) = default;

    /// Brace form with repeats: "{0,1,4}", "{6,6,6}".
    std::string to_string() const;
    /// Brace form of the support only: "{6}".
    std::string support_string() const;
};

/// Sum of multiplicity * w_r^a over the multiset, canonically reduced.
CycloElement from_exponents(const ExponentMultiset& ms);

}  // namespace omega
