#pragma once

/**
 * @file series.hpp
 * @brief Rational functions p(x)/(1-x^r) represented by their r periodic
 *        Taylor coefficients, the series operator phi_{s,t} sending
 *        sum a_n x^n to sum a_{sn+t} x^n, the two families psi (basis) and
 *        F (spanning) of its fixed points, the change-of-basis matrix M with
 *        its exponent-multiset view M', and the scaled-orbit checker.
 *
 * Every rational fixed point of phi_{s,t} has simple poles at roots of unity
 * and numerator degree below r, so the periodic form is fully general here.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "omega/cyclo.hpp"
#include "omega/distinguished.hpp"

namespace omega {

/// p(x)/(1-x^r) with deg p < r, stored as the r periodic Taylor coefficients
/// a_0..a_{r-1} (a_n = coeffs[n mod r]), each an exact cyclotomic number of
/// conductor r. When an element was built as a sum of roots of unity, the
/// exponent multisets ride along as provenance.
struct PeriodicRationalFn {
    std::int64_t period = 1;
    std::vector<CycloElement> coeffs;
    std::optional<std::vector<ExponentMultiset>> provenance;

    /// 1/(1-x): all-ones coefficients with period 1.
    static PeriodicRationalFn geometric();

    friend bool operator==(const PeriodicRationalFn& a, const PeriodicRationalFn& b) {
        return a.period == b.period && a.coeffs == b.coeffs;
    }
};

/// phi_{s,t} applied exactly: result coefficient b_n = a_{(s*n+t) mod r}.
PeriodicRationalFn apply_phi(const PairContext& ctx, const PeriodicRationalFn& f);

/// The orbit indicator F_{s,t,r,n} = (sum_{j in orbit} x^j)/(1-x^r).
PeriodicRationalFn make_F(std::int64_t s, std::int64_t t, std::int64_t r, std::int64_t n);

/// psi_{s,t,r,n}: coefficient a_m = sum_{j=1..ord_r(s)} w_r^{n * rho^{(j)}(m)}
/// where rho(m) = s*m + t mod r; built as an exponent multiset per residue,
/// with the closed form s^j*m + beta(j) checked against explicit iteration.
/// For n == 0 this is 1/(1-x), stored with period r as all-ones.
PeriodicRationalFn make_psi(std::int64_t s, std::int64_t t, std::int64_t r, std::int64_t n);

/// Verdict of the exact fixed-point test a_n == a_{(sn+t) mod r}, plus the
/// finer multiset-level test whenever provenance is present.
struct FixedPointReport {
    bool fixed = false;
    std::optional<std::int64_t> witness;  ///< first residue violating equality
    std::optional<bool> multiset_fixed;
    std::optional<std::int64_t> multiset_witness;
};

FixedPointReport is_fixed_point(const PairContext& ctx, const PeriodicRationalFn& f);

/// Coordinates of a fixed point over the spanning family: one coefficient per
/// affine-orbit representative.
struct Decomposition {
    std::int64_t r = 1;
    std::vector<std::int64_t> reps;
    std::vector<CycloElement> coeffs;
};

/// Read off the orbit-constant coefficients of a fixed point; throws (with a
/// witness residue) if f is not fixed. The reconstruction is re-checked to
/// reproduce f exactly before returning.
Decomposition decompose_fixed(const PairContext& ctx, const PeriodicRationalFn& f);

/// sum_j c_j * F_{s,t,r,m_j} for coefficients over orbit representatives.
PeriodicRationalFn reconstruct(const PairContext& ctx, const Decomposition& d);

/// The change-of-basis matrix M with lambda_{ij} defined by
/// psi_{s,t,r,n_i} = sum_j lambda_{ij} F_{s,t,r,m_j}, with the M' view that
/// keeps each entry as the multiset of root exponents it arose from.
/// Rows run over the coset representatives coprime to r; `extended` prepends
/// the n = 0 row (psi_0 = 1/(1-x) decomposes over every orbit with
/// coefficient 1), which is how the matrix is square.
struct BasisMatrix {
    std::int64_t s = 0, t = 0, r = 0;
    bool extended = true;
    std::vector<std::int64_t> row_reps;  ///< n_i
    std::vector<std::int64_t> col_reps;  ///< m_j (affine-orbit representatives)
    std::vector<std::vector<CycloElement>> entries;
    std::vector<std::vector<ExponentMultiset>> entries_multiset;
};

/// Requires r distinguished w.r.t. (s,t); throws a domain error otherwise.
BasisMatrix basis_matrix(std::int64_t s, std::int64_t t, std::int64_t r, bool extended = true);

/// Exact inverse over Q(w_r) by Gaussian elimination with first-nonzero-row
/// pivoting; M * M^{-1} is verified to be the identity before returning.
std::vector<std::vector<CycloElement>> invert_basis_matrix(const BasisMatrix& m);

/// How strongly an M' cell agrees with the scaled-orbit prediction
/// n_i * F_{m_j}: exact multisets, equal after dividing multiplicities by
/// their gcd, equal supports only, or nothing.
enum class CellMatch { exact, scaled, support_only, mismatch };

struct MPrimeCell {
    std::int64_t row_rep = 0, col_rep = 0;
    ExponentMultiset actual;
    ExponentMultiset predicted;
    CellMatch match = CellMatch::mismatch;
};

/// Per-cell comparison of M' against the scaled-orbit prediction, where each
/// orbit element carries multiplicity ord_r(s)/|F|. Reports only; this is the
/// open question, so nothing here asserts.
struct MPrimeReport {
    std::int64_t s = 0, t = 0, r = 0;
    std::vector<MPrimeCell> cells;
    int exact_cells = 0, scaled_cells = 0, support_cells = 0, mismatch_cells = 0;

    /// Every cell matched at least up to a uniform multiplicity factor.
    bool all_match() const { return support_cells == 0 && mismatch_cells == 0; }
};

MPrimeReport check_mprime_conjecture(std::int64_t s, std::int64_t t, std::int64_t r);

/// Numerator coefficients (ascending, degree < ord_r(s)) of
/// sum_{j=1..ord} w^{n*beta(j)} / (1 - w^{n*s^j} x) over the product
/// denominator: the partial-fraction route to psi, used to cross-check the
/// periodic construction and the first/last column observations.
std::vector<CycloElement> psi_numerator(std::int64_t s, std::int64_t t, std::int64_t r,
                                        std::int64_t n);

}  // namespace omega
