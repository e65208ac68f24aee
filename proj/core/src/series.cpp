#include "omega/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "omega/orbits.hpp"

namespace omega {

namespace {

using std::int64_t;
using std::uint64_t;
using i128 = __int128;

int64_t mod_floor(i128 a, int64_t m) {
    int64_t v = int64_t(a % m);
    return v < 0 ? v + m : v;
}

int64_t phi_index(const PairContext& ctx, int64_t n, int64_t r) {
    return mod_floor(i128(ctx.s) * n + ctx.t, r);
}

void require_coprime(int64_t s, int64_t r, const char* who) {
    const int64_t g = std::gcd(((s % r) + r) % r, r);
    if (g != 1) {
        throw std::domain_error(std::string(who) + ": gcd(s, r) = " + std::to_string(g) +
                                ", expected 1");
    }
}

}  // namespace

PeriodicRationalFn PeriodicRationalFn::geometric() {
    PeriodicRationalFn f;
    f.period = 1;
    f.coeffs = {CycloElement::one(1)};
    ExponentMultiset unit(1);
    unit.add(0);
    f.provenance = std::vector<ExponentMultiset>{unit};
    return f;
}

PeriodicRationalFn apply_phi(const PairContext& ctx, const PeriodicRationalFn& f) {
    PeriodicRationalFn out;
    out.period = f.period;
    out.coeffs.reserve(f.coeffs.size());
    for (int64_t n = 0; n < f.period; ++n) {
        out.coeffs.push_back(f.coeffs[std::size_t(phi_index(ctx, n, f.period))]);
    }
    if (f.provenance) {
        std::vector<ExponentMultiset> prov;
        prov.reserve(f.coeffs.size());
        for (int64_t n = 0; n < f.period; ++n) {
            prov.push_back((*f.provenance)[std::size_t(phi_index(ctx, n, f.period))]);
        }
        out.provenance = std::move(prov);
    }
    return out;
}

PeriodicRationalFn make_F(int64_t s, int64_t t, int64_t r, int64_t n) {
    const auto orbit = affine_orbit(s, t, r, n);
    PeriodicRationalFn f;
    f.period = r;
    f.coeffs.assign(std::size_t(r), CycloElement::zero(r));
    auto prov = std::vector<ExponentMultiset>(std::size_t(r), ExponentMultiset(r));
    for (int64_t j : orbit) {
        f.coeffs[std::size_t(j)] = CycloElement::one(r);
        prov[std::size_t(j)].add(0);
    }
    f.provenance = std::move(prov);
    return f;
}

PeriodicRationalFn make_psi(int64_t s, int64_t t, int64_t r, int64_t n) {
    require_coprime(s, r, "make_psi");
    n = mod_floor(n, r);
    PeriodicRationalFn f;
    f.period = r;

    if (n == 0) {
        // psi_{s,t,r,0} is defined to be 1/(1-x); stored with period r.
        f.coeffs.assign(std::size_t(r), CycloElement::one(r));
        ExponentMultiset unit(r);
        unit.add(0);
        f.provenance = std::vector<ExponentMultiset>(std::size_t(r), unit);
        return f;
    }

    const int64_t ord = multiplicative_order(s, r);
    const int64_t sm = ((s % r) + r) % r;
    f.coeffs.reserve(std::size_t(r));
    std::vector<ExponentMultiset> prov;
    prov.reserve(std::size_t(r));
    for (int64_t m = 0; m < r; ++m) {
        ExponentMultiset ms(r);
        int64_t iterate = m;       // rho^{(j)}(m) by explicit iteration
        int64_t s_pow = 1 % r;     // s^j mod r
        int64_t beta = 0;          // beta(j) = 1 + s + ... + s^{j-1} scaled by t, mod r
        for (int64_t j = 1; j <= ord; ++j) {
            iterate = mod_floor(i128(sm) * iterate + t, r);
            beta = mod_floor(i128(s) * beta + t, r);
            s_pow = mod_floor(i128(s_pow) * sm, r);
            const int64_t closed = mod_floor(i128(s_pow) * m + beta, r);
            if (closed != iterate) {
                throw std::logic_error(
                    "make_psi: rho iteration disagrees with s^j*m + beta(j) at m = " +
                    std::to_string(m) + ", j = " + std::to_string(j));
            }
            ms.add(mod_floor(i128(n) * iterate, r));
        }
        f.coeffs.push_back(from_exponents(ms));
        prov.push_back(std::move(ms));
    }
    f.provenance = std::move(prov);
    return f;
}

FixedPointReport is_fixed_point(const PairContext& ctx, const PeriodicRationalFn& f) {
    FixedPointReport report;
    report.fixed = true;
    for (int64_t n = 0; n < f.period; ++n) {
        if (f.coeffs[std::size_t(n)] != f.coeffs[std::size_t(phi_index(ctx, n, f.period))]) {
            report.fixed = false;
            report.witness = n;
            break;
        }
    }
    if (f.provenance) {
        report.multiset_fixed = true;
        for (int64_t n = 0; n < f.period; ++n) {
            if ((*f.provenance)[std::size_t(n)] !=
                (*f.provenance)[std::size_t(phi_index(ctx, n, f.period))]) {
                report.multiset_fixed = false;
                report.multiset_witness = n;
                break;
            }
        }
    }
    return report;
}

Decomposition decompose_fixed(const PairContext& ctx, const PeriodicRationalFn& f) {
    const auto report = is_fixed_point(ctx, f);
    if (!report.fixed) {
        throw std::domain_error("decompose_fixed: not a fixed point; witness residue " +
                                std::to_string(*report.witness));
    }
    Decomposition d;
    d.r = f.period;
    const auto orbit_set = representatives(OrbitKind::affine, ctx.s, ctx.t, f.period);
    for (const auto& [rep, members] : orbit_set.orbits) {
        (void)members;
        d.reps.push_back(rep);
        d.coeffs.push_back(f.coeffs[std::size_t(rep)]);
    }
    PeriodicRationalFn rebuilt = reconstruct(ctx, d);
    if (!(rebuilt == f)) {
        throw std::logic_error("decompose_fixed: reconstruction failed to reproduce the input");
    }
    return d;
}

PeriodicRationalFn reconstruct(const PairContext& ctx, const Decomposition& d) {
    PeriodicRationalFn f;
    f.period = d.r;
    f.coeffs.assign(std::size_t(d.r), CycloElement::zero(d.r));
    for (std::size_t j = 0; j < d.reps.size(); ++j) {
        for (int64_t member : affine_orbit(ctx.s, ctx.t, d.r, d.reps[j])) {
            f.coeffs[std::size_t(member)] += d.coeffs[j];
        }
    }
    return f;
}

BasisMatrix basis_matrix(int64_t s, int64_t t, int64_t r, bool extended) {
    const PairContext ctx = make_pair_context(s, t);
    if (!is_distinguished(ctx, r).distinguished) {
        throw std::domain_error("basis_matrix: r = " + std::to_string(r) +
                                " is not distinguished w.r.t. (" + std::to_string(s) + "," +
                                std::to_string(t) + ")");
    }
    BasisMatrix m;
    m.s = s;
    m.t = t;
    m.r = r;
    m.extended = extended;

    if (extended) m.row_reps.push_back(0);
    for (int64_t rep : representatives(OrbitKind::multiplicative, s, 0, r).representatives()) {
        if (std::gcd(rep, r) == 1) m.row_reps.push_back(rep);
    }
    m.col_reps = representatives(OrbitKind::affine, s, t, r).representatives();

    for (int64_t n : m.row_reps) {
        const auto psi = make_psi(s, t, r, n);
        std::vector<CycloElement> row;
        std::vector<ExponentMultiset> row_ms;
        row.reserve(m.col_reps.size());
        row_ms.reserve(m.col_reps.size());
        for (int64_t rep : m.col_reps) {
            // Fixed points are orbit-constant, so reading the coefficient at
            // the representative is reading lambda_{ij}.
            row.push_back(psi.coeffs[std::size_t(rep)]);
            row_ms.push_back((*psi.provenance)[std::size_t(rep)]);
        }
        m.entries.push_back(std::move(row));
        m.entries_multiset.push_back(std::move(row_ms));
    }
    return m;
}

std::vector<std::vector<CycloElement>> invert_basis_matrix(const BasisMatrix& m) {
    const std::size_t n = m.entries.size();
    if (n == 0 || m.entries.front().size() != n) {
        throw std::domain_error("invert_basis_matrix: matrix is not square");
    }
    const int64_t r = m.r;
    auto work = m.entries;
    std::vector<std::vector<CycloElement>> inv(n,
                                               std::vector<CycloElement>(n, CycloElement::zero(r)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = CycloElement::one(r);

    for (std::size_t col = 0; col < n; ++col) {
        // deterministic pivot: first row (in order) with a nonzero entry
        std::size_t pivot = col;
        while (pivot < n && work[pivot][col].is_zero()) ++pivot;
        if (pivot == n) {
            throw std::domain_error("invert_basis_matrix: singular matrix at column " +
                                    std::to_string(col));
        }
        std::swap(work[pivot], work[col]);
        std::swap(inv[pivot], inv[col]);
        const CycloElement lead = work[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            work[col][j] /= lead;
            inv[col][j] /= lead;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || work[row][col].is_zero()) continue;
            const CycloElement factor = work[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                work[row][j] -= factor * work[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }

    // verify M * M^{-1} = I exactly
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            CycloElement acc = CycloElement::zero(r);
            for (std::size_t k = 0; k < n; ++k) acc += m.entries[i][k] * inv[k][j];
            const CycloElement expect = i == j ? CycloElement::one(r) : CycloElement::zero(r);
            if (!(acc == expect)) {
                throw std::logic_error("invert_basis_matrix: verification M*M^-1 != I");
            }
        }
    }
    return inv;
}

MPrimeReport check_mprime_conjecture(int64_t s, int64_t t, int64_t r) {
    const BasisMatrix m = basis_matrix(s, t, r, /*extended=*/true);
    const int64_t ord = multiplicative_order(s, r);
    MPrimeReport report;
    report.s = s;
    report.t = t;
    report.r = r;
    for (std::size_t i = 0; i < m.row_reps.size(); ++i) {
        for (std::size_t j = 0; j < m.col_reps.size(); ++j) {
            MPrimeCell cell;
            cell.row_rep = m.row_reps[i];
            cell.col_rep = m.col_reps[j];
            cell.actual = m.entries_multiset[i][j];

            const auto orbit = affine_orbit(s, t, r, m.col_reps[j]);
            const int64_t multiplicity = ord / int64_t(orbit.size());
            ExponentMultiset predicted(r);
            for (int64_t member : orbit) {
                predicted.add(mod_floor(i128(m.row_reps[i]) * member, r), multiplicity);
            }
            cell.predicted = predicted;

            if (cell.actual == cell.predicted) {
                cell.match = CellMatch::exact;
                ++report.exact_cells;
            } else if (cell.actual.normalized() == cell.predicted.normalized()) {
                cell.match = CellMatch::scaled;
                ++report.scaled_cells;
            } else if (cell.actual.support() == cell.predicted.support()) {
                cell.match = CellMatch::support_only;
                ++report.support_cells;
            } else {
                cell.match = CellMatch::mismatch;
                ++report.mismatch_cells;
            }
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

std::vector<CycloElement> psi_numerator(int64_t s, int64_t t, int64_t r, int64_t n) {
    require_coprime(s, r, "psi_numerator");
    n = mod_floor(n, r);
    const int64_t ord = multiplicative_order(s, r);

    // weights w^{n*beta(j)} and pole exponents n*s^j mod r, j = 1..ord
    std::vector<int64_t> weight_exp, pole_exp;
    int64_t s_pow = 1 % r, beta = 0;
    const int64_t sm = ((s % r) + r) % r;
    for (int64_t j = 1; j <= ord; ++j) {
        beta = mod_floor(i128(s) * beta + t, r);
        s_pow = mod_floor(i128(s_pow) * sm, r);
        weight_exp.push_back(mod_floor(i128(n) * beta, r));
        pole_exp.push_back(mod_floor(i128(n) * s_pow, r));
    }

    auto mul_linear = [&](std::vector<CycloElement> poly, int64_t e) {
        // poly *= (1 - w^e x)
        poly.push_back(CycloElement::zero(r));
        const CycloElement root = CycloElement::root_power(r, e);
        for (std::size_t i = poly.size(); i-- > 1;) {
            poly[i] -= root * poly[i - 1];
        }
        return poly;
    };

    std::vector<CycloElement> numerator(std::size_t(ord), CycloElement::zero(r));
    for (std::size_t j = 0; j < std::size_t(ord); ++j) {
        std::vector<CycloElement> term{CycloElement::root_power(r, weight_exp[j])};
        for (std::size_t i = 0; i < std::size_t(ord); ++i) {
            if (i == j) continue;
            term = mul_linear(std::move(term), pole_exp[i]);
        }
        for (std::size_t i = 0; i < term.size(); ++i) numerator[i] += term[i];
    }
    return numerator;
}

}  // namespace omega
