#include "omega/cyclo.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "omega/modnt.hpp"

namespace omega {

namespace {

using std::int64_t;

int64_t mod_floor(int64_t a, int64_t m) {
    int64_t v = a % m;
    return v < 0 ? v + m : v;
}

// x^r - 1 divided exactly by a monic integer polynomial.
std::vector<mpz_class> exact_divide(std::vector<mpz_class> num,
                                    const std::vector<mpz_class>& den) {
    const std::size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<mpz_class> quot(dn - dd + 1);
    for (std::size_t i = dn + 1; i-- > dd;) {
        mpz_class c = num[i];  // den is monic
        quot[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (const auto& rem : num) {
        if (rem != 0) throw std::logic_error("cyclotomic_polynomial: non-exact division");
    }
    return quot;
}

const std::vector<mpz_class>& cyclo_poly_cached(int64_t r);

std::vector<mpz_class> compute_cyclo(int64_t r) {
    std::vector<mpz_class> num(std::size_t(r) + 1);
    num[0] = -1;
    num[std::size_t(r)] = 1;
    for (int64_t d = 1; d < r; ++d) {
        if (r % d == 0) num = exact_divide(std::move(num), cyclo_poly_cached(d));
    }
    return num;
}

const std::vector<mpz_class>& cyclo_poly_cached(int64_t r) {
    static std::map<int64_t, std::vector<mpz_class>> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(r);
        if (it != cache.end()) return it->second;
    }
    // compute outside the lock: the recursion re-enters for the divisors
    auto poly = compute_cyclo(r);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(r, std::move(poly)).first->second;
}

// Per-conductor context: phi(r) and Phi_r with rational coefficients, shared
// by every element of that conductor.
struct FieldContext {
    int64_t r;
    int64_t degree;
    std::vector<mpq_class> modulus;
};

const FieldContext& field_for(int64_t r) {
    if (r < 1 || r > 1000) {
        throw std::domain_error("CycloElement: conductor " + std::to_string(r) +
                                " outside [1, 1000]");
    }
    static std::map<int64_t, FieldContext> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(r);
    if (it == cache.end()) {
        FieldContext ctx;
        ctx.r = r;
        const auto& phi_poly = cyclo_poly_cached(r);
        ctx.degree = int64_t(phi_poly.size()) - 1;
        ctx.modulus.reserve(phi_poly.size());
        for (const auto& c : phi_poly) ctx.modulus.emplace_back(c);
        it = cache.emplace(r, std::move(ctx)).first;
    }
    return it->second;
}

// Reduce an arbitrary polynomial in w to the canonical basis of degree
// < phi(r): fold exponents mod r (w^r = 1 in the quotient), then take the
// remainder mod Phi_r.
std::vector<mpq_class> reduce_poly(const FieldContext& field, std::vector<mpq_class> poly) {
    const std::size_t r = std::size_t(field.r);
    if (poly.size() > r) {
        for (std::size_t i = poly.size(); i-- > r;) {
            poly[i - r] += poly[i];
            poly[i] = 0;
        }
        poly.resize(r);
    }
    const std::size_t deg = std::size_t(field.degree);
    for (std::size_t i = poly.size(); i-- > deg;) {
        mpq_class c = poly[i];
        if (c == 0) continue;
        poly[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * field.modulus[j];
    }
    poly.resize(deg);  // phi(r) >= 1 for every r >= 1
    for (auto& c : poly) c.canonicalize();
    return poly;
}

void require_same_conductor(const CycloElement& a, const CycloElement& b) {
    if (a.conductor() != b.conductor()) {
        throw std::domain_error("CycloElement: conductor mismatch (" +
                                std::to_string(a.conductor()) + " vs " +
                                std::to_string(b.conductor()) + ")");
    }
}

// Extended Euclid over Q[x]: returns u with u*b == gcd (a nonzero constant)
// modulo phi, from which b^{-1} = u/gcd.
std::vector<mpq_class> invert_mod_phi(const FieldContext& field,
                                      const std::vector<mpq_class>& b) {
    auto degree = [](const std::vector<mpq_class>& p) {
        for (std::size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return std::ptrdiff_t(i);
        return std::ptrdiff_t(-1);
    };
    std::vector<mpq_class> r0 = field.modulus, r1 = b;
    std::vector<mpq_class> u0(1, mpq_class(0)), u1(1, mpq_class(1));
    while (true) {
        const auto d1 = degree(r1);
        if (d1 < 0) throw std::logic_error("CycloElement: inversion hit a zero remainder");
        if (d1 == 0) break;
        // r0 = q*r1 + r2
        auto d0 = degree(r0);
        std::vector<mpq_class> quot(std::size_t(std::max<std::ptrdiff_t>(d0 - d1 + 1, 1)), 0);
        while (d0 >= d1) {
            mpq_class c = r0[std::size_t(d0)] / r1[std::size_t(d1)];
            quot[std::size_t(d0 - d1)] = c;
            for (std::ptrdiff_t j = 0; j <= d1; ++j)
                r0[std::size_t(d0 - d1 + j)] -= c * r1[std::size_t(j)];
            d0 = degree(r0);
        }
        // u2 = u0 - q*u1; the in-place division left the remainder in r0
        std::vector<mpq_class> u2 = u0;
        u2.resize(std::max(u2.size(), quot.size() + u1.size()), 0);
        for (std::size_t i = 0; i < quot.size(); ++i) {
            if (quot[i] == 0) continue;
            for (std::size_t j = 0; j < u1.size(); ++j) u2[i + j] -= quot[i] * u1[j];
        }
        std::swap(r0, r1);  // (r0, r1) <- (r1, remainder)
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    const mpq_class lead = r1[std::size_t(degree(r1))];
    for (auto& c : u1) c /= lead;
    return u1;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int64_t r) {
    if (r < 1 || r > 1000) {
        throw std::domain_error("cyclotomic_polynomial: r = " + std::to_string(r) +
                                " outside [1, 1000]");
    }
    return cyclo_poly_cached(r);
}

int64_t euler_phi(int64_t r) {
    int64_t phi = 1;
    for (const auto& [p, e] : factorize(r).factors) {
        phi *= p - 1;
        for (int i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

CycloElement CycloElement::zero(int64_t r) {
    const auto& field = field_for(r);
    return CycloElement(r, std::vector<mpq_class>(std::size_t(field.degree), mpq_class(0)));
}

CycloElement CycloElement::one(int64_t r) {
    return constant(r, mpq_class(1));
}

CycloElement CycloElement::constant(int64_t r, const mpq_class& value) {
    CycloElement e = zero(r);
    e.coeffs_[0] = value;
    e.coeffs_[0].canonicalize();
    return e;
}

CycloElement CycloElement::root_power(int64_t r, int64_t a) {
    const auto& field = field_for(r);
    std::vector<mpq_class> poly(std::size_t(mod_floor(a, r)) + 1, mpq_class(0));
    poly.back() = 1;
    return CycloElement(r, reduce_poly(field, std::move(poly)));
}

CycloElement CycloElement::from_polynomial(int64_t r, std::vector<mpq_class> poly) {
    const auto& field = field_for(r);
    if (poly.empty()) return zero(r);
    return CycloElement(r, reduce_poly(field, std::move(poly)));
}

bool CycloElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpq_class& c) { return c == 0; });
}

bool CycloElement::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const mpq_class& c) { return c == 0; });
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
    require_same_conductor(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) {
    require_same_conductor(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycloElement& CycloElement::operator*=(const CycloElement& rhs) {
    require_same_conductor(*this, rhs);
    const auto& field = field_for(conductor_);
    std::vector<mpq_class> prod(coeffs_.size() + rhs.coeffs_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = reduce_poly(field, std::move(prod));
    return *this;
}

CycloElement& CycloElement::operator/=(const CycloElement& rhs) {
    require_same_conductor(*this, rhs);
    if (rhs.is_zero()) throw std::domain_error("CycloElement: division by zero");
    const auto& field = field_for(conductor_);
    // Phi_r is irreducible over Q, so every nonzero element is invertible.
    CycloElement inv(conductor_, reduce_poly(field, invert_mod_phi(field, rhs.coeffs_)));
    return *this *= inv;
}

CycloElement CycloElement::operator-() const {
    CycloElement e = *this;
    for (auto& c : e.coeffs_) c = -c;
    return e;
}

CycloElement& CycloElement::scale(const mpq_class& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::string CycloElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const mpq_class& c = coeffs_[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        mpq_class mag = neg ? mpq_class(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "w";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

void ExponentMultiset::add(int64_t a, int64_t multiplicity) {
    if (r < 1) throw std::domain_error("ExponentMultiset: r must be >= 1");
    if (multiplicity <= 0) throw std::domain_error("ExponentMultiset: multiplicity must be > 0");
    counts[mod_floor(a, r)] += multiplicity;
}

int64_t ExponentMultiset::size() const {
    int64_t total = 0;
    for (const auto& [a, m] : counts) {
        (void)a;
        total += m;
    }
    return total;
}

std::vector<int64_t> ExponentMultiset::support() const {
    std::vector<int64_t> out;
    out.reserve(counts.size());
    for (const auto& [a, m] : counts) {
        (void)m;
        out.push_back(a);
    }
    return out;
}

ExponentMultiset ExponentMultiset::scaled(int64_t c) const {
    ExponentMultiset out(r);
    const int64_t cm = mod_floor(c, r);
    for (const auto& [a, m] : counts) out.counts[mod_floor(a * cm, r)] += m;
    return out;
}

ExponentMultiset ExponentMultiset::shifted(int64_t c) const {
    ExponentMultiset out(r);
    for (const auto& [a, m] : counts) out.counts[mod_floor(a + c, r)] += m;
    return out;
}

ExponentMultiset ExponentMultiset::normalized() const {
    int64_t g = 0;
    for (const auto& [a, m] : counts) {
        (void)a;
        g = std::gcd(g, m);
    }
    ExponentMultiset out(r);
    if (g == 0) return out;
    for (const auto& [a, m] : counts) out.counts[a] = m / g;
    return out;
}

std::string ExponentMultiset::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [a, m] : counts) {
        for (int64_t i = 0; i < m; ++i) {
            if (!first) os << ",";
            os << a;
            first = false;
        }
    }
    os << "}";
    return os.str();
}

std::string ExponentMultiset::support_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [a, m] : counts) {
        (void)m;
        if (!first) os << ",";
        os << a;
        first = false;
    }
    os << "}";
    return os.str();
}

CycloElement from_exponents(const ExponentMultiset& ms) {
    std::vector<mpq_class> poly(std::size_t(ms.r), mpq_class(0));
    for (const auto& [a, m] : ms.counts) poly[std::size_t(a)] += mpq_class(long(m));
    return CycloElement::from_polynomial(ms.r, std::move(poly));
}

}  // namespace omega
