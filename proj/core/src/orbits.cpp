#include "omega/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace omega {

namespace {

using std::int64_t;
using i128 = __int128;

int64_t mod_floor(i128 a, int64_t m) {
    int64_t v = int64_t(a % m);
    return v < 0 ? v + m : v;
}

void require_coprime(int64_t s, int64_t r, const char* who) {
    if (r < 1) throw std::domain_error(std::string(who) + ": r must be >= 1");
    const int64_t g = std::gcd(((s % r) + r) % r, r);
    if (g != 1) {
        throw std::domain_error(std::string(who) + ": gcd(s, r) = " + std::to_string(g) +
                                ", expected 1");
    }
}

std::vector<int64_t> cycle_of(int64_t start, auto step) {
    std::vector<int64_t> members{start};
    for (int64_t x = step(start); x != start; x = step(x)) members.push_back(x);
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

std::vector<int64_t> OrbitSet::representatives() const {
    std::vector<int64_t> reps;
    reps.reserve(orbits.size());
    for (const auto& [rep, members] : orbits) {
        (void)members;
        reps.push_back(rep);
    }
    return reps;
}

std::vector<int64_t> cyclotomic_coset(int64_t s, int64_t r, int64_t n) {
    require_coprime(s, r, "cyclotomic_coset");
    const int64_t sm = ((s % r) + r) % r;
    return cycle_of(mod_floor(n, r), [&](int64_t x) { return mod_floor(i128(sm) * x, r); });
}

std::vector<int64_t> affine_orbit(int64_t s, int64_t t, int64_t r, int64_t n) {
    require_coprime(s, r, "affine_orbit");
    const int64_t sm = ((s % r) + r) % r;
    const int64_t tm = mod_floor(t, r);
    return cycle_of(mod_floor(n, r),
                    [&](int64_t x) { return mod_floor(i128(sm) * x + tm, r); });
}

OrbitSet representatives(OrbitKind kind, int64_t s, int64_t t, int64_t r) {
    require_coprime(s, r, "representatives");
    OrbitSet set;
    set.r = r;
    set.kind = kind;
    set.s = s;
    set.t = kind == OrbitKind::affine ? t : 0;
    set.rep_of.assign(std::size_t(r), -1);
    for (int64_t n = 0; n < r; ++n) {
        if (set.rep_of[std::size_t(n)] >= 0) continue;
        auto members = kind == OrbitKind::affine ? affine_orbit(s, t, r, n)
                                                 : cyclotomic_coset(s, r, n);
        const int64_t rep = members.front();  // least element: n is the first unseen
        for (int64_t m : members) set.rep_of[std::size_t(m)] = rep;
        set.orbits.emplace(rep, std::move(members));
    }
    return set;
}

}  // namespace omega
