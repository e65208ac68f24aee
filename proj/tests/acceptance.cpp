// Acceptance suite: every criterion prints exactly one PASS/FAIL line.
// Exact arithmetic throughout; tolerance is zero unless a runtime budget is
// part of the criterion.

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "omega/cyclo.hpp"
#include "omega/distinguished.hpp"
#include "omega/modnt.hpp"
#include "omega/orbits.hpp"
#include "omega/series.hpp"
#include "oracles.hpp"

using namespace omega;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::int64_t> load_table_fixture() {
    std::ifstream in(std::string(OMEGA_FIXTURE_DIR) + "/table_3_1_204.txt");
    std::vector<std::int64_t> values;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        values.push_back(std::stoll(line));
    }
    return values;
}

void criterion_1_table() {
    const auto start = std::chrono::steady_clock::now();
    const auto ctx = make_pair_context(3, 1);
    const auto enumerated = enumerate_distinguished(ctx, 2, 204);
    const double elapsed = seconds_since(start);

    auto fixture = load_table_fixture();  // shaded cells incl. the convention cell 1
    std::vector<std::int64_t> expected;
    for (auto v : fixture) {
        if (v >= 2) expected.push_back(v);
    }
    const bool sets_equal = enumerated == expected;
    const bool count_ok = enumerated.size() == 113 && fixture.size() == 114;
    std::ostringstream detail;
    detail << enumerated.size() << " integers in [2,204], " << elapsed << " s";
    report(1, "(3,1) table reproduction", sets_equal && count_ok && elapsed < 1.0, detail.str());
}

void criterion_2_gap() {
    const auto ctx = make_pair_context(3, 1);
    bool ok = true;
    for (std::int64_t r : {40, 136, 232, 328, 424, 520}) {
        ok = ok && is_distinguished(ctx, r).distinguished;
    }
    ok = ok && !is_distinguished(ctx, 616).distinguished;
    report(2, "40..520 distinguished, gap at 616", ok);
}

void criterion_3_multiples() {
    const auto ctx = make_pair_context(3, 1);
    bool ok = is_distinguished(ctx, 11).distinguished;
    ok = ok && !is_distinguished(ctx, 22).distinguished;
    ok = ok && is_distinguished(ctx, 44).distinguished;
    for (int t = 0; t <= 6; ++t) {
        const bool expect = t <= 3;
        ok = ok && is_distinguished(ctx, (std::int64_t(1) << t) * 5).distinguished == expect;
    }
    report(3, "11/22/44 pattern and 2^t*5 cutoff at t = 3", ok);
}

void criterion_4_ord_powers_of_two() {
    bool ok = true;
    for (int ell = 3; ell <= 20; ++ell) {
        ok = ok && multiplicative_order(3, std::int64_t(1) << ell) == std::int64_t(1) << (ell - 2);
    }
    report(4, "ord_{2^ell}(3) = 2^{ell-2} for ell = 3..20", ok);
}

void criterion_5_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::int64_t checked = 0;
    for (auto [s, t] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {3, 1}, {5, 1}, {5, 2}, {7, 2}, {11, 1}}) {
        const auto ctx = make_pair_context(s, t);
        for (std::int64_t r = 2; r <= 2000; ++r) {
            if (std::gcd(r, s) != 1) continue;
            // is_distinguished computes both criteria and throws if they split;
            // re-derive both here anyway so the check does not lean on that.
            const auto v = is_distinguished(ctx, r);
            const bool div_route = v.beta_mod_r == 0;
            const bool ord_route = v.ord_r == v.ord_gr;
            ok = ok && div_route == ord_route;
            ++checked;
        }
    }
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << checked << " (s,t,r) triples, " << elapsed << " s";
    report(5, "divisibility and order-equality criteria agree to r = 2000",
           ok && elapsed < 30.0, detail.str());
}

void criterion_6_closed_form() {
    bool ok = true;
    std::int64_t checked = 0;
    for (std::int64_t s = 2; s <= 100; ++s) {
        for (const auto& [p, e] : factorize(s - 1).factors) {
            (void)e;
            std::int64_t pe = 1;
            for (int ell = 1;; ++ell) {
                if (pe > 100000 / p) break;
                pe *= p;
                const int closed = ord_valuation_closed_form(s, p, ell);
                const int brute = valuation(p, oracle::naive_order(s, pe));
                ok = ok && closed == brute;
                ++checked;
            }
        }
    }
    std::ostringstream detail;
    detail << checked << " (s,p,ell) triples";
    report(6, "closed-form order valuations match brute force", ok, detail.str());
}

void criterion_7_ten_fourteen() {
    const auto scan = check_10_14_mod_24(10000);
    bool ok = scan.ok();
    // jacobi for every k <= 1000, beyond the distinguishedness scan range
    for (std::int64_t k = 0; k <= 1000; ++k) {
        ok = ok && jacobi_symbol(2 + 4 * k, 5 + 12 * k) == -1;
    }
    std::ostringstream detail;
    detail << scan.checked_10 << "+" << scan.checked_14 << " members, 1001 Jacobi symbols";
    report(7, "10 and 14 mod 24 distinguished to 10^4; (2+4k/5+12k) = -1", ok, detail.str());
}

void criterion_8_progressions() {
    const auto ctx = make_pair_context(3, 1);
    bool ok = true;
    for (std::int64_t r : enumerate_distinguished(ctx, 2, 200)) {
        for (std::int64_t m = 0; m <= 20; ++m) {
            ok = ok && is_distinguished(ctx, r + 6 * r * m).distinguished;
            ok = ok && is_distinguished(ctx, 5 * r + 6 * r * m).distinguished;
        }
    }
    report(8, "r + 6rm and 5r + 6rm distinguished for r <= 200, m <= 20", ok);
}

void criterion_9_charts() {
    const auto ctx = make_pair_context(11, 1);
    bool ok = true;
    const auto c51 = multiples_chart(ctx, 51, {6, 6});
    const auto c101 = multiples_chart(ctx, 101, {6, 6});
    const auto c151 = multiples_chart(ctx, 151, {6, 6});
    for (int i = 0; i <= 6; ++i) {
        for (int j = 0; j <= 6; ++j) {
            ok = ok && c51.at({i, j}) == (j == 0 && i <= 5);
            ok = ok && c101.at({i, j}) == (i <= 3 && j <= 2);
            ok = ok && c151.at({i, j}) == ((i == 0 || i == 2) && j <= 2);
        }
    }
    report(9, "(11,1) multiples charts for k = 51, 101, 151", ok, "3 x 49 cells");
}

void criterion_10_combinatorics() {
    using V = std::vector<std::int64_t>;
    const auto lambda = representatives(OrbitKind::multiplicative, 3, 0, 13);
    const auto upsilon = representatives(OrbitKind::affine, 3, 1, 13);
    bool ok = lambda.representatives() == V{0, 1, 2, 4, 7};
    ok = ok && upsilon.representatives() == V{0, 2, 3, 6, 8};
    ok = ok && lambda.orbits.at(0) == V{0};
    ok = ok && lambda.orbits.at(1) == V{1, 3, 9};
    ok = ok && lambda.orbits.at(2) == V{2, 5, 6};
    ok = ok && lambda.orbits.at(4) == V{4, 10, 12};
    ok = ok && lambda.orbits.at(7) == V{7, 8, 11};
    ok = ok && upsilon.orbits.at(0) == V{0, 1, 4};
    ok = ok && upsilon.orbits.at(2) == V{2, 7, 9};
    ok = ok && upsilon.orbits.at(3) == V{3, 5, 10};
    ok = ok && upsilon.orbits.at(6) == V{6};
    ok = ok && upsilon.orbits.at(8) == V{8, 11, 12};
    report(10, "(3,13) coset and orbit partitions with least representatives", ok);
}

void criterion_11_fixed_points() {
    const auto ctx = make_pair_context(3, 1);
    bool ok = is_fixed_point(ctx, PeriodicRationalFn::geometric()).fixed;
    for (std::int64_t m : {0, 2, 3, 6, 8}) {
        ok = ok && is_fixed_point(ctx, make_F(3, 1, 13, m)).fixed;
    }
    for (std::int64_t n : {0, 1, 2, 4, 7}) {
        ok = ok && is_fixed_point(ctx, make_psi(3, 1, 13, n)).fixed;
    }
    std::int64_t psi_checked = 0;
    for (std::int64_t r : enumerate_distinguished(ctx, 2, 50)) {
        for (std::int64_t n = 0; n < r; ++n) {
            const auto fp = is_fixed_point(ctx, make_psi(3, 1, r, n));
            ok = ok && fp.fixed && fp.multiset_fixed.value_or(false);
            ++psi_checked;
        }
    }
    std::ostringstream detail;
    detail << psi_checked << " psi functions at the multiset level";
    report(11, "fixed-point suite incl. multiset permutation for r <= 50", ok, detail.str());
}

void criterion_12_matrix() {
    const auto m = basis_matrix(3, 1, 13);
    bool ok = m.row_reps == std::vector<std::int64_t>{0, 1, 2, 4, 7} &&
              m.col_reps == std::vector<std::int64_t>{0, 2, 3, 6, 8};

    ExponentMultiset e53(13);
    e53.add(5);
    e53.add(8);
    e53.add(9);
    ok = ok && m.entries_multiset[4][2] == e53;

    // the column of the orbit {6} has single exponents of multiplicity 3
    for (std::size_t i = 1; i < 5 && ok; ++i) {
        const auto& cell = m.entries_multiset[i][3];
        ok = cell.counts.size() == 1 && cell.size() == 3;
    }
    auto three_w6 = CycloElement::root_power(13, 6);
    three_w6.scale(3);
    ok = ok && m.entries[1][3] == three_w6;

    // exact inverse
    const auto inv = invert_basis_matrix(m);  // throws unless M * M^{-1} = I
    ok = ok && inv.size() == 5;

    // first column = constant coefficients; last column = x^2 numerator
    // coefficients, via the independent partial-fraction expansion
    for (std::size_t i = 1; i < 5 && ok; ++i) {
        const auto numer = psi_numerator(3, 1, 13, m.row_reps[i]);
        ok = numer.size() == 3 && numer[0] == m.entries[i][0] && numer[2] == m.entries[i][4];
    }
    // row 0 (psi = 1/(1-x)) is all ones in both observations
    ok = ok && m.entries[0][0] == CycloElement::one(13) &&
         m.entries[0][4] == CycloElement::one(13);

    report(12, "M and M' for (3,1,13): entries, inverse, column observations", ok);
}

void criterion_13_conjecture() {
    const auto worked = check_mprime_conjecture(3, 1, 13);
    bool ok = worked.cells.size() == 25 && worked.all_match();

    const auto ctx = make_pair_context(3, 1);
    std::ostringstream scan_log;
    std::int64_t scanned = 0;
    for (std::int64_t r : enumerate_distinguished(ctx, 2, 50)) {
        const auto rep = check_mprime_conjecture(3, 1, r);
        scan_log << "  r = " << rep.r << ": exact " << rep.exact_cells << ", scaled "
                 << rep.scaled_cells << ", support " << rep.support_cells << ", mismatch "
                 << rep.mismatch_cells << "\n";
        ++scanned;
    }
    std::ostringstream detail;
    detail << "25/25 worked cells, scanner covered " << scanned << " moduli";
    report(13, "scaled-orbit view of M' matches at (3,1,13); scan emitted", ok, detail.str());
    std::cout << "  exploratory scan report (no assertions):\n" << scan_log.str();
}

void criterion_14_round_trip() {
    const auto ctx = make_pair_context(3, 1);
    const auto moduli = enumerate_distinguished(ctx, 2, 50);
    std::mt19937_64 rng(0x0134121304ULL);
    bool ok = true;
    for (int iter = 0; iter < 100; ++iter) {
        const std::int64_t r = moduli[rng() % moduli.size()];
        const auto orbit_set = representatives(OrbitKind::affine, 3, 1, r);
        Decomposition d;
        d.r = r;
        for (const auto& [rep, members] : orbit_set.orbits) {
            (void)members;
            d.reps.push_back(rep);
            if (iter % 2) {
                d.coeffs.push_back(
                    CycloElement::constant(r, mpq_class(long(rng() % 41) - 20)));
            } else {
                auto c = CycloElement::root_power(r, std::int64_t(rng() % 11));
                c += CycloElement::constant(r, mpq_class(long(rng() % 7) - 3, 2));
                d.coeffs.push_back(c);
            }
        }
        const auto f = reconstruct(ctx, d);
        const auto d2 = decompose_fixed(ctx, f);  // re-verifies reconstruction
        ok = ok && d2.reps == d.reps && d2.coeffs == d.coeffs && reconstruct(ctx, d2) == f;
    }
    report(14, "100 random orbit-constant fixed points round-trip exactly", ok);
}

}  // namespace

int main() {
    criterion_1_table();
    criterion_2_gap();
    criterion_3_multiples();
    criterion_4_ord_powers_of_two();
    criterion_5_equivalence();
    criterion_6_closed_form();
    criterion_7_ten_fourteen();
    criterion_8_progressions();
    criterion_9_charts();
    criterion_10_combinatorics();
    criterion_11_fixed_points();
    criterion_12_matrix();
    criterion_13_conjecture();
    criterion_14_round_trip();
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
