#include "render.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

namespace omega_cli {

namespace {

using std::int64_t;

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string render_table_text(int64_t lo, int64_t hi, const std::vector<int64_t>& marked) {
    std::set<int64_t> mark(marked.begin(), marked.end());
    const bool convention_cell = lo <= 1 && 1 <= hi;
    if (convention_cell) mark.insert(1);
    const std::size_t width = std::to_string(hi).size() + 3;  // "[..]*"
    std::ostringstream os;
    int col = 0;
    for (int64_t r = lo; r <= hi; ++r) {
        std::string cell;
        if (mark.count(r)) {
            cell = "[" + std::to_string(r) + "]";
            if (r == 1) cell += "*";
        } else {
            cell = " " + std::to_string(r);
        }
        os << pad(cell, width);
        if (++col == 12 || r == hi) {
            os << "\n";
            col = 0;
        } else {
            os << " ";
        }
    }
    if (convention_cell) {
        os << "* 1 is marked by convention; the predicate itself requires r >= 2\n";
    }
    return os.str();
}

std::string render_table_csv(int64_t lo, int64_t hi, const std::vector<int64_t>& marked) {
    std::set<int64_t> mark(marked.begin(), marked.end());
    std::ostringstream os;
    os << "r,marked,convention\n";
    for (int64_t r = lo; r <= hi; ++r) {
        const bool conv = r == 1;
        os << r << "," << (mark.count(r) || conv ? 1 : 0) << "," << (conv ? 1 : 0) << "\n";
    }
    return os.str();
}

std::string render_verdict_text(const omega::PairContext& ctx,
                                const omega::DistinguishedVerdict& v) {
    std::ostringstream os;
    os << "(s, t) = (" << ctx.s << ", " << ctx.t << ")   g = " << ctx.g
       << "   g_bar = " << ctx.g_bar << "\n";
    if (ctx.outside_theorem_range) {
        os << "note: t is outside the range 1 <= t <= s-2 assumed by the basis theorem\n";
    }
    os << "r = " << v.r << "\n";
    os << "ord_r(s)        = " << v.ord_r << "\n";
    os << "ord_{g r}(s)    = " << v.ord_gr << "\n";
    os << "beta(ord) mod r = " << v.beta_mod_r << "\n";
    os << "distinguished: " << (v.distinguished ? "yes" : "no") << "\n";
    return os.str();
}

std::string render_chart_text(const omega::MultiplesChart& chart) {
    std::ostringstream os;
    os << "(s, t) = (" << chart.s << ", " << chart.t << ")   k = " << chart.k << "\n";
    if (chart.primes.empty()) {
        os << "g = 1: no prime exponents to vary; k distinguished: "
           << (chart.values[0] ? "y" : "n") << "\n";
        return os.str();
    }
    if (chart.primes.size() == 1) {
        os << "exponent of " << chart.primes[0] << ": ";
        for (int i = 0; i <= chart.bounds[0]; ++i) os << i << (i < chart.bounds[0] ? " " : "\n");
        os << "verdict:        ";
        for (int i = 0; i <= chart.bounds[0]; ++i) {
            os << (chart.at({i}) ? "y" : "n") << (i < chart.bounds[0] ? " " : "\n");
        }
        return os.str();
    }
    if (chart.primes.size() == 2) {
        os << "rows: exponent of " << chart.primes[0] << ", columns: exponent of "
           << chart.primes[1] << "\n";
        os << "i\\j ";
        for (int j = 0; j <= chart.bounds[1]; ++j) os << std::setw(2) << j << " ";
        os << "\n";
        for (int i = 0; i <= chart.bounds[0]; ++i) {
            os << std::setw(3) << i << " ";
            for (int j = 0; j <= chart.bounds[1]; ++j) {
                os << " " << (chart.at({i, j}) ? "y" : "n") << " ";
            }
            os << "\n";
        }
        return os.str();
    }
    // three or more primes: flat tuple list
    std::vector<int> exps(chart.primes.size(), 0);
    for (std::size_t idx = 0; idx < chart.values.size(); ++idx) {
        std::size_t rem = idx;
        for (std::size_t i = chart.primes.size(); i-- > 0;) {
            exps[i] = int(rem % std::size_t(chart.bounds[i] + 1));
            rem /= std::size_t(chart.bounds[i] + 1);
        }
        os << "(";
        for (std::size_t i = 0; i < exps.size(); ++i) os << exps[i] << (i + 1 < exps.size() ? "," : "");
        os << ") " << (chart.values[idx] ? "y" : "n") << "\n";
    }
    return os.str();
}

std::string render_chart_csv(const omega::MultiplesChart& chart) {
    std::ostringstream os;
    for (std::size_t i = 0; i < chart.primes.size(); ++i) {
        os << "e" << chart.primes[i] << ",";
    }
    os << "distinguished\n";
    std::vector<int> exps(chart.primes.size(), 0);
    for (std::size_t idx = 0; idx < chart.values.size(); ++idx) {
        std::size_t rem = idx;
        for (std::size_t i = chart.primes.size(); i-- > 0;) {
            exps[i] = int(rem % std::size_t(chart.bounds[i] + 1));
            rem /= std::size_t(chart.bounds[i] + 1);
        }
        for (int e : exps) os << e << ",";
        os << (chart.values[idx] ? 1 : 0) << "\n";
    }
    return os.str();
}

std::string render_profile_text(const omega::OrderGrowthProfile& profile) {
    std::ostringstream os;
    os << "s = " << profile.s << ", p = " << profile.p << ", alpha = " << profile.alpha << "\n";
    os << std::setw(4) << "ell" << std::setw(16) << "ord_{p^ell}(s)" << std::setw(8) << "lambda"
       << std::setw(7) << "delta" << "\n";
    for (const auto& row : profile.rows) {
        os << std::setw(4) << row.ell << std::setw(16) << row.ord << std::setw(8) << row.lambda
           << std::setw(7) << row.delta << "\n";
    }
    return os.str();
}

std::string render_orbits_text(const omega::OrbitSet& lambda, const omega::OrbitSet& upsilon) {
    std::ostringstream os;
    auto braces = [](const std::vector<int64_t>& v) {
        std::ostringstream b;
        b << "{";
        for (std::size_t i = 0; i < v.size(); ++i) b << v[i] << (i + 1 < v.size() ? "," : "");
        b << "}";
        return b.str();
    };
    os << "Lambda (multiplicative coset representatives): ";
    for (int64_t rep : lambda.representatives()) os << rep << " ";
    os << "\n";
    for (const auto& [rep, members] : lambda.orbits) {
        os << "  C[" << rep << "] = " << braces(members) << "\n";
    }
    os << "Upsilon (affine orbit representatives): ";
    for (int64_t rep : upsilon.representatives()) os << rep << " ";
    os << "\n";
    for (const auto& [rep, members] : upsilon.orbits) {
        os << "  F[" << rep << "] = " << braces(members) << "\n";
    }
    return os.str();
}

std::string roots_sum_string(const omega::ExponentMultiset& ms) {
    if (ms.counts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, m] : ms.counts) {
        if (!first) os << " + ";
        first = false;
        if (a == 0) {
            os << m;
        } else {
            if (m != 1) os << m << "*";
            os << "w";
            if (a > 1) os << "^" << a;
        }
    }
    return os.str();
}

namespace {

std::string matrix_grid(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> widths;
    for (const auto& row : cells) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t j = 0; j < row.size(); ++j) {
            widths[j] = std::max(widths[j], row[j].size());
        }
    }
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            os << pad(row[j], widths[j]) << (j + 1 < row.size() ? "  " : "");
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string render_matrix_text(const omega::BasisMatrix& m) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : m.entries_multiset) {
        std::vector<std::string> line;
        for (const auto& ms : row) line.push_back(roots_sum_string(ms));
        cells.push_back(std::move(line));
    }
    return matrix_grid(cells);
}

std::string render_mprime_text(const omega::BasisMatrix& m) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : m.entries_multiset) {
        std::vector<std::string> line;
        for (const auto& ms : row) line.push_back(ms.support_string());
        cells.push_back(std::move(line));
    }
    return matrix_grid(cells);
}

std::string render_element_matrix_text(
    const std::vector<std::vector<omega::CycloElement>>& mat) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : mat) {
        std::vector<std::string> line;
        for (const auto& e : row) line.push_back(e.to_string());
        cells.push_back(std::move(line));
    }
    return matrix_grid(cells);
}

std::string render_psi_text(const omega::BasisMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.row_reps.size(); ++i) {
        const auto psi = omega::make_psi(m.s, m.t, m.r, m.row_reps[i]);
        os << "psi[" << m.row_reps[i] << "]";
        for (int64_t a = 0; a < m.r; ++a) {
            os << (a == 0 ? ": " : ", ");
            os << "a_" << a << " = " << (*psi.provenance)[std::size_t(a)].to_string();
        }
        os << "\n";
    }
    return os.str();
}

std::string render_F_text(const omega::BasisMatrix& m) {
    std::ostringstream os;
    for (int64_t rep : m.col_reps) {
        const auto orbit = omega::affine_orbit(m.s, m.t, m.r, rep);
        os << "F[" << rep << "] = (";
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            if (i) os << " + ";
            if (orbit[i] == 0) {
                os << "1";
            } else {
                os << "x";
                if (orbit[i] > 1) os << "^" << orbit[i];
            }
        }
        os << ")/(1 - x^" << m.r << ")\n";
    }
    return os.str();
}

std::string render_ten_fourteen_text(const omega::TenFourteenReport& report) {
    std::ostringstream os;
    os << "limit " << report.limit << ": checked " << report.checked_10 << " members of 10 mod 24, "
       << report.checked_14 << " members of 14 mod 24, " << report.jacobi_checked
       << " Jacobi symbols\n";
    if (report.ok()) {
        os << "all members distinguished; all symbols -1\n";
    } else {
        os << "counterexamples (not distinguished):";
        for (int64_t r : report.not_distinguished) os << " " << r;
        os << "\nJacobi failures (k):";
        for (int64_t k : report.jacobi_failures) os << " " << k;
        os << "\n";
    }
    return os.str();
}

std::string render_descent_text(const omega::DescentReport& report) {
    std::ostringstream os;
    os << "(s, t, t') = (" << report.s << ", " << report.t << ", " << report.t_prime
       << "), scanned r <= " << report.limit << "\n";
    os << "gcd(s-1,t) | gcd(s-1,t'): " << (report.gcd_divides ? "yes" : "no") << "\n";
    if (report.ok()) {
        os << "containments hold with no violations\n";
    } else {
        os << "descent violations:";
        for (int64_t r : report.descent_violations) os << " " << r;
        os << "\nt' violations:";
        for (int64_t r : report.t_prime_violations) os << " " << r;
        os << "\n";
    }
    return os.str();
}

std::string render_mprime_report_text(const omega::MPrimeReport& report) {
    std::ostringstream os;
    os << "r = " << report.r << ": cells " << report.cells.size() << ", exact "
       << report.exact_cells << ", scaled " << report.scaled_cells << ", support-only "
       << report.support_cells << ", mismatch " << report.mismatch_cells
       << (report.all_match() ? "  [consistent]" : "  [pattern breaks]") << "\n";
    for (const auto& cell : report.cells) {
        if (cell.match == omega::CellMatch::exact) continue;
        if (cell.match == omega::CellMatch::scaled) continue;
        os << "  cell (" << cell.row_rep << ", " << cell.col_rep
           << "): actual " << cell.actual.to_string() << " vs predicted "
           << cell.predicted.to_string() << "\n";
    }
    return os.str();
}

}  // namespace omega_cli
