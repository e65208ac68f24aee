#include "omega_json.hpp"

namespace omega_cli {

namespace {

const char* kVersion = "1.0.0";

const char* match_name(omega::CellMatch match) {
    switch (match) {
        case omega::CellMatch::exact: return "exact";
        case omega::CellMatch::scaled: return "scaled";
        case omega::CellMatch::support_only: return "support_only";
        case omega::CellMatch::mismatch: return "mismatch";
    }
    return "?";
}

}  // namespace

json to_json(const omega::Factorization& f) {
    json factors = json::array();
    for (const auto& pp : f.factors) factors.push_back({pp.prime, pp.exponent});
    return {{"value", f.value}, {"factors", factors}};
}

json to_json(const omega::PairContext& ctx) {
    return {{"s", ctx.s},
            {"t", ctx.t},
            {"g", ctx.g},
            {"g_bar", ctx.g_bar},
            {"g_factors", to_json(ctx.g_factors)},
            {"outside_theorem_range", ctx.outside_theorem_range}};
}

json to_json(const omega::DistinguishedVerdict& v) {
    return {{"r", v.r},
            {"distinguished", v.distinguished},
            {"ord_r", v.ord_r},
            {"ord_gr", v.ord_gr},
            {"beta_mod_r", v.beta_mod_r}};
}

json to_json(const omega::OrderGrowthProfile& profile) {
    json rows = json::array();
    for (const auto& row : profile.rows) {
        rows.push_back(
            {{"ell", row.ell}, {"ord", row.ord}, {"lambda", row.lambda}, {"delta", row.delta}});
    }
    return {{"s", profile.s}, {"p", profile.p}, {"alpha", profile.alpha}, {"rows", rows}};
}

json to_json(const omega::MultiplesChart& chart) {
    json values = json::array();
    for (bool v : chart.values) values.push_back(v ? 1 : 0);
    return {{"s", chart.s},     {"t", chart.t},           {"k", chart.k},
            {"primes", chart.primes}, {"bounds", chart.bounds}, {"values", values}};
}

json to_json(const omega::TenFourteenReport& report) {
    return {{"limit", report.limit},
            {"checked_10", report.checked_10},
            {"checked_14", report.checked_14},
            {"jacobi_checked", report.jacobi_checked},
            {"not_distinguished", report.not_distinguished},
            {"jacobi_failures", report.jacobi_failures},
            {"ok", report.ok()}};
}

json to_json(const omega::DescentReport& report) {
    return {{"s", report.s},
            {"t", report.t},
            {"t_prime", report.t_prime},
            {"limit", report.limit},
            {"gcd_divides", report.gcd_divides},
            {"descent_violations", report.descent_violations},
            {"t_prime_violations", report.t_prime_violations},
            {"ok", report.ok()}};
}

json to_json(const omega::OrbitSet& set) {
    json orbits = json::array();  // sorted by representative: map order
    for (const auto& [rep, members] : set.orbits) {
        orbits.push_back({{"rep", rep}, {"members", members}});
    }
    return {{"r", set.r},
            {"kind", set.kind == omega::OrbitKind::affine ? "affine" : "multiplicative"},
            {"s", set.s},
            {"t", set.t},
            {"orbits", orbits}};
}

json to_json(const omega::CycloElement& e) {
    json coeffs = json::array();
    for (const auto& c : e.coefficients()) {
        coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
    }
    return {{"r", e.conductor()}, {"coeffs", coeffs}};
}

json to_json(const omega::ExponentMultiset& ms) {
    json exponents = json::object();
    for (const auto& [a, m] : ms.counts) exponents[std::to_string(a)] = m;
    return {{"r", ms.r}, {"exponents", exponents}};
}

json to_json(const omega::PeriodicRationalFn& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(to_json(c));
    json out = {{"r", f.period}, {"coeffs", coeffs}};
    if (f.provenance) {
        json prov = json::array();
        for (const auto& ms : *f.provenance) prov.push_back(to_json(ms));
        out["provenance"] = prov;
    }
    return out;
}

json to_json(const omega::FixedPointReport& report) {
    json out = {{"fixed", report.fixed}};
    out["witness"] = report.witness ? json(*report.witness) : json();
    out["multiset_fixed"] = report.multiset_fixed ? json(*report.multiset_fixed) : json();
    out["multiset_witness"] =
        report.multiset_witness ? json(*report.multiset_witness) : json();
    return out;
}

json to_json(const omega::Decomposition& d) {
    json coeffs = json::array();
    for (const auto& c : d.coeffs) coeffs.push_back(to_json(c));
    return {{"r", d.r}, {"reps", d.reps}, {"coeffs", coeffs}};
}

json to_json(const omega::BasisMatrix& m) {
    json entries = json::array(), multisets = json::array();
    for (const auto& row : m.entries) {
        json jrow = json::array();
        for (const auto& e : row) jrow.push_back(to_json(e));
        entries.push_back(jrow);
    }
    for (const auto& row : m.entries_multiset) {
        json jrow = json::array();
        for (const auto& ms : row) jrow.push_back(to_json(ms));
        multisets.push_back(jrow);
    }
    return {{"s", m.s},
            {"t", m.t},
            {"r", m.r},
            {"extended", m.extended},
            {"row_reps", m.row_reps},
            {"col_reps", m.col_reps},
            {"entries", entries},
            {"entries_multiset", multisets}};
}

json to_json(const omega::MPrimeReport& report) {
    json cells = json::array();
    for (const auto& cell : report.cells) {
        cells.push_back({{"row_rep", cell.row_rep},
                         {"col_rep", cell.col_rep},
                         {"actual", to_json(cell.actual)},
                         {"predicted", to_json(cell.predicted)},
                         {"match", match_name(cell.match)}});
    }
    return {{"s", report.s},
            {"t", report.t},
            {"r", report.r},
            {"exact_cells", report.exact_cells},
            {"scaled_cells", report.scaled_cells},
            {"support_cells", report.support_cells},
            {"mismatch_cells", report.mismatch_cells},
            {"all_match", report.all_match()},
            {"cells", cells}};
}

json envelope(const std::string& command, json params, json result, json counterexamples) {
    return {{"command", command},
            {"params", std::move(params)},
            {"result", std::move(result)},
            {"counterexamples", std::move(counterexamples)},
            {"version", kVersion}};
}

std::string dump(const json& j) {
    return j.dump(2) + "\n";
}

}  // namespace omega_cli
