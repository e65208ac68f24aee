// omega: decide and enumerate distinguished integers, reproduce the order
// tables and multiples charts, and construct the psi/F fixed-point families
// with their change-of-basis matrix.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "omega/cyclo.hpp"
#include "omega/distinguished.hpp"
#include "omega/modnt.hpp"
#include "omega/orbits.hpp"
#include "omega/series.hpp"
#include "omega_json.hpp"
#include "render.hpp"

namespace {

using namespace omega;
using omega_cli::envelope;
using omega_cli::json;
using omega_cli::to_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

struct Options {
    std::string format = "text";
    std::string out;
    int jobs = 1;
    std::uint64_t seed = 0;  // accepted for reproducibility discipline; unused
};

int env_default_jobs() {
    if (const char* env = std::getenv("OMEGA_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw std::domain_error("cannot open output file: " + opt.out);
    file << text;
}

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

void require_text_or_json(const Options& opt, const char* command) {
    if (opt.format == "csv") {
        throw UsageError(std::string(command) + " does not support --format csv");
    }
}

int run_table(const Options& opt, std::int64_t s, std::int64_t t, std::int64_t lo,
              std::int64_t hi) {
    if (lo > hi) throw UsageError("table: lo must be <= hi");
    if (lo < 1) throw UsageError("table: lo must be >= 1");
    const auto ctx = make_pair_context(s, t);
    const auto marked = enumerate_distinguished(ctx, lo, hi, opt.jobs);
    if (opt.format == "json") {
        json result = {{"lo", lo}, {"hi", hi}, {"marked", marked}};
        result["convention_cells"] = lo <= 1 && 1 <= hi ? json::array({1}) : json::array();
        emit(opt, omega_cli::dump(envelope(
                      "table", {{"s", s}, {"t", t}, {"lo", lo}, {"hi", hi}}, result)));
    } else if (opt.format == "csv") {
        emit(opt, omega_cli::render_table_csv(lo, hi, marked));
    } else {
        emit(opt, omega_cli::render_table_text(lo, hi, marked));
    }
    return kExitOk;
}

int run_enumerate(const Options& opt, std::int64_t s, std::int64_t t, std::int64_t lo,
                  std::int64_t hi) {
    if (lo > hi) throw UsageError("enumerate: lo must be <= hi");
    const auto ctx = make_pair_context(s, t);
    const auto found = enumerate_distinguished(ctx, lo, hi, opt.jobs);
    if (opt.format == "json") {
        emit(opt, omega_cli::dump(envelope("enumerate",
                                           {{"s", s}, {"t", t}, {"lo", lo}, {"hi", hi}},
                                           {{"distinguished", found}})));
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "r\n";
        for (auto r : found) os << r << "\n";
        emit(opt, os.str());
    } else {
        std::ostringstream os;
        for (auto r : found) os << r << "\n";
        emit(opt, os.str());
    }
    return kExitOk;
}

int run_analyze(const Options& opt, std::int64_t s, std::int64_t t, std::int64_t r) {
    require_text_or_json(opt, "analyze");
    const auto ctx = make_pair_context(s, t);
    const auto verdict = is_distinguished(ctx, r);
    if (opt.format == "json") {
        emit(opt, omega_cli::dump(envelope("analyze", {{"s", s}, {"t", t}, {"r", r}},
                                           to_json(verdict))));
    } else {
        emit(opt, omega_cli::render_verdict_text(ctx, verdict));
    }
    return kExitOk;
}

int run_basis(const Options& opt, std::int64_t s, std::int64_t t, std::int64_t r,
              const std::string& view, bool coprime_only) {
    require_text_or_json(opt, "basis");
    const bool extended = !coprime_only;
    const auto m = basis_matrix(s, t, r, extended);
    json result;
    std::string text;
    if (view == "M") {
        result = to_json(m);
        text = omega_cli::render_matrix_text(m);
    } else if (view == "Mprime") {
        result = to_json(m);
        text = omega_cli::render_mprime_text(m);
    } else if (view == "inverse") {
        const auto inv = invert_basis_matrix(m);
        json rows = json::array();
        for (const auto& row : inv) {
            json jrow = json::array();
            for (const auto& e : row) jrow.push_back(to_json(e));
            rows.push_back(jrow);
        }
        result = {{"inverse", rows}};
        text = omega_cli::render_element_matrix_text(inv);
    } else if (view == "psi") {
        json rows = json::array();
        for (std::int64_t n : m.row_reps) rows.push_back(to_json(make_psi(s, t, r, n)));
        result = {{"psi", rows}, {"row_reps", m.row_reps}};
        text = omega_cli::render_psi_text(m);
    } else if (view == "F") {
        json rows = json::array();
        for (std::int64_t n : m.col_reps) rows.push_back(to_json(make_F(s, t, r, n)));
        result = {{"F", rows}, {"col_reps", m.col_reps}};
        text = omega_cli::render_F_text(m);
    } else if (view == "orbits") {
        const auto lambda = representatives(OrbitKind::multiplicative, s, 0, r);
        const auto upsilon = representatives(OrbitKind::affine, s, t, r);
        result = {{"Lambda", to_json(lambda)}, {"Upsilon", to_json(upsilon)}};
        text = omega_cli::render_orbits_text(lambda, upsilon);
    } else {
        throw UsageError("basis: unknown --view " + view);
    }
    if (opt.format == "json") {
        emit(opt, omega_cli::dump(envelope(
                      "basis", {{"s", s}, {"t", t}, {"r", r}, {"view", view}}, result)));
    } else {
        emit(opt, text);
    }
    return kExitOk;
}

int run_chart(const Options& opt, std::int64_t s, std::int64_t t, std::int64_t k,
              std::vector<int> bounds) {
    const auto ctx = make_pair_context(s, t);
    if (bounds.empty()) bounds.assign(ctx.g_factors.factors.size(), 6);
    const auto chart = multiples_chart(ctx, k, bounds);
    if (opt.format == "json") {
        emit(opt, omega_cli::dump(envelope(
                      "chart", {{"s", s}, {"t", t}, {"k", k}, {"bounds", bounds}},
                      to_json(chart))));
    } else if (opt.format == "csv") {
        emit(opt, omega_cli::render_chart_csv(chart));
    } else {
        emit(opt, omega_cli::render_chart_text(chart));
    }
    return kExitOk;
}

int run_profile(const Options& opt, std::int64_t s, std::int64_t p, int max_ell) {
    require_text_or_json(opt, "profile");
    const auto profile = order_growth_profile(s, p, max_ell);
    if (opt.format == "json") {
        emit(opt, omega_cli::dump(envelope("profile",
                                           {{"s", s}, {"p", p}, {"max_ell", max_ell}},
                                           to_json(profile))));
    } else {
        emit(opt, omega_cli::render_profile_text(profile));
    }
    return kExitOk;
}

int run_progressions(const Options& opt, std::int64_t s, std::int64_t t, std::int64_t r,
                     std::int64_t b, int count) {
    require_text_or_json(opt, "progressions");
    const auto ctx = make_pair_context(s, t);
    const auto members = progression_members(ctx, r, b, count);
    if (opt.format == "json") {
        emit(opt, omega_cli::dump(envelope(
                      "progressions",
                      {{"s", s}, {"t", t}, {"r", r}, {"b", b}, {"count", count}},
                      {{"members", members},
                       {"modulus", ctx.g_bar * r * s},
                       {"start", b * r}})));
    } else {
        std::ostringstream os;
        os << "members of the progression " << b * r << " + m*" << ctx.g_bar * r * s
           << " (all verified distinguished):\n";
        for (auto m : members) os << m << "\n";
        emit(opt, os.str());
    }
    return kExitOk;
}

int run_scan_conjecture(const Options& opt, std::int64_t s, std::int64_t t,
                        std::int64_t limit) {
    require_text_or_json(opt, "scan-conjecture");
    const auto ctx = make_pair_context(s, t);
    const auto rs = enumerate_distinguished(ctx, 2, limit, opt.jobs);
    json reports = json::array();
    json counterexamples = json::array();
    std::ostringstream os;
    for (std::int64_t r : rs) {
        const auto report = check_mprime_conjecture(s, t, r);
        os << omega_cli::render_mprime_report_text(report);
        reports.push_back(to_json(report));
        if (!report.all_match()) counterexamples.push_back(r);
    }
    if (opt.format == "json") {
        emit(opt, omega_cli::dump(envelope("scan-conjecture",
                                           {{"s", s}, {"t", t}, {"limit", limit}},
                                           {{"reports", reports}}, counterexamples)));
    } else {
        emit(opt, os.str());
    }
    return kExitOk;  // exploratory: completion is success regardless of content
}

int run_check_10_14(const Options& opt, std::int64_t limit) {
    require_text_or_json(opt, "check-10-14");
    const auto report = check_10_14_mod_24(limit);
    if (opt.format == "json") {
        json counterexamples = json::array();
        for (auto r : report.not_distinguished) counterexamples.push_back(r);
        emit(opt, omega_cli::dump(envelope("check-10-14", {{"limit", limit}},
                                           to_json(report), counterexamples)));
    } else {
        emit(opt, omega_cli::render_ten_fourteen_text(report));
    }
    return report.ok() ? kExitOk : kExitDomain;  // counterexamples are fatal here
}

int run_descent(const Options& opt, std::int64_t s, std::int64_t t, std::int64_t t_prime,
                std::int64_t limit) {
    require_text_or_json(opt, "descent");
    const auto report = descent_check(s, t, t_prime, limit);
    if (opt.format == "json") {
        json counterexamples = json::array();
        for (auto r : report.descent_violations) counterexamples.push_back(r);
        for (auto r : report.t_prime_violations) counterexamples.push_back(r);
        emit(opt, omega_cli::dump(envelope(
                      "descent", {{"s", s}, {"t", t}, {"t_prime", t_prime}, {"limit", limit}},
                      to_json(report), counterexamples)));
    } else {
        emit(opt, omega_cli::render_descent_text(report));
    }
    return report.ok() ? kExitOk : kExitDomain;
}

int run_min_progression(const Options& opt, std::int64_t s, std::int64_t t,
                        std::int64_t alpha, std::int64_t mu_bound, int depth) {
    require_text_or_json(opt, "min-progression");
    const auto ctx = make_pair_context(s, t);
    const auto scan = minimal_progression_scan(ctx, alpha, mu_bound, depth);
    if (opt.format == "json") {
        emit(opt, omega_cli::dump(envelope(
                      "min-progression",
                      {{"s", s}, {"t", t}, {"alpha", alpha}, {"mu_bound", mu_bound},
                       {"depth", depth}},
                      {{"candidates", scan.candidates},
                       {"guaranteed_modulus", ctx.g_bar * alpha * s}})));
    } else {
        std::ostringstream os;
        os << "moduli mu <= " << mu_bound << " whose first " << depth
           << " members past " << alpha << " stay distinguished (exploratory):\n";
        for (auto mu : scan.candidates) os << mu << "\n";
        os << "guaranteed modulus: " << ctx.g_bar * alpha * s << "\n";
        emit(opt, os.str());
    }
    return kExitOk;
}

int run_beta(const Options& opt, std::int64_t s, std::int64_t t, std::uint64_t k) {
    require_text_or_json(opt, "beta");
    const mpz_class value = beta_exact(s, t, k);
    if (opt.format == "json") {
        emit(opt, omega_cli::dump(envelope("beta", {{"s", s}, {"t", t}, {"k", k}},
                                           {{"beta", value.get_str()}})));
    } else {
        emit(opt, value.get_str() + "\n");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for distinguished integers and the fixed points of "
                 "the series operator a_n -> a_{sn+t}"};
    app.require_subcommand(1);

    Options opt;
    opt.jobs = env_default_jobs();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", opt.out, "write output to a file instead of stdout");
    app.add_option("--jobs", opt.jobs, "worker threads for scans (env OMEGA_JOBS)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed,
                   "accepted for reproducibility discipline; results never depend on it");

    std::function<int()> action;

    {
        auto* cmd = app.add_subcommand("table", "grid of [lo,hi] with distinguished cells marked");
        cmd->fallthrough();
        auto s = std::make_shared<std::int64_t>();
        auto t = std::make_shared<std::int64_t>();
        auto lo = std::make_shared<std::int64_t>();
        auto hi = std::make_shared<std::int64_t>();
        cmd->add_option("s", *s)->required();
        cmd->add_option("t", *t)->required();
        cmd->add_option("lo", *lo)->required();
        cmd->add_option("hi", *hi)->required();
        cmd->callback([&, s, t, lo, hi] {
            action = [&, s, t, lo, hi] { return run_table(opt, *s, *t, *lo, *hi); };
        });
    }
    {
        auto* cmd = app.add_subcommand("enumerate", "list distinguished integers in [lo,hi]");
        cmd->fallthrough();
        auto s = std::make_shared<std::int64_t>();
        auto t = std::make_shared<std::int64_t>();
        auto lo = std::make_shared<std::int64_t>();
        auto hi = std::make_shared<std::int64_t>();
        cmd->add_option("s", *s)->required();
        cmd->add_option("t", *t)->required();
        cmd->add_option("lo", *lo)->required();
        cmd->add_option("hi", *hi)->required();
        cmd->callback([&, s, t, lo, hi] {
            action = [&, s, t, lo, hi] { return run_enumerate(opt, *s, *t, *lo, *hi); };
        });
    }
    {
        auto* cmd = app.add_subcommand("analyze", "verdict and witnesses for one integer");
        cmd->fallthrough();
        auto s = std::make_shared<std::int64_t>();
        auto t = std::make_shared<std::int64_t>();
        auto r = std::make_shared<std::int64_t>();
        cmd->add_option("s", *s)->required();
        cmd->add_option("t", *t)->required();
        cmd->add_option("r", *r)->required();
        cmd->callback([&, s, t, r] {
            action = [&, s, t, r] { return run_analyze(opt, *s, *t, *r); };
        });
    }
    {
        auto* cmd = app.add_subcommand("basis", "matrices and function families for one r");
        cmd->fallthrough();
        auto s = std::make_shared<std::int64_t>();
        auto t = std::make_shared<std::int64_t>();
        auto r = std::make_shared<std::int64_t>();
        auto view = std::make_shared<std::string>("M");
        auto coprime_only = std::make_shared<bool>(false);
        cmd->add_option("s", *s)->required();
        cmd->add_option("t", *t)->required();
        cmd->add_option("r", *r)->required();
        cmd->add_option("--view", *view, "M, Mprime, inverse, psi, F, or orbits")
            ->check(CLI::IsMember({"M", "Mprime", "inverse", "psi", "F", "orbits"}));
        cmd->add_flag("--coprime-only", *coprime_only,
                      "drop the n = 0 row (the matrix is then not square)");
        cmd->callback([&, s, t, r, view, coprime_only] {
            action = [&, s, t, r, view, coprime_only] {
                return run_basis(opt, *s, *t, *r, *view, *coprime_only);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("chart", "grid of verdicts for p1^t1...pn^tn * k");
        cmd->fallthrough();
        auto s = std::make_shared<std::int64_t>();
        auto t = std::make_shared<std::int64_t>();
        auto k = std::make_shared<std::int64_t>();
        auto bounds = std::make_shared<std::vector<int>>();
        cmd->add_option("s", *s)->required();
        cmd->add_option("t", *t)->required();
        cmd->add_option("k", *k)->required();
        cmd->add_option("--bounds", *bounds,
                        "inclusive exponent bound per prime of g (default 6 each)");
        cmd->callback([&, s, t, k, bounds] {
            action = [&, s, t, k, bounds] { return run_chart(opt, *s, *t, *k, *bounds); };
        });
    }
    {
        auto* cmd = app.add_subcommand("profile", "growth of ord_{p^ell}(s) with ell");
        cmd->fallthrough();
        auto s = std::make_shared<std::int64_t>();
        auto p = std::make_shared<std::int64_t>();
        auto max_ell = std::make_shared<int>(6);
        cmd->add_option("s", *s)->required();
        cmd->add_option("p", *p)->required();
        cmd->add_option("--max-ell", *max_ell)->check(CLI::PositiveNumber);
        cmd->callback([&, s, p, max_ell] {
            action = [&, s, p, max_ell] { return run_profile(opt, *s, *p, *max_ell); };
        });
    }
    {
        auto* cmd = app.add_subcommand(
            "progressions", "members of the distinguished progression b*r mod g_bar*r*s");
        cmd->fallthrough();
        auto s = std::make_shared<std::int64_t>();
        auto t = std::make_shared<std::int64_t>();
        auto r = std::make_shared<std::int64_t>();
        auto b = std::make_shared<std::int64_t>(1);
        auto count = std::make_shared<int>(10);
        cmd->add_option("s", *s)->required();
        cmd->add_option("t", *t)->required();
        cmd->add_option("r", *r)->required();
        cmd->add_option("--b", *b, "coprime multiplier (default 1)");
        cmd->add_option("--count", *count)->check(CLI::PositiveNumber);
        cmd->callback([&, s, t, r, b, count] {
            action = [&, s, t, r, b, count] {
                return run_progressions(opt, *s, *t, *r, *b, *count);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("scan-conjecture",
                                       "compare M' cells against scaled orbits, r <= limit");
        cmd->fallthrough();
        auto s = std::make_shared<std::int64_t>();
        auto t = std::make_shared<std::int64_t>();
        auto limit = std::make_shared<std::int64_t>(50);
        cmd->add_option("s", *s)->required();
        cmd->add_option("t", *t)->required();
        cmd->add_option("--limit", *limit)->check(CLI::PositiveNumber);
        cmd->callback([&, s, t, limit] {
            action = [&, s, t, limit] { return run_scan_conjecture(opt, *s, *t, *limit); };
        });
    }
    {
        auto* cmd = app.add_subcommand("check-10-14",
                                       "verify the 10 and 14 mod 24 classes under (3,1)");
        cmd->fallthrough();
        auto limit = std::make_shared<std::int64_t>(10000);
        cmd->add_option("--limit", *limit)->check(CLI::PositiveNumber);
        cmd->callback(
            [&, limit] { action = [&, limit] { return run_check_10_14(opt, *limit); }; });
    }
    {
        auto* cmd = app.add_subcommand("descent", "containment of distinguished sets under t");
        cmd->fallthrough();
        auto s = std::make_shared<std::int64_t>();
        auto t = std::make_shared<std::int64_t>();
        auto tp = std::make_shared<std::int64_t>();
        auto limit = std::make_shared<std::int64_t>(500);
        cmd->add_option("s", *s)->required();
        cmd->add_option("t", *t)->required();
        cmd->add_option("t_prime", *tp)->required();
        cmd->add_option("--limit", *limit)->check(CLI::PositiveNumber);
        cmd->callback([&, s, t, tp, limit] {
            action = [&, s, t, tp, limit] { return run_descent(opt, *s, *t, *tp, *limit); };
        });
    }
    {
        auto* cmd = app.add_subcommand(
            "min-progression", "exploratory scan for small progression moduli through alpha");
        cmd->fallthrough();
        auto s = std::make_shared<std::int64_t>();
        auto t = std::make_shared<std::int64_t>();
        auto alpha = std::make_shared<std::int64_t>();
        auto mu_bound = std::make_shared<std::int64_t>(100);
        auto depth = std::make_shared<int>(40);
        cmd->add_option("s", *s)->required();
        cmd->add_option("t", *t)->required();
        cmd->add_option("alpha", *alpha)->required();
        cmd->add_option("--mu-bound", *mu_bound)->check(CLI::PositiveNumber);
        cmd->add_option("--depth", *depth)->check(CLI::PositiveNumber);
        cmd->callback([&, s, t, alpha, mu_bound, depth] {
            action = [&, s, t, alpha, mu_bound, depth] {
                return run_min_progression(opt, *s, *t, *alpha, *mu_bound, *depth);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("beta", "exact t*(s^k-1)/(s-1) for display");
        cmd->fallthrough();
        auto s = std::make_shared<std::int64_t>();
        auto t = std::make_shared<std::int64_t>();
        auto k = std::make_shared<std::uint64_t>();
        cmd->add_option("s", *s)->required();
        cmd->add_option("t", *t)->required();
        cmd->add_option("k", *k)->required();
        cmd->callback(
            [&, s, t, k] { action = [&, s, t, k] { return run_beta(opt, *s, *t, *k); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomain;
    }
}
