#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirichlet/census.hpp"
#include "dirichlet/characters.hpp"
#include "dirichlet/error.hpp"
#include "dirichlet/lseries.hpp"
#include "dirichlet/modular_index.hpp"
#include "dirichlet/quadratic.hpp"

namespace dirichlet::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
    i64 k = 0;
    i64 kmin = 3;
    std::vector<i64> moduli;
    i64 m = 1;
    double s = 1.0;
    std::vector<double> rho;
    std::uint64_t N = 1'000'000;
    std::uint64_t Q = 1'000'000;
    std::string method = "series";
    bool em_tail = false;
    std::string format = "json";
    std::string out;
    std::optional<double> tol;
    std::string chi;
    std::string suite;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

/// One record per call. json: a single line; text: key=value pairs;
/// csv: the values only (headers come from emit_csv_header).
void emit(std::ostream& out, const std::string& format, const json& record) {
    if (format == "json") {
        out << record.dump() << '\n';
        return;
    }
    const char sep = format == "csv" ? ',' : ' ';
    bool first = true;
    for (const auto& [key, value] : record.items()) {
        if (!first) out << sep;
        first = false;
        if (format == "text") out << key << '=';
        out << scalar_text(value);
    }
    out << '\n';
}

void emit_csv_header(std::ostream& out, const std::string& format, const json& record) {
    if (format != "csv") return;
    bool first = true;
    for (const auto& [key, value] : record.items()) {
        if (!first) out << ',';
        first = false;
        out << key;
    }
    out << '\n';
}

json lvalue_json(const Character& chi, const LValue& l) {
    json j;
    j["label"] = chi.label();
    j["method"] = std::string(to_string(l.method));
    j["s"] = l.s;
    j["re"] = l.value.real();
    j["im"] = l.value.imag();
    j["error_bound"] = l.error_bound;
    return j;
}

std::vector<i64> moduli_range(const RunConfig& cfg) {
    if (!cfg.moduli.empty()) return cfg.moduli;
    if (cfg.k < 3) throw UsageError("--k must be at least 3");
    std::vector<i64> out;
    for (i64 k = std::max<i64>(3, cfg.kmin); k <= cfg.k; ++k) out.push_back(k);
    return out;
}

// ---------------------------------------------------------------------------

int cmd_chars(const RunConfig& cfg, std::ostream& out) {
    const auto f = factorize_modulus(cfg.k);
    const auto group = enumerate_characters(f);
    bool header = false;
    for (const auto& chi : group) {
        json row;
        row["label"] = chi.label();
        row["class"] = std::string(to_string(classify(chi)));
        row["conjugate"] = conjugate(chi).label();
        row["order"] = [&] {
            // order of chi = L / gcd(L, all phases)
            i64 g = chi.root_order();
            for (i64 r = 1; r < chi.k(); ++r) {
                if (auto t = chi.phase(r)) g = std::gcd(g, *t);
            }
            return chi.root_order() / g;
        }();
        if (!header) {
            emit_csv_header(out, cfg.format, row);
            header = true;
        }
        emit(out, cfg.format, row);
    }
    return kSuccess;
}

int cmd_lvalue(const RunConfig& cfg, std::ostream& out) {
    if (cfg.chi.empty()) throw UsageError("lvalue needs a character label (--chi)");
    const Character chi = parse_character_label(cfg.chi);

    const std::vector<std::string> all = {"series", "euler-product", "integral", "closed-form"};
    auto compute = [&](const std::string& method) -> LValue {
        if (method == "series") return dirichlet_series(chi, cfg.s, cfg.N, {.euler_maclaurin_tail = cfg.em_tail});
        if (method == "euler-product") return euler_product(chi, cfg.s, cfg.Q);
        if (method == "integral" || method == "closed-form") {
            if (cfg.s != 1.0) throw Error(ErrorKind::domain, method + " evaluates L at s = 1 only");
            return method == "integral" ? l_one_integral(chi) : l_one_closed_form_prime(chi);
        }
        throw UsageError("unknown method: " + method);
    };

    if (cfg.method != "all") {
        const auto record = lvalue_json(chi, compute(cfg.method));
        emit_csv_header(out, cfg.format, record);
        emit(out, cfg.format, record);
        return kSuccess;
    }
    bool header = false;
    for (const auto& method : all) {
        json record;
        try {
            record = lvalue_json(chi, compute(method));
        } catch (const Error& e) {
            record = json{{"label", chi.label()}, {"method", method}, {"s", cfg.s},
                          {"skipped", std::string(to_string(e.kind()))}};
        }
        if (!header && !record.contains("skipped")) {
            emit_csv_header(out, cfg.format, record);
            header = true;
        }
        emit(out, cfg.format, record);
    }
    return kSuccess;
}

int cmd_census(const RunConfig& cfg, std::ostream& out) {
    if (cfg.N < static_cast<std::uint64_t>(std::max<i64>(cfg.k, 0))) throw UsageError("census needs N >= k");
    const auto report = census(cfg.N, cfg.k);
    auto write = [&](std::ostream& os) {
        if (cfg.format == "csv") {
            write_census_csv(os, report);
            return;
        }
        json j;
        j["N"] = report.N;
        j["k"] = report.k;
        j["excluded"] = report.excluded;
        j["total"] = report.total;
        j["ratio_spread"] = report.ratio_spread;
        json counts = json::object();
        for (const auto& [m, c] : report.counts) counts[std::to_string(m)] = c;
        j["counts"] = counts;
        emit(os, cfg.format, j);
    };
    if (cfg.out.empty()) {
        write(out);
        return kSuccess;
    }
    std::ofstream file(cfg.out);
    if (!file) throw UsageError("cannot write " + cfg.out);
    write(file);
    if (!file) throw UsageError("write failed: " + cfg.out);
    return kSuccess;
}

json quad_json(const QuadraticReport& r) {
    json j;
    j["p"] = r.p;
    j["class_mod4"] = r.class_mod4;
    j["sum_a"] = r.sums.residues;
    j["sum_b"] = r.sums.nonresidues;
    j["gauss_re"] = r.gauss.real();
    j["gauss_im"] = r.gauss.imag();
    j["l_one"] = r.l_one;
    if (r.pell) {
        j["g"] = r.pell->g;
        j["h"] = r.pell->h;
        j["k_int"] = r.pell->k;
    }
    return j;
}

int cmd_quad(const RunConfig& cfg, std::ostream& out) {
    const auto record = quad_json(quadratic_report(cfg.k));
    emit_csv_header(out, cfg.format, record);
    emit(out, cfg.format, record);
    return kSuccess;
}

json identity_json(const IdentityCheck& c) {
    json j;
    j["k"] = c.k;
    j["m"] = c.m;
    j["rho"] = c.rho;
    j["N"] = c.N;
    j["Q"] = c.Q;
    j["lhs"] = c.lhs;
    j["rhs_re"] = c.rhs.real();
    j["rhs_im"] = c.rhs.imag();
    j["discrepancy"] = c.discrepancy;
    j["bound"] = c.bound;
    j["pass"] = c.passed();
    return j;
}

int cmd_identity(const RunConfig& cfg, std::ostream& out) {
    const double rho = cfg.rho.empty() ? 0.5 : cfg.rho.front();
    const auto check = ap_identity_check(cfg.k, cfg.m, rho, cfg.N, cfg.Q);
    const auto record = identity_json(check);
    emit_csv_header(out, cfg.format, record);
    emit(out, cfg.format, record);
    return check.passed() ? kSuccess : kVerificationFailure;
}

json pole_json(const PoleScanReport& r) {
    json j;
    j["k"] = r.k;
    j["rho"] = r.rho_values;
    j["residue_estimates"] = r.residue_estimates;
    j["extrapolated_residue"] = r.extrapolated_residue;
    j["expected"] = r.expected;
    return j;
}

int cmd_pole(const RunConfig& cfg, std::ostream& out) {
    const auto grid = cfg.rho.empty() ? default_pole_grid() : cfg.rho;
    emit(out, cfg.format, pole_json(principal_pole_scan(factorize_modulus(cfg.k), grid)));
    return kSuccess;
}

// ---------------------------------------------------------------------------
// verify suites: one JSON line per case, stop at the first failure.

using CaseFn = std::function<json(i64)>;

int run_suite(const std::string& suite, const std::vector<i64>& cases, const CaseFn& fn, std::ostream& out) {
    std::size_t passed = 0;
    for (i64 c : cases) {
        json record = fn(c);
        if (record.is_null()) continue;
        json line;
        line["suite"] = suite;
        line.update(record);
        out << line.dump() << '\n';
        if (!line.value("pass", false)) {
            out << json{{"suite", suite}, {"result", "fail"}, {"passed", passed}}.dump() << '\n';
            return kVerificationFailure;
        }
        ++passed;
    }
    out << json{{"suite", suite}, {"result", "pass"}, {"passed", passed}}.dump() << '\n';
    return kSuccess;
}

json verify_orthogonality(i64 k, double tol) {
    const auto f = factorize_modulus(k);
    const auto group = enumerate_characters(f);
    const i64 K = f.group_order;
    std::size_t pairs = 0;
    bool ok = true;
    for (i64 n = 0; n < k && ok; ++n) {
        for (i64 m = 1; m < k; ++m) {
            if (gcd(m, k) != 1) continue;
            const i64 w = orthogonality_sum(group, n, m);
            ok = ok && w == (mod(n - m, k) == 0 ? K : 0);
            ++pairs;
        }
    }
    double worst = 0.0;
    for (const auto& chi : group) {
        cplx sum{0.0, 0.0};
        for (i64 m = 1; m < k; ++m) sum += chi(m);
        if (classify(chi) == CharacterClass::principal) {
            ok = ok && std::abs(sum - cplx(static_cast<double>(K), 0.0)) < tol;
        } else {
            worst = std::max(worst, std::abs(sum));
        }
    }
    ok = ok && worst < tol;
    return json{{"k", k}, {"K", K}, {"pairs", pairs}, {"max_column_residual", worst}, {"pass", ok}};
}

json verify_pole(i64 k, double tol) {
    const auto r = principal_pole_scan(factorize_modulus(k), default_pole_grid());
    const double err = std::abs(r.extrapolated_residue - r.expected);
    return json{{"k", k},
                {"extrapolated_residue", r.extrapolated_residue},
                {"expected", r.expected},
                {"error", err},
                {"pass", err < tol}};
}

json verify_quadratic(i64 p, double tol) {
    if (p < 3 || !is_prime(p)) return nullptr;
    json j;
    j["p"] = p;
    bool ok = true;

    const auto sums = residue_sums(p);
    ok = ok && sums.residues + sums.nonresidues == p * (p - 1) / 2;
    if (p % 4 == 3) ok = ok && sums.nonresidues > sums.residues;

    const auto g = gauss_sum(p);
    const bool phase_ok = p % 4 == 1 ? std::abs(g.imag()) < 1e-9 : std::abs(g.real()) < 1e-9;
    ok = ok && std::abs(std::norm(g) - static_cast<double>(p)) < 1e-8 && phase_ok;

    const double closed = l_one_quadratic(p);
    const auto series =
        dirichlet_series(legendre_character(p), 1.0, static_cast<std::uint64_t>(64 * p), {.euler_maclaurin_tail = true});
    const double diff = std::abs(series.value - cplx(closed, 0.0));
    j["l_one"] = closed;
    j["series_diff"] = diff;
    ok = ok && closed > 0.0 && diff <= series.error_bound + tol;

    if (p % 4 == 1) {
        try {
            const auto pell = pell_minus4(p);
            // (k sqrt p + h) / (k sqrt p - h) = (k sqrt p + h)^2 / 4 since p k^2 - h^2 = 4
            const long double kp = static_cast<long double>(pell.k) * std::sqrt(static_cast<long double>(p));
            const long double expected = (kp + pell.h) * (kp + pell.h) / 4.0L;
            const double ratio = sin_product_ratio(p);
            const double rel = static_cast<double>(std::abs(ratio - expected) / expected);
            j["h"] = pell.h;
            j["k_int"] = pell.k;
            j["ratio_rel_diff"] = rel;
            ok = ok && rel < 1e-9 && ratio != 1.0;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::precision_failure || p <= 400) throw;
            j["pell_skipped"] = "precision-failure";
        }
    }
    j["pass"] = ok;
    return j;
}

json verify_identity(i64 k, const RunConfig& cfg) {
    const std::vector<double> rhos = cfg.rho.empty() ? std::vector<double>{0.5, 0.25} : cfg.rho;
    double worst_ratio = 0.0;
    std::size_t checks = 0;
    bool ok = true;
    for (i64 m = 1; m < k; ++m) {
        if (gcd(m, k) != 1) continue;
        for (double rho : rhos) {
            const auto c = ap_identity_check(k, m, rho, cfg.N, cfg.Q);
            ok = ok && c.passed();
            worst_ratio = std::max(worst_ratio, c.discrepancy / c.bound);
            ++checks;
        }
    }
    return json{{"k", k}, {"checks", checks}, {"max_discrepancy_over_bound", worst_ratio}, {"pass", ok}};
}

json verify_nonvanishing(i64 k, double tol) {
    const auto group = enumerate_characters(factorize_modulus(k));
    double smallest = std::numeric_limits<double>::infinity();
    std::string where;
    for (const auto& chi : group) {
        if (classify(chi) == CharacterClass::principal) continue;
        const double a = std::abs(l_one_integral(chi).value);
        if (a < smallest) {
            smallest = a;
            where = chi.label();
        }
    }
    return json{{"k", k}, {"min_abs_l_one", smallest}, {"at", where}, {"pass", smallest > tol}};
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto& suite = cfg.suite;
    if (suite == "orthogonality") {
        const double tol = cfg.tol.value_or(1e-9);
        return run_suite(suite, moduli_range(cfg), [&](i64 k) { return verify_orthogonality(k, tol); }, out);
    }
    if (suite == "pole") {
        const double tol = cfg.tol.value_or(1e-2);
        return run_suite(suite, moduli_range(cfg), [&](i64 k) { return verify_pole(k, tol); }, out);
    }
    if (suite == "quadratic") {
        const double tol = cfg.tol.value_or(1e-6);
        return run_suite(suite, moduli_range(cfg), [&](i64 p) { return verify_quadratic(p, tol); }, out);
    }
    if (suite == "identity") {
        return run_suite(suite, moduli_range(cfg), [&](i64 k) { return verify_identity(k, cfg); }, out);
    }
    if (suite == "nonvanishing") {
        const double tol = cfg.tol.value_or(1e-6);
        return run_suite(suite, moduli_range(cfg), [&](i64 k) { return verify_nonvanishing(k, tol); }, out);
    }
    throw UsageError("unknown suite: " + suite);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dirichlet characters, L-values and primes in arithmetic progressions", "dirichlet-ap"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };
    auto add_k = [&](CLI::App* sub, const std::string& help) {
        sub->add_option("--k", cfg.k, help)->required()->check(CLI::PositiveNumber);
    };
    auto positive = CLI::PositiveNumber;

    auto* chars = app.add_subcommand("chars", "Character table mod k");
    add_k(chars, "Modulus");
    add_format(chars);

    auto* lvalue = app.add_subcommand("lvalue", "Evaluate L(s, chi)");
    lvalue->add_option("chi,--chi", cfg.chi, "Character label, e.g. chi[k=5;c=2]")->required();
    lvalue->add_option("--s", cfg.s, "Real argument s")->check(positive);
    lvalue->add_option("--method", cfg.method, "Evaluation method")
        ->check(CLI::IsMember({"series", "euler-product", "integral", "closed-form", "all"}));
    lvalue->add_option("--N", cfg.N, "Series cutoff")->check(positive);
    lvalue->add_option("--Q", cfg.Q, "Prime cutoff for the Euler product")->check(positive);
    lvalue->add_flag("--em-tail", cfg.em_tail, "Add the Euler-Maclaurin tail to the series");
    add_format(lvalue);

    auto* verify = app.add_subcommand("verify", "Run a verification suite over a range of moduli");
    verify->add_option("suite", cfg.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"orthogonality", "pole", "quadratic", "identity", "nonvanishing"}));
    verify->add_option("--k", cfg.k, "Largest modulus (largest prime for 'quadratic')")->check(positive);
    verify->add_option("--kmin", cfg.kmin, "Smallest modulus")->check(positive);
    verify->add_option("--moduli", cfg.moduli, "Explicit list of moduli (overrides --k/--kmin)");
    verify->add_option("--rho", cfg.rho, "rho values (identity suite)");
    verify->add_option("--N", cfg.N, "Prime cutoff for the progression sum")->check(positive);
    verify->add_option("--Q", cfg.Q, "Prime cutoff for log L")->check(positive);
    verify->add_option("--tol", cfg.tol, "Tolerance override")->check(positive);

    auto* census_cmd = app.add_subcommand("census", "Count primes <= N per residue class mod k");
    census_cmd->add_option("--N", cfg.N, "Sieve bound")->required()->check(positive);
    add_k(census_cmd, "Modulus");
    census_cmd->add_option("--out", cfg.out, "Output file (default stdout)");
    cfg.format = "json";
    census_cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    auto* quad = app.add_subcommand("quad", "Quadratic character data for an odd prime");
    add_k(quad, "Odd prime p");
    add_format(quad);

    auto* identity = app.add_subcommand("identity", "Check the progression prime-sum identity");
    add_k(identity, "Modulus");
    identity->add_option("--m", cfg.m, "Residue class")->required();
    identity->add_option("--rho", cfg.rho, "rho = s - 1")->expected(1)->check(positive);
    identity->add_option("--N", cfg.N, "Prime cutoff for the progression sum")->check(positive);
    identity->add_option("--Q", cfg.Q, "Prime cutoff for log L")->check(positive);
    add_format(identity);

    auto* pole = app.add_subcommand("pole", "Residue of the principal L-series at s = 1");
    add_k(pole, "Modulus");
    pole->add_option("--rho", cfg.rho, "Strictly decreasing rho grid")->check(positive);
    add_format(pole);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    if (census_cmd->parsed() && !census_cmd->count("--format")) cfg.format = "csv";

    try {
        if (chars->parsed()) return cmd_chars(cfg, out);
        if (lvalue->parsed()) return cmd_lvalue(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (census_cmd->parsed()) return cmd_census(cfg, out);
        if (quad->parsed()) return cmd_quad(cfg, out);
        if (identity->parsed()) return cmd_identity(cfg, out);
        if (pole->parsed()) return cmd_pole(cfg, out);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace dirichlet::cli
