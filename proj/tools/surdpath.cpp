// surdpath - Calkin-Wilf trees of quadratic surds, left-positive paths and
// their continued-fraction bridge, from the command line.
//
// Exit codes: 0 success, 2 input validation error, 3 step budget exceeded,
// 4 a verified property failed (oracle mismatch, sweep failure, FAIL line).

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <surdpath/surdpath.hpp>

namespace {

using namespace surdpath;

EmitFormat parse_format(const std::string& name) {
    if (name == "text") return EmitFormat::Text;
    if (name == "dot") return EmitFormat::Dot;
    if (name == "json") return EmitFormat::Json;
    fail(Errc::UnsupportedFormat, "unknown format '" + name + "'");
}

int64_t env_max_steps() {
    const char* raw = std::getenv("SURDPATH_MAX_STEPS");
    if (!raw) return 0;
    try {
        size_t used = 0;
        int64_t v = std::stoll(raw, &used);
        if (used != std::string(raw).size() || v < 1)
            fail(Errc::ParseError, "SURDPATH_MAX_STEPS must be a positive integer");
        return v;
    } catch (const SurdError&) {
        throw;
    } catch (const std::exception&) {
        fail(Errc::ParseError, "SURDPATH_MAX_STEPS must be a positive integer");
    }
}

int64_t effective_budget(int64_t flag_value) { return flag_value > 0 ? flag_value : env_max_steps(); }

struct RationalArg {
    int64_t num = 0;
    int64_t den = 1;
};

RationalArg parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        RationalArg r;
        r.num = std::stoll(text.substr(0, slash));
        if (slash != std::string::npos) r.den = std::stoll(text.substr(slash + 1));
        return r;
    } catch (const std::exception&) {
        fail(Errc::ParseError, "expected an integer or f/g, got '" + text + "'");
    }
}

int cmd_lpp(const std::string& spec, int64_t max_steps, const std::string& format, bool annotate) {
    QuadraticSurd alpha = parse_surd(spec);
    LppTrace trace = trace_lpp(alpha, effective_budget(max_steps));
    EmitFormat fmt = parse_format(format);
    EmitOptions opt{annotate, 12};
    if (fmt == EmitFormat::Json) {
        nlohmann::json j{{"schema", kJsonSchema}, {"kind", "lpp"}};
        j["trace"] = json_of(trace, opt);
        j["palindrome"] = json_of(palindrome_checks(trace));
        j["certificate"] = json_of(irrationality_certificate(trace));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    emit(trace, fmt, std::cout, opt);
    if (fmt == EmitFormat::Text) {
        emit(palindrome_checks(trace), fmt, std::cout);
        emit(irrationality_certificate(trace), fmt, std::cout);
    }
    return 0;
}

int cmd_cf(const std::string& spec, int64_t terms, bool oracle_check, const std::string& format) {
    QuadraticSurd x = parse_surd(spec);
    CfExpansion e = cf_expand(x, terms > 0 ? static_cast<size_t>(terms) : 0);
    bool oracle_ok = true;
    if (oracle_check) {
        CfExpansion literal = cf_expand(x, e.terms.size(), /*exact_terms=*/true);
        oracle_ok = literal.terms == oracle::oracle_cf(x, e.terms.size());
    }
    EmitFormat fmt = parse_format(format);
    if (fmt == EmitFormat::Json) {
        nlohmann::json j = json_of(e);
        if (oracle_check) j["oracle_check"] = oracle_ok ? "PASS" : "FAIL";
        std::cout << j.dump(2) << "\n";
    } else {
        emit(e, fmt, std::cout);
        if (oracle_check) std::cout << "oracle check: " << (oracle_ok ? "PASS" : "FAIL") << "\n";
    }
    if (!oracle_ok) {
        std::cerr << "oracle disagrees with the exact expansion of " << format_surd(x) << "\n";
        return 4;
    }
    return 0;
}

int cmd_sqrt_cf(const std::string& r_text, int64_t terms, const std::string& format) {
    RationalArg r = parse_rational(r_text);
    LegendreReport rep = sqrt_cf(r.num, r.den, terms > 0 ? static_cast<size_t>(terms) : 0);
    emit(rep, parse_format(format), std::cout);
    if (!rep.ok()) {
        std::cerr << "Legendre shape failed for R = " << r.num << "/" << r.den << "\n";
        return 4;
    }
    return 0;
}

int cmd_galois(const std::string& spec, int64_t horizon, const std::string& format) {
    QuadraticSurd x = parse_surd(spec);
    GaloisReport rep = galois_check(x, horizon > 0 ? static_cast<size_t>(horizon) : 0);
    emit(rep, parse_format(format), std::cout);
    if (!rep.ok()) {
        std::cerr << "Galois identities failed for " << format_surd(x) << "\n";
        return 4;
    }
    return 0;
}

int cmd_tree(const std::string& spec, int depth, const std::string& format, bool annotate) {
    QuadraticSurd root = parse_surd(spec);
    TreeNode tree = build_tree(root, depth);
    emit(tree, parse_format(format), std::cout, EmitOptions{annotate, 12});
    return 0;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
    os << "N,p,q,T,m,has_symmetry,palindrome_s,palindrome_cf,cf_period_len,checks_passed\n";
    for (const auto& r : rows) {
        os << r.N << "," << r.p << "," << r.q << "," << r.period << ",";
        if (r.symmetry_index) os << *r.symmetry_index;
        os << "," << (r.symmetry_index ? 1 : 0) << "," << (r.palindrome_s ? 1 : 0) << ","
           << (r.palindrome_cf ? 1 : 0) << "," << r.cf_period_len << ","
           << (r.checks_passed ? 1 : 0) << "\n";
    }
}

void write_sweep_json(const std::vector<SweepRow>& rows, std::ostream& os) {
    nlohmann::json out{{"schema", kJsonSchema}, {"kind", "sweep"}};
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j{{"N", r.N},
                         {"p", r.p},
                         {"q", r.q},
                         {"T", r.period},
                         {"has_symmetry", r.symmetry_index.has_value()},
                         {"palindrome_s", r.palindrome_s},
                         {"palindrome_cf", r.palindrome_cf},
                         {"cf_period_len", r.cf_period_len},
                         {"checks_passed", r.checks_passed}};
        if (r.symmetry_index) j["m"] = *r.symmetry_index;
        else j["m"] = nullptr;
        if (!r.checks_passed) j["first_failure"] = r.first_failure;
        arr.push_back(j);
    }
    out["rows"] = arr;
    os << out.dump(2) << "\n";
}

int cmd_sweep(int64_t n_max, const std::string& out_path, unsigned jobs,
              const std::string& format) {
    if (n_max < 2) fail(Errc::PreconditionViolated, "--n-max must be at least 2");
    std::vector<SweepRow> rows = run_sweep(n_max, jobs);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) fail(Errc::PreconditionViolated, "cannot open output file " + out_path);
        os = &file;
    }
    if (format == "json") write_sweep_json(rows, *os);
    else write_sweep_csv(rows, *os);
    for (const auto& r : rows) {
        if (!r.checks_passed) {
            std::cerr << "sweep check failed at N=" << r.N << " p=" << r.p << " q=" << r.q << ": "
                      << r.first_failure << "\n"
                      << "reproduce with: surdpath lpp \""
                      << format_surd(make_surd(r.N, 1, r.p, r.q)) << "\"\n";
            return 4;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Calkin-Wilf trees of quadratic surds: left-positive paths, continued "
                 "fractions, and Legendre/Galois verification"};
    app.require_subcommand(1);

    std::string spec, format = "text", out_path, r_text;
    int64_t max_steps = 0, terms = 0, horizon = 0, n_max = 0;
    int depth = 3;
    unsigned jobs = 1;
    bool oracle_check = false, annotate = false;

    auto* lpp = app.add_subcommand("lpp", "Trace one period of the left-positive path");
    lpp->add_option("spec", spec, "surd, e.g. \"sqrt(5)\" or \"(sqrt(19)+4)/3\"")->required();
    lpp->add_option("--max-steps", max_steps, "step budget (default: pigeonhole bound)");
    lpp->add_option("--format", format, "text|dot|json");
    lpp->add_flag("--annotate", annotate, "add 12-digit decimal annotations");

    auto* cf = app.add_subcommand("cf", "Regular continued fraction expansion");
    cf->add_option("spec", spec)->required();
    cf->add_option("--terms", terms, "term budget (default: expand to the period)");
    cf->add_flag("--oracle-check", oracle_check, "re-derive every term with the interval oracle");
    cf->add_option("--format", format, "text|json");

    auto* sqrtcf = app.add_subcommand("sqrt-cf", "CF of sqrt(R) with the Legendre shape report");
    sqrtcf->add_option("R", r_text, "rational R > 1 as \"f/g\" or an integer")->required();
    sqrtcf->add_option("--terms", terms, "term budget");
    sqrtcf->add_option("--format", format, "text|json");

    auto* galois = app.add_subcommand("galois", "Galois checks for a reduced surd");
    galois->add_option("spec", spec)->required();
    galois->add_option("--horizon", horizon, "terms of a_n = t_n to verify (default: 2 periods)");
    galois->add_option("--format", format, "text|json");

    auto* tree = app.add_subcommand("tree", "Bounded-depth Calkin-Wilf tree");
    tree->add_option("spec", spec)->required();
    tree->add_option("--depth", depth, "tree depth (default 3, cap 12)");
    tree->add_option("--format", format, "text|dot|json");
    tree->add_flag("--annotate", annotate, "add 12-digit decimal annotations");

    auto* sweep = app.add_subcommand("sweep", "Verify all roots with N <= n-max");
    sweep->add_option("--n-max", n_max, "largest radicand")->required();
    sweep->add_option("--out", out_path, "output file (default: stdout)");
    sweep->add_option("--jobs", jobs, "worker threads");
    sweep->add_option("--format", format, "csv|json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(lpp)) return cmd_lpp(spec, max_steps, format, annotate);
        if (app.got_subcommand(cf)) return cmd_cf(spec, terms, oracle_check, format);
        if (app.got_subcommand(sqrtcf)) return cmd_sqrt_cf(r_text, terms, format);
        if (app.got_subcommand(galois)) return cmd_galois(spec, horizon, format);
        if (app.got_subcommand(tree)) return cmd_tree(spec, depth, format, annotate);
        if (app.got_subcommand(sweep)) return cmd_sweep(n_max, out_path, jobs, format);
    } catch (const surdpath::SurdError& e) {
        std::cerr << e.what() << "\n";
        return e.code() == surdpath::Errc::StepBudgetExceeded ? 3 : 2;
    }
    return 0;
}
