#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <random>

#include "swmap/io.hpp"
#include "swmap/sw.hpp"

using namespace swmap;
using io::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kInput = 2, kSolver = 3 };

json flag_deformation(const std::string& text)
{
    if (!text.empty() && text.front() == '[') {
        try {
            return json::parse(text);
        } catch (const json::parse_error&) {
            throw io::ConfigError("deformation matrix is not valid JSON");
        }
    }
    return text;
}

Morphism load_morphism(const std::string& path)
{
    return io::morphism_from_json(io::read_file(path));
}

// random data for the gauge identity checks
XPolynomial sample_poly(std::mt19937& rng, int n, int max_degree)
{
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    XPolynomial p(n);
    int terms = pick(1, 3);
    for (int t = 0; t < terms; ++t) {
        MultiIndex m(n);
        int d = pick(0, max_degree);
        for (int k = 0; k < d; ++k) {
            int i = pick(0, n - 1);
            m.set(i, m[i] + 1);
        }
        int c = 0;
        while (c == 0)
            c = pick(-3, 3);
        p.add_term(m, ThetaScalar(c));
    }
    return p;
}

AElement sample_field(std::mt19937& rng, int n, int max_degree)
{
    std::vector<XPolynomial> xi;
    for (int i = 0; i < n; ++i)
        xi.push_back(sample_poly(rng, n, max_degree));
    return AElement::degree1(std::move(xi));
}

VerificationReport residual_report(const Morphism& f)
{
    VerificationReport r;
    r.identity = "mc-residual";
    auto res = mc_residual(f);
    auto names = symbol_names(f.settings().theta, f.settings().theta_prime);
    for (std::size_t l = 0; l < res.size(); ++l) {
        r.degrees_checked.push_back(static_cast<int>(l + 1));
        ++r.checked;
        if (r.pass && !res[l].is_zero()) {
            r.pass = false;
            std::string text = io::to_string(res[l], names);
            r.witness = "order " + std::to_string(l + 1) + ": " + text.substr(0, text.find('\n'));
        }
    }
    return r;
}

void print_report(const VerificationReport& r, const std::string& label)
{
    std::cout << label << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.checked << " checked)";
    if (r.witness)
        std::cout << "  witness " << *r.witness;
    std::cout << "\n";
}

int run_solve(const io::SessionConfig& cfg, const std::string& out, bool as_json)
{
    MorphismSettings s = io::to_settings(cfg);
    Morphism f(s);
    json summary = json::array();
    for (int l = 1; l <= s.L; ++l) {
        auto t0 = std::chrono::steady_clock::now();
        f = extend_recursion(std::move(f), l);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        summary.push_back(json{{"order", l}, {"terms", f.at(l).size()}, {"seconds", secs}});
    }
    std::string text = io::dump(io::morphism_to_json(f));
    if (out.empty())
        std::cout << text;
    else
        io::write_file(out, text);
    std::ostream& log = out.empty() ? std::cerr : std::cout;
    if (as_json)
        log << io::dump(json{{"orders", summary}, {"out", out}});
    else
        for (const auto& e : summary)
            log << "order " << e["order"].get<int>() << ": " << e["terms"].get<std::size_t>() << " terms, "
                << e["seconds"].get<double>() << " s\n";
    return kOk;
}

int run_verify(const std::string& path, int degree, int samples, unsigned seed, int jobs, bool as_json,
               const std::string& report_path)
{
    Morphism f = load_morphism(path);
    const auto& s = f.settings();
    std::vector<std::pair<std::string, VerificationReport>> reports;
    for (int l = 1; l <= f.order(); ++l) {
        int d = std::min(degree, f.bound(l) / l);
        reports.emplace_back("component equations, order " + std::to_string(l) + ", basis degree " + std::to_string(d),
                             verify_component_equations(f, l, d, jobs));
    }
    reports.emplace_back("maurer-cartan residual", residual_report(f));
    std::mt19937 rng(seed);
    int field_degree = std::min(s.D, 2);
    for (int k = 0; k < samples; ++k) {
        AElement A = sample_field(rng, s.n, field_degree);
        XPolynomial l1 = sample_poly(rng, s.n, field_degree), l2 = sample_poly(rng, s.n, field_degree);
        reports.emplace_back("sw1, sample " + std::to_string(k), check_sw1(f, A, l1, f.order()));
        if (f.order() >= 2)
            reports.emplace_back("sw2, sample " + std::to_string(k), check_sw2(f, A, l1, l2, f.order()));
    }
    bool pass = true;
    json list = json::array();
    for (const auto& [label, r] : reports) {
        pass = pass && r.pass;
        json j = io::to_json(r);
        j["label"] = label;
        list.push_back(j);
    }
    json doc{{"schema_version", io::kSchemaVersion}, {"file", path}, {"seed", seed}, {"pass", pass}, {"reports", list}};
    if (!report_path.empty())
        io::write_file(report_path, io::dump(doc));
    if (as_json)
        std::cout << io::dump(doc);
    else {
        for (const auto& [label, r] : reports)
            print_report(r, label);
        std::cout << (pass ? "all checks passed" : "verification FAILED") << "\n";
    }
    return pass ? kOk : kFail;
}

int run_apply(const std::string& path, const std::string& field, const std::string& lambda, bool as_json)
{
    Morphism f = load_morphism(path);
    const auto& s = f.settings();
    AElement A = field.empty() ? AElement(s.n) : io::parse_field(field, s.n);
    XPolynomial lam = lambda.empty() ? XPolynomial(s.n) : io::parse_xpoly(lambda, s.n);
    AElement ahat = evaluate_gauge_field(f, A, f.order());
    XPolynomial lhat = evaluate_gauge_param(f, lam, A, f.order());
    auto names = symbol_names(s.theta, s.theta_prime);
    if (as_json) {
        std::cout << io::dump(json{{"A_hat", io::to_json(ahat)},
                                   {"lambda_hat", io::to_json(lhat)},
                                   {"F_hat", io::field_strength_json(ahat, s.theta_prime)}});
        return kOk;
    }
    std::cout << "A_hat = " << to_string(ahat, names) << "\n";
    std::cout << "lambda_hat = " << lhat.str(names) << "\n";
    return kOk;
}

int run_compare(const std::string& a, const std::string& b, bool as_json)
{
    Morphism f = load_morphism(a);
    Morphism g = load_morphism(b);
    CohomologyClassReport rep;
    try {
        rep = obstruction_class(f, g);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    auto names = symbol_names(f.settings().theta, f.settings().theta_prime);
    if (as_json) {
        json j = rep.order == 0 ? json{{"identical", true}} : io::to_json(rep, names);
        std::cout << io::dump(j);
        return kOk;
    }
    if (rep.order == 0) {
        std::cout << "identical\n";
        return kOk;
    }
    std::cout << "first differing order: " << rep.order << "\n";
    std::cout << "class: " << (rep.zero ? "zero (difference is exact)" : "nonzero") << "\n";
    if (!rep.zero)
        std::cout << "representative:\n" << io::to_string(rep.representative, names);
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Seiberg-Witten map as an A-infinity morphism between Weyl-Moyal algebras"};
    app.require_subcommand(1);

    io::SessionConfig cfg;
    std::string config_path, theta = "0", theta_prime = "sym", out;
    bool as_json = false;
    auto* solve = app.add_subcommand("solve", "solve the recursion and write a morphism file");
    solve->add_option("--config", config_path, "JSON config with n, theta, theta_prime, L, D");
    solve->add_option("--n", cfg.n, "dimension");
    solve->add_option("--theta", theta, "source deformation: 0, sym, or JSON matrix");
    solve->add_option("--theta-prime", theta_prime, "target deformation: 0, sym, or JSON matrix");
    solve->add_option("--L", cfg.L, "highest order");
    solve->add_option("--D", cfg.D, "x-degree bound for exact evaluation");
    solve->add_option("--out", out, "output file (stdout if omitted)");
    solve->add_option("--jobs", cfg.jobs, "worker threads");
    solve->add_option("--seed", cfg.seed, "seed recorded with the config");
    solve->add_flag("--json", as_json, "machine-readable summary");

    std::string file, file2, report_path, field, lambda;
    int degree = 3, samples = 3, jobs = 1;
    unsigned seed = 0;
    auto* verify = app.add_subcommand("verify", "check a morphism file");
    verify->add_option("file", file)->required();
    verify->add_option("--degree", degree, "basis x-degree for the component equations");
    verify->add_option("--samples", samples, "random gauge configurations for sw1/sw2");
    verify->add_option("--seed", seed, "seed for the gauge configurations");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--report", report_path, "write the JSON report here");
    verify->add_flag("--json", as_json, "print the JSON report");

    auto* apply = app.add_subcommand("apply", "evaluate A_hat and lambda_hat");
    apply->add_option("file", file)->required();
    apply->add_option("--A", field, "gauge field components a_1; ...; a_n, e.g. \"x2; 0\"");
    apply->add_option("--lambda", lambda, "gauge parameter, e.g. \"x1*x2 - 1/2\"");
    apply->add_flag("--json", as_json, "JSON output");

    auto* compare = app.add_subcommand("compare", "obstruction class between two morphisms");
    compare->add_option("first", file)->required();
    compare->add_option("second", file2)->required();
    compare->add_flag("--json", as_json, "JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            try {
                io::SessionConfig base;
                if (!config_path.empty())
                    base = io::config_from_json(io::read_file(config_path));
                // flags given on the command line override the config file
                if (solve->count("--n"))
                    base.n = cfg.n;
                if (solve->count("--L"))
                    base.L = cfg.L;
                if (solve->count("--D"))
                    base.D = cfg.D;
                if (solve->count("--jobs"))
                    base.jobs = cfg.jobs;
                if (solve->count("--seed"))
                    base.seed = cfg.seed;
                if (solve->count("--theta") || config_path.empty())
                    base.theta = flag_deformation(theta);
                if (solve->count("--theta-prime") || config_path.empty())
                    base.theta_prime = flag_deformation(theta_prime);
                io::to_settings(base);
                cfg = base;
            } catch (const std::exception& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return kInput;
            }
            try {
                return run_solve(cfg, out, as_json);
            } catch (const SolverError& e) {
                std::cerr << "solver assertion failed: " << e.what() << "\n";
                return kSolver;
            }
        }
        if (verify->parsed())
            return run_verify(file, degree, samples, seed, jobs, as_json, report_path);
        if (apply->parsed())
            return run_apply(file, field, lambda, as_json);
        if (compare->parsed())
            return run_compare(file, file2, as_json);
    } catch (const io::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    return kOk;
}
