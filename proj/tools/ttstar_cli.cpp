// Command-line front end for the exact tt*-geometry toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "ttstar/cv_structure.hpp"
#include "ttstar/gamma_structure.hpp"
#include "ttstar/golden.hpp"
#include "ttstar/json_io.hpp"
#include "ttstar/painleve.hpp"
#include "ttstar/qde_p1.hpp"
#include "ttstar/sl2.hpp"

using namespace ttstar;

namespace {

struct RunConfig {
    long order = 6;
    std::string format = "pretty";  // json | csv | pretty
    std::map<std::string, double> tol;
    unsigned long seed = 1;
    std::string data_dir = TTSTAR_DATA_DIR;
};

double tol_or(const RunConfig& cfg, const std::string& name, double dflt) {
    auto it = cfg.tol.find(name);
    return it == cfg.tol.end() ? dflt : it->second;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_jfun(const RunConfig& cfg) {
    auto [j0, j1] = j_coeffs(cfg.order);
    if (cfg.format == "json") {
        Json out;
        out["order"] = cfg.order;
        out["J0"] = to_json(j0);
        out["J1"] = to_json(j1);
        emit(out);
    } else {
        std::cout << "J0 =\n" << j0.str() << "\nJ1 =\n" << j1.str() << "\n";
    }
    return 0;
}

int cmd_gamma(const RunConfig& cfg) {
    GramResult g = gram_matrix();
    double tol = tol_or(cfg, "gamma", 1e-10);
    double worst_galois = 0;
    for (long n = -5; n <= 5; ++n)
        worst_galois = std::max(worst_galois, galois_residual(sheaf_O(n)));
    worst_galois = std::max(worst_galois, galois_residual(sheaf_O_point()));

    Json out;
    out["gram_exact"] = {{g.exact[0][0], g.exact[0][1]}, {g.exact[1][0], g.exact[1][1]}};
    out["gram_numeric"] = {{g.numeric[0][0], g.numeric[0][1]}, {g.numeric[1][0], g.numeric[1][1]}};
    out["pairing_residual"] = g.max_residual;
    out["galois_residual"] = worst_galois;
    out["det"] = g.det;
    emit(out);
    bool ok = g.max_residual < tol && worst_galois < tol && (g.det == 1 || g.det == -1);
    return ok ? 0 : 1;
}

int cmd_birkhoff(const RunConfig& cfg, const std::string& which) {
    Pipeline p = Pipeline::build(cfg.order);
    LoopMatrix m = which == "S"        ? p.S
                   : which == "Ctilde" ? p.factors.ctilde
                   : which == "Btilde" ? p.factors.btilde
                                       : factor_B(cfg.order) * p.factors.btilde;  // BBtilde
    if (cfg.format == "json") {
        Json out;
        out["order"] = cfg.order;
        out["which"] = which;
        out["matrix"] = to_json(m);
        emit(out);
    } else {
        std::cout << which << " at order " << cfg.order << ":\n" << m.str();
    }
    return 0;
}

int cmd_expand_h(const RunConfig& cfg) {
    MetricSeries m = metric_h(cfg.order);
    if (cfg.format == "csv") {
        std::cout << "n,a_exp,coeff\n";
        for (long n = 0; n < static_cast<long>(m.F.size()); ++n) {
            const auto& terms = m.F[n].terms();
            for (auto it = terms.rbegin(); it != terms.rend(); ++it)
                std::cout << n << "," << it->first << "," << rational_to_string(it->second) << "\n";
        }
    } else if (cfg.format == "json") {
        Json out;
        out["order"] = cfg.order;
        Json fs = Json::array();
        for (const auto& f : m.F) fs.push_back(to_json(f));
        out["F"] = std::move(fs);
        emit(out);
    } else {
        for (long n = 0; n < static_cast<long>(m.F.size()); ++n)
            std::cout << "F_" << n << " = " << m.F[n].str() << "\n";
    }
    return 0;
}

int cmd_cv_check(const RunConfig& cfg) {
    CVData d = cv_data(cfg.order);
    auto eqs = check_cv_equations(d);
    bool ok = true;
    for (const auto& eq : eqs) {
        std::string status =
            eq.zero ? "0" : "NONZERO (" + std::to_string(eq.nonzero_terms) + " terms)";
        std::printf("%-46s %s\n", eq.name.c_str(), status.c_str());
        ok = ok && eq.zero;
    }
    return ok ? 0 : 1;
}

int cmd_oracle(const RunConfig& cfg) {
    auto F = oracle_fn(cfg.order);
    if (cfg.format == "csv") {
        std::cout << "n,a_exp,coeff\n";
        for (long n = 0; n < static_cast<long>(F.size()); ++n) {
            const auto& terms = F[n].terms();
            for (auto it = terms.rbegin(); it != terms.rend(); ++it)
                std::cout << n << "," << it->first << "," << rational_to_string(it->second) << "\n";
        }
    } else {
        for (long n = 0; n < static_cast<long>(F.size()); ++n)
            std::cout << "F_" << n << " = " << F[n].str() << "\n";
    }
    return 0;
}

int cmd_cross_check(const RunConfig& cfg) {
    bool ok = cross_check(cfg.order);
    std::cout << (ok ? "recursion and factorization agree through order "
                     : "MISMATCH between recursion and factorization at order ")
              << cfg.order << "\n";
    return ok ? 0 : 1;
}

int cmd_ode(const RunConfig& cfg, double qmin, double qmax, long samples, bool csv) {
    OdeOptions opts;
    opts.rel_tol = tol_or(cfg, "ode", opts.rel_tol);
    if (csv) std::cout << "q_abs,h_ode,h_series,h_asymptotic\n";
    for (long i = 0; i < samples; ++i) {
        double t = samples == 1 ? 0.0 : static_cast<double>(i) / (samples - 1);
        double r = qmin * std::pow(qmax / qmin, t);
        double ho = ode_h(r, opts);
        double hs = series_h(r, opts.series_order);
        double ha = asymptotic_h(r);
        if (csv)
            std::printf("%.12g,%.12g,%.12g,%.12g\n", r, ho, hs, ha);
        else
            std::printf("|q| = %-12.6g h_ode = %-16.10g h_series = %-16.10g h_asym = %-16.10g\n", r,
                        ho, hs, ha);
    }
    return 0;
}

int cmd_total_curvature(const RunConfig& cfg) {
    CurvatureOptions opts;
    opts.rel_tol = tol_or(cfg, "curvature", opts.rel_tol);
    CurvatureResult c = total_curvature(opts);
    Json out;
    out["radial"] = c.radial;
    out["total"] = c.total;
    out["total_full_circle"] = c.total_gauss;
    out["reference"] = -M_PI / 4.0;
    emit(out);
    return 0;
}

int cmd_sl2_check(const std::string& space, long nmax) {
    bool ok = true;
    auto run = [&](const std::string& name, const GradedSpace& v) {
        ExpLemmaReport rep = exp_lemma_check(v);
        Sl2Triple t = lefschetz_triple(v);
        WeightFiltration wa = weight_filtration(t.raising);
        bool w_ok = true;
        long n = v.middle();
        for (long k = 0; k <= n; ++k) {
            auto ge = v.slice_ge(n - k);
            RationalMatrix coord(v.dim(), static_cast<long>(ge.size()));
            for (size_t j = 0; j < ge.size(); ++j) coord.at(ge[j], j) = 1;
            w_ok = w_ok && same_span(wa.w_basis(k), coord);
        }
        std::printf("%-8s sl2 relations: ok   exp-lemma: %s (%ld cases)   weight filtration: %s\n",
                    name.c_str(), rep.ok ? "ok" : "FAIL", rep.cases_checked, w_ok ? "ok" : "FAIL");
        ok = ok && rep.ok && w_ok;
    };
    if (space == "Pn") {
        for (long n = 1; n <= nmax; ++n)
            run("P^" + std::to_string(n), GradedSpace::projective_space(n));
    } else {
        run("P1xP1", GradedSpace::p1_times_p1());
    }
    return ok ? 0 : 1;
}

int cmd_transversality(const std::string& space, long n, const std::string& ts_csv,
                       const std::string& model) {
    GradedSpace v =
        space == "P1xP1" ? GradedSpace::p1_times_p1() : GradedSpace::projective_space(n);
    std::vector<Rational> ts;
    std::stringstream ss(ts_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double d = std::stod(item);
        ts.push_back(frac(static_cast<long>(d * 10000), 10000));
    }
    if (ts.empty()) throw CLI::ValidationError("--t needs at least one value");
    RationalMatrix kappa = model == "perturbed" ? kappa_perturbed_model(v, frac(-57721, 25000))
                                                : kappa_diag_model(v);
    TransversalityReport rep = transversality_rank(v, kappa, ts);
    for (const auto& c : rep.cases)
        std::printf("k = %ld  t = %-10s rank %s (intersection dim %ld, expected %ld)\n", c.k,
                    rational_to_string(c.t).c_str(), c.full_rank ? "full" : "DEFICIENT",
                    c.intersection_dim, c.expected_dim);
    std::printf("t -> infinity limit map invertible: %s\n", rep.limit_ok ? "yes" : "NO");
    return (rep.full_rank_large_t && rep.limit_ok) ? 0 : 1;
}

int cmd_verify_paper_table(const RunConfig& cfg) {
    std::vector<APoly> golden = load_golden_table(cfg.data_dir + "/h_expansion_golden.csv");
    long nmax = static_cast<long>(golden.size()) - 1;
    MetricSeries m = metric_h(nmax);
    long mismatches = 0, checked = 0;
    for (long n = 0; n <= nmax; ++n) {
        long top = std::max(golden[n].is_zero() ? 0 : golden[n].max_exp(),
                            m.F[n].is_zero() ? 0 : m.F[n].max_exp());
        for (long e = top; e >= 0; --e) {
            Rational got = m.F[n].coeff(e);
            Rational want = golden[n].coeff(e);
            if (got == 0 && want == 0) continue;
            ++checked;
            if (got == want) continue;
            ++mismatches;
            std::printf("MISMATCH n=%ld a^%ld: computed %s, table %s\n", n, e,
                        rational_to_string(got).c_str(), rational_to_string(want).c_str());
        }
    }
    std::printf("%ld coefficients checked through |q|^%ld, %ld mismatches\n", checked, 2 * nmax,
                mismatches);
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tt*-geometry of the quantum cohomology of P^1"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("TTSTAR_ORDER")) cfg.order = std::atol(env);
    if (const char* env = std::getenv("TTSTAR_DATA")) cfg.data_dir = env;

    app.add_option("--order,-n", cfg.order, "Expansion order")->capture_default_str();
    app.add_option("--format", cfg.format, "Output format: pretty|json|csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--tol", cfg.tol, "Tolerance overrides, name=value");
    app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
    app.add_option("--data", cfg.data_dir, "Directory with bundled data tables");

    bool jfun_json = false;
    auto* jfun = app.add_subcommand("jfun", "J-function components J0, J1");
    jfun->add_flag("--json", jfun_json, "Emit JSON");

    auto* gamma = app.add_subcommand("gamma", "Integral-structure pairings and Galois residuals");
    bool gram = false;
    gamma->add_flag("--gram", gram, "Print the Gram matrix report");

    auto* birk = app.add_subcommand("birkhoff", "Loop-group factorization data");
    std::string emit_which = "BBtilde";
    birk->add_option("--emit", emit_which, "Which matrix: BBtilde|S|Btilde|Ctilde")
        ->check(CLI::IsMember({"BBtilde", "S", "Btilde", "Ctilde"}));
    bool birk_json = false;
    birk->add_flag("--json", birk_json, "Emit JSON");

    app.add_subcommand("expand-h", "Metric expansion coefficients F_n");
    app.add_subcommand("cv-check", "Verify the structure equations symbolically");
    app.add_subcommand("oracle", "Metric coefficients from the scalar-equation recursion");
    app.add_subcommand("cross-check", "Compare the recursion against the factorization");

    auto* ode = app.add_subcommand("ode", "Radial sinh-Gordon evaluation of h");
    double qmin = 0.01, qmax = 10.0;
    long samples = 25;
    bool ode_csv = false;
    ode->add_option("--qmin", qmin, "Smallest |q|")->capture_default_str();
    ode->add_option("--qmax", qmax, "Largest |q|")->capture_default_str();
    ode->add_option("--samples", samples, "Number of log-spaced samples")->capture_default_str();
    ode->add_flag("--csv", ode_csv, "CSV output");

    app.add_subcommand("total-curvature", "Total curvature of the moduli metric");

    auto* sl2 = app.add_subcommand("sl2-check", "Lefschetz sl2 suite");
    std::string space = "Pn";
    long nmax = 6;
    sl2->add_option("--space", space, "Pn or P1xP1")->check(CLI::IsMember({"Pn", "P1xP1"}));
    sl2->add_option("--n", nmax, "Largest projective space")->capture_default_str();

    auto* tr = app.add_subcommand("transversality", "Large-t transversality ranks");
    std::string tr_space = "Pn";
    long tr_n = 3;
    std::string tr_ts = "0.1,1,10";
    std::string tr_model = "diag";
    tr->add_option("--space", tr_space, "Pn or P1xP1")->check(CLI::IsMember({"Pn", "P1xP1"}));
    tr->add_option("--n", tr_n, "Projective space dimension")->capture_default_str();
    tr->add_option("--t", tr_ts, "Comma-separated t values")->capture_default_str();
    tr->add_option("--model", tr_model, "Involution model: diag|perturbed")
        ->check(CLI::IsMember({"diag", "perturbed"}));

    app.add_subcommand("verify-paper-table",
                       "Diff the computed expansion against the bundled table");

    // global flags (--order, --format, ...) may follow the subcommand
    for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; }))
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cfg.order < 0) throw CLI::ValidationError("--order must be >= 0");
        if (jfun->parsed()) {
            if (jfun_json) cfg.format = "json";
            return cmd_jfun(cfg);
        }
        if (gamma->parsed()) return cmd_gamma(cfg);
        if (birk->parsed()) {
            if (birk_json) cfg.format = "json";
            return cmd_birkhoff(cfg, emit_which);
        }
        if (app.get_subcommand("expand-h")->parsed()) return cmd_expand_h(cfg);
        if (app.get_subcommand("cv-check")->parsed()) return cmd_cv_check(cfg);
        if (app.get_subcommand("oracle")->parsed()) return cmd_oracle(cfg);
        if (app.get_subcommand("cross-check")->parsed()) return cmd_cross_check(cfg);
        if (ode->parsed()) return cmd_ode(cfg, qmin, qmax, samples, ode_csv);
        if (app.get_subcommand("total-curvature")->parsed()) return cmd_total_curvature(cfg);
        if (sl2->parsed()) return cmd_sl2_check(space, nmax);
        if (tr->parsed()) return cmd_transversality(tr_space, tr_n, tr_ts, tr_model);
        if (app.get_subcommand("verify-paper-table")->parsed()) return cmd_verify_paper_table(cfg);
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
