// sdcmp: compare two samples (or two mixture models) through stochastic
// dominance.  Subcommands:
//   compare     full empirical pipeline on two sample files
//   analytic    closed-form measures on two mixture-spec files
//   properties  property matrix of the dominance measures
//
// Exit codes: 0 success, 1 internal/numeric failure, 2 invalid input,
// 3 --verify mismatch, 4 property-matrix mismatch.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stochdom/bootstrap.hpp"
#include "stochdom/errors.hpp"
#include "stochdom/estimators.hpp"
#include "stochdom/measures.hpp"
#include "stochdom/mixture.hpp"
#include "stochdom/oracle.hpp"
#include "stochdom/plotting.hpp"
#include "stochdom/properties.hpp"
#include "stochdom/quantile_rv.hpp"
#include "stochdom/rng.hpp"
#include "stochdom/samples.hpp"

namespace {

struct CompareOptions {
    std::string path_a;
    std::string path_b;
    double alpha = 0.05;
    std::size_t resamples = 1000;
    std::uint64_t seed = 42;
    bool maximize = false;
    std::string out_svg;
    std::string out_report;
    std::string out_csv;
    bool verify = false;
};

struct AnalyticOptions {
    std::string path_a;
    std::string path_b;
    double tol = 1e-8;
    std::size_t n = 0;
    std::uint64_t seed = 42;
};

struct PropertiesOptions {
    std::string measure = "all";
    int trials = 50;
    std::uint64_t seed = 42;
    double tol = 1e-4;
    std::string out_report;
};

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw stochdom::input_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out)
        throw stochdom::input_error("write failure on '" + path + "'");
}

const char* verdict_from_curve(const stochdom::DiffCurve& d) {
    bool has_pos = false, has_neg = false;
    for (const stochdom::SignInterval& r : stochdom::sign_intervals(d)) {
        if (r.sign > 0) has_pos = true;
        if (r.sign < 0) has_neg = true;
    }
    if (has_pos && has_neg) return "cross";
    if (has_pos) return "a_dominates";
    if (has_neg) return "b_dominates";
    return "equal";
}

// Runs the empirical pipeline on two loaded sample sets and prints the
// one-line summary.  Returns 3 when --verify detects a mismatch.
int run_compare_pipeline(std::vector<double> va, std::vector<double> vb,
                         const CompareOptions& opt) {
    using namespace stochdom;
    if (opt.maximize) {
        for (double& v : va) v = -v;
        for (double& v : vb) v = -v;
    }
    const SampleSet a = make_sample_set(std::move(va));
    const SampleSet b = make_sample_set(std::move(vb));
    if (a.size() != b.size())
        throw input_error("sample files must contain the same number of values (got " +
                          std::to_string(a.size()) + " and " + std::to_string(b.size()) +
                          ")");
    if (a.size() < 100)
        std::cerr << "warning: sample size " << a.size()
                  << " is below the recommended minimum of 100; estimates may be "
                     "unstable\n";

    const double cp = estimate_c_p(a, b);
    const double cd = estimate_c_d(a, b);
    const QuantilePair qp = build_quantile_pair(a, b);
    const DiffCurve d = diff_curve(qp);
    const ConfidenceBand band = bootstrap_band(a, b, opt.alpha, opt.resamples, opt.seed);
    const BandBounds bounds = band_bounds(band);
    const char* verdict = verdict_from_curve(d);

    if (!opt.out_svg.empty()) {
        PlotSpec spec;
        spec.alpha = opt.alpha;
        write_text_file(opt.out_svg, render_svg(d, &band, spec));
    }
    if (!opt.out_report.empty())
        write_text_file(opt.out_report, export_report(a, b, d, band) + "\n");
    if (!opt.out_csv.empty()) write_band_csv(band, d, opt.out_csv);

    std::printf("C_P=%.4f [%.4f,%.4f]  C_D=%.4f [%.4f,%.4f]  verdict=%s\n", cp,
                bounds.c_p_low, bounds.c_p_high, cd, bounds.c_d_low, bounds.c_d_high,
                verdict);

    if (opt.verify) {
        bool ok = true;
        const auto complain = [&ok](const std::string& what, double x, double y) {
            std::cerr << "verify mismatch: " << what << " (" << x << " vs " << y
                      << ")\n";
            ok = false;
        };
        const double cp_brute = brute_c_p(a, b);
        if (std::abs(cp - cp_brute) > 1e-12)
            complain("rank-based and pairwise probability estimates differ", cp,
                     cp_brute);
        const double cp_diff = c_p_from_diff(d);
        if (std::abs(cp - cp_diff) > 1e-9)
            complain("difference-curve area disagrees with probability estimate", cp,
                     cp_diff);
        const double cd_diff = c_d_from_diff(d);
        if (std::abs(cd - cd_diff) > 1e-9)
            complain("difference-curve sign lengths disagree with dominance estimate",
                     cd, cd_diff);
        // Band envelopes are stored in single precision, so a degenerate
        // (zero-spread) band can sit a few float ulps away from the exact
        // point estimate; the bracket check must tolerate that rounding.
        if (!(bounds.c_p_low <= cp + 1e-6 && cp <= bounds.c_p_high + 1e-6))
            complain("probability estimate escapes its band interval", cp,
                     bounds.c_p_low);
        if (!(bounds.c_d_low <= cd + 1e-6 && cd <= bounds.c_d_high + 1e-6))
            complain("dominance estimate escapes its band interval", cd,
                     bounds.c_d_low);
        if (!ok) return 3;
    }
    return 0;
}

int run_compare(const CompareOptions& opt) {
    return run_compare_pipeline(stochdom::read_sample_file(opt.path_a),
                                stochdom::read_sample_file(opt.path_b), opt);
}

std::string format_measure(const stochdom::MeasureValue& m) {
    if (m.infinite) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", m.value);
    return buf;
}

int run_analytic(const AnalyticOptions& opt) {
    using namespace stochdom;
    const MixtureModel a = load_mixture(opt.path_a);
    const MixtureModel b = load_mixture(opt.path_b);

    const MeasureValue cp = c_p_analytic(a, b, opt.tol);
    const MeasureValue cd = c_d_analytic(a, b, opt.tol);
    const DominanceVerdict verdict = classify(a, b);
    std::printf("C_P=%.6f (err<=%.1e)  C_D=%.6f (err<=%.1e)  verdict=%s\n", cp.value,
                cp.quadrature_error_estimate, cd.value, cd.quadrature_error_estimate,
                to_string(verdict).c_str());
    std::printf("reference measures:\n");
    for (const std::string& id : reference_measure_ids()) {
        const MeasureValue m = reference_measure(id, a, b, opt.tol);
        std::printf("  %-18s %s\n", id.c_str(), format_measure(m).c_str());
    }

    if (opt.n > 0) {
        std::printf("empirical pipeline on %zu fresh samples (seed %llu):\n", opt.n,
                    static_cast<unsigned long long>(opt.seed));
        CompareOptions copt;
        copt.seed = opt.seed;
        return run_compare_pipeline(sample(a, opt.n, detail::mix_seed(opt.seed, 1)),
                                    sample(b, opt.n, detail::mix_seed(opt.seed, 2)),
                                    copt);
    }
    return 0;
}

int run_properties(const PropertiesOptions& opt) {
    using namespace stochdom;
    std::vector<std::string> ids;
    if (opt.measure == "all")
        ids = property_measure_ids();
    else
        ids.push_back(opt.measure);

    PropertyTrialConfig cfg;
    cfg.trials = opt.trials;
    cfg.seed = opt.seed;
    cfg.tolerance = opt.tol;

    const auto& matrix = expected_property_matrix();
    bool all_match = true;
    std::string report_json = "[";
    std::printf("%-12s %s\n", "measure", "properties (p:pass f:fail)");
    for (std::size_t k = 0; k < ids.size(); ++k) {
        const PropertyReport report = run_property_suite(ids[k], cfg);
        const std::set<int> got = report.satisfied();

        std::string cells;
        for (const PropertyResult& r : report.results) {
            cells += " " + std::to_string(r.property_id) + ":";
            cells += r.passed ? "p" : "f";
        }
        const auto it = matrix.find(ids[k]);
        std::string verdict;
        if (it == matrix.end()) {
            verdict = "(no expectation)";
        } else if (got == it->second) {
            verdict = "matches expectation";
        } else {
            verdict = "MISMATCH";
            all_match = false;
        }
        std::printf("%-12s%s  %s\n", ids[k].c_str(), cells.c_str(), verdict.c_str());

        if (k) report_json += ",";
        report_json += "\n" + report.to_json();
    }
    report_json += "\n]\n";
    if (!opt.out_report.empty()) write_text_file(opt.out_report, report_json);
    return all_match ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-sample comparison through stochastic dominance"};
    app.require_subcommand(1);

    CompareOptions copt;
    CLI::App* cmp = app.add_subcommand("compare",
                                       "Empirical pipeline on two sample files");
    cmp->add_option("--a", copt.path_a, "Sample file for side A")->required();
    cmp->add_option("--b", copt.path_b, "Sample file for side B")->required();
    cmp->add_option("--alpha", copt.alpha, "Band miss probability (default 0.05)");
    cmp->add_option("--resamples", copt.resamples,
                    "Bootstrap resamples (default 1000)");
    cmp->add_option("--seed", copt.seed, "Bootstrap seed (default 42)");
    cmp->add_flag("--maximize", copt.maximize,
                  "Treat larger values as better (negates both samples)");
    cmp->add_option("--out", copt.out_svg, "Write the difference plot SVG here");
    cmp->add_option("--report", copt.out_report, "Write the JSON report here");
    cmp->add_option("--csv", copt.out_csv, "Write the band/curve CSV here");
    cmp->add_flag("--verify", copt.verify,
                  "Cross-check the fast paths against brute-force references");

    AnalyticOptions aopt;
    CLI::App* ana = app.add_subcommand("analytic",
                                       "Closed-form measures on two mixture specs");
    ana->add_option("--a", aopt.path_a, "Mixture JSON for side A")->required();
    ana->add_option("--b", aopt.path_b, "Mixture JSON for side B")->required();
    ana->add_option("--tol", aopt.tol, "Quadrature tolerance (default 1e-8)");
    ana->add_option("--n", aopt.n,
                    "Also sample n values per side and run the empirical pipeline");
    ana->add_option("--seed", aopt.seed, "Sampling seed (default 42)");

    PropertiesOptions popt;
    CLI::App* prp = app.add_subcommand("properties",
                                       "Property matrix of the dominance measures");
    prp->add_option("--measure", popt.measure,
                    "Measure id or 'all' (default all)");
    prp->add_option("--trials", popt.trials, "Random trials per property (default 50)");
    prp->add_option("--seed", popt.seed, "Trial seed (default 42)");
    prp->add_option("--tol", popt.tol, "Check tolerance (default 1e-4)");
    prp->add_option("--report", popt.out_report, "Write the JSON report here");

    try {
        app.parse(argc, argv);
        if (cmp->parsed()) return run_compare(copt);
        if (ana->parsed()) return run_analytic(aopt);
        if (prp->parsed()) return run_properties(popt);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const stochdom::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const stochdom::numeric_error& e) {
        std::cerr << "numeric failure: " << e.what()
                  << " (best estimate " << e.best_estimate << ")\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
