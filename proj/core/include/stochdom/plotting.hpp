#pragma once

// Deterministic SVG rendering of the cumulative difference plot and JSON
// report export.  No timestamps, no generated ids: identical inputs yield
// byte-identical output on every platform.

#include <string>
#include <vector>

#include "stochdom/bootstrap.hpp"
#include "stochdom/quantile_rv.hpp"

namespace stochdom {

struct PlotSpec {
    std::string title = "Cumulative difference plot";
    std::string label_a = "A";
    std::string label_b = "B";
    int width = 900;    // pixels, >= 200
    int height = 560;   // pixels, >= 200
    double alpha = 0.05;          // confidence level shown in the legend
    bool show_triangle = true;    // light feasible-triangle region
    std::size_t max_points = 4096;  // knot-decimation threshold
};

// Affine data->pixel mapping for the fixed axes [0,1] x [-1,1].
struct Viewport {
    double margin_left = 0.0, margin_top = 0.0;
    double plot_width = 0.0, plot_height = 0.0;

    double px(double x) const { return margin_left + x * plot_width; }
    double py(double y) const { return margin_top + (1.0 - y) * 0.5 * plot_height; }
    double x_from_px(double p) const { return (p - margin_left) / plot_width; }
    double y_from_px(double p) const { return 1.0 - 2.0 * (p - margin_top) / plot_height; }
};

Viewport make_viewport(const PlotSpec& spec);

// Standalone SVG 1.1 document: axes, zero line, feasible triangle, optional
// translucent band ribbon, solid difference polyline.  band may be null;
// when present its grid must match the curve's (input_error otherwise).
// Decimation beyond spec.max_points always keeps the first and last knots
// and every sign change.
std::string render_svg(const DiffCurve& d, const ConfidenceBand* band,
                       const PlotSpec& spec = {});

struct SignInterval {
    int sign = 0;       // +1, -1, or 0 for an exactly-tied stretch
    double from = 0.0;  // in [0, 1]
    double to = 0.0;
};

// Maximal intervals of constant diff sign, in order. Isolated zero points
// between two runs carry no length and are dropped; zero runs of positive
// length are reported with sign 0.
std::vector<SignInterval> sign_intervals(const DiffCurve& d);

// JSON report: c_p, c_d, c_p_interval, c_d_interval, n, alpha, resamples,
// seed, verdict, quantile_crossings (the sign intervals of the curve).
std::string export_report(const SampleSet& a, const SampleSet& b,
                          const DiffCurve& d, const ConfidenceBand& band);

}  // namespace stochdom
