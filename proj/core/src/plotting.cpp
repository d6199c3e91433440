// SVG rendering of the cumulative difference plot and the JSON report.
//
// Output is a pure function of the inputs: coordinates are formatted with
// fixed two-decimal precision through snprintf, elements are emitted in a
// fixed order, and nothing environmental (time, locale, pointers) leaks in.

#include "stochdom/plotting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "stochdom/errors.hpp"
#include "stochdom/estimators.hpp"

namespace stochdom {

namespace {

constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 44.0;
constexpr double kMarginBottom = 48.0;

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

int point_sign(double y) { return (y > 0.0) - (y < 0.0); }

// Knot indices kept for drawing: all of them when the curve is small,
// otherwise a uniform stride plus the endpoints and both sides of every
// sign change, so decimation can never erase a crossing.
std::vector<std::size_t> drawing_indices(const DiffCurve& d, std::size_t max_points) {
    const std::size_t count = d.x.size();
    std::set<std::size_t> keep;
    if (count <= max_points) {
        std::vector<std::size_t> all(count);
        for (std::size_t j = 0; j < count; ++j) all[j] = j;
        return all;
    }
    const std::size_t stride = (count + max_points - 1) / max_points;
    for (std::size_t j = 0; j < count; j += stride) keep.insert(j);
    keep.insert(count - 1);
    for (std::size_t j = 0; j + 1 < count; ++j)
        if (point_sign(d.y[j]) != point_sign(d.y[j + 1])) {
            keep.insert(j);
            keep.insert(j + 1);
        }
    return {keep.begin(), keep.end()};
}

}  // namespace

Viewport make_viewport(const PlotSpec& spec) {
    if (spec.width < 200 || spec.height < 200)
        throw input_error("plot dimensions must be at least 200x200 pixels");
    Viewport v;
    v.margin_left = kMarginLeft;
    v.margin_top = kMarginTop;
    v.plot_width = static_cast<double>(spec.width) - kMarginLeft - kMarginRight;
    v.plot_height = static_cast<double>(spec.height) - kMarginTop - kMarginBottom;
    return v;
}

std::string render_svg(const DiffCurve& d, const ConfidenceBand* band,
                       const PlotSpec& spec) {
    if (band != nullptr && (band->n != d.n || band->x.size() != d.x.size()))
        throw input_error("band and curve are on different grids");
    const Viewport v = make_viewport(spec);
    const std::vector<std::size_t> idx = drawing_indices(d, spec.max_points);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << spec.width << "\" height=\"" << spec.height << "\" viewBox=\"0 0 "
        << spec.width << " " << spec.height << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\""
        << spec.height << "\" fill=\"#ffffff\"/>\n";

    if (spec.show_triangle) {
        for (int orient : {1, -1}) {
            svg << "<polygon points=\"" << fmt(v.px(0.0)) << "," << fmt(v.py(0.0))
                << " " << fmt(v.px(0.5)) << "," << fmt(v.py(orient * 1.0)) << " "
                << fmt(v.px(1.0)) << "," << fmt(v.py(0.0))
                << "\" fill=\"#e8f0f8\" stroke=\"none\"/>\n";
        }
    }

    for (double tx = 0.0; tx <= 1.0001; tx += 0.25) {
        const double x = std::min(tx, 1.0);
        svg << "<line x1=\"" << fmt(v.px(x)) << "\" y1=\"" << fmt(v.py(-1.0))
            << "\" x2=\"" << fmt(v.px(x)) << "\" y2=\"" << fmt(v.py(1.0))
            << "\" stroke=\"#d0d0d0\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << fmt(v.px(x)) << "\" y=\""
            << fmt(v.py(-1.0) + 18.0)
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\" "
               "text-anchor=\"middle\">"
            << fmt_tick(x) << "</text>\n";
    }
    for (double ty = -1.0; ty <= 1.0001; ty += 0.5) {
        const double y = std::min(ty, 1.0);
        const bool zero = std::abs(y) < 1e-12;
        svg << "<line x1=\"" << fmt(v.px(0.0)) << "\" y1=\"" << fmt(v.py(y))
            << "\" x2=\"" << fmt(v.px(1.0)) << "\" y2=\"" << fmt(v.py(y))
            << "\" stroke=\"" << (zero ? "#888888" : "#d0d0d0")
            << "\" stroke-width=\"1\""
            << (zero ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
        svg << "<text x=\"" << fmt(v.px(0.0) - 8.0) << "\" y=\""
            << fmt(v.py(y) + 4.0)
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\" "
               "text-anchor=\"end\">"
            << fmt_tick(y) << "</text>\n";
    }

    if (band != nullptr) {
        svg << "<polygon points=\"";
        for (std::size_t k = 0; k < idx.size(); ++k) {
            const std::size_t j = idx[k];
            svg << (k ? " " : "") << fmt(v.px(band->x[j])) << ","
                << fmt(v.py(band->upper[j]));
        }
        for (std::size_t k = idx.size(); k-- > 0;) {
            const std::size_t j = idx[k];
            svg << " " << fmt(v.px(band->x[j])) << "," << fmt(v.py(band->lower[j]));
        }
        svg << "\" fill=\"#7ca6cf\" fill-opacity=\"0.45\" stroke=\"none\"/>\n";
    }

    svg << "<polyline points=\"";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const std::size_t j = idx[k];
        svg << (k ? " " : "") << fmt(v.px(d.x[j])) << "," << fmt(v.py(d.y[j]));
    }
    svg << "\" fill=\"none\" stroke=\"#1f3b63\" stroke-width=\"1.5\"/>\n";

    svg << "<rect x=\"" << fmt(v.px(0.0)) << "\" y=\"" << fmt(v.py(1.0))
        << "\" width=\"" << fmt(v.plot_width) << "\" height=\""
        << fmt(v.plot_height)
        << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    svg << "<text x=\"" << fmt(v.px(0.5)) << "\" y=\"" << fmt(v.margin_top - 16.0)
        << "\" font-family=\"sans-serif\" font-size=\"15\" fill=\"#111111\" "
           "text-anchor=\"middle\">"
        << xml_escape(spec.title) << "</text>\n";
    {
        char conf[64];
        std::snprintf(conf, sizeof(conf), "%g%%", 100.0 * (1.0 - spec.alpha));
        svg << "<text x=\"" << fmt(v.px(0.5)) << "\" y=\""
            << fmt(v.py(-1.0) + 38.0)
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\" "
               "text-anchor=\"middle\">CDF difference of "
            << xml_escape(spec.label_a) << " minus " << xml_escape(spec.label_b)
            << (band != nullptr ? std::string(" with ") + conf + " band" : std::string())
            << " over the pooled quantile axis</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::vector<SignInterval> sign_intervals(const DiffCurve& d) {
    std::vector<SignInterval> out;
    const auto push = [&out](int sign, double from, double to) {
        if (to <= from) return;
        if (!out.empty() && out.back().sign == sign && out.back().to == from) {
            out.back().to = to;
            return;
        }
        out.push_back({sign, from, to});
    };
    for (std::size_t j = 0; j + 1 < d.x.size(); ++j) {
        const double x0 = d.x[j], x1 = d.x[j + 1];
        const double y0 = d.y[j], y1 = d.y[j + 1];
        if (y0 == 0.0 && y1 == 0.0) {
            push(0, x0, x1);
        } else if (y0 >= 0.0 && y1 >= 0.0) {
            push(1, x0, x1);
        } else if (y0 <= 0.0 && y1 <= 0.0) {
            push(-1, x0, x1);
        } else {
            const double xm = x0 + (y0 / (y0 - y1)) * (x1 - x0);
            push(point_sign(y0), x0, xm);
            push(point_sign(y1), xm, x1);
        }
    }
    return out;
}

std::string export_report(const SampleSet& a, const SampleSet& b,
                          const DiffCurve& d, const ConfidenceBand& band) {
    if (a.size() != b.size() || a.size() != d.n || band.n != d.n)
        throw input_error("report inputs disagree on the sample size");

    const double cp = estimate_c_p(a, b);
    const double cd = estimate_c_d(a, b);
    const BandBounds bounds = band_bounds(band);
    const std::vector<SignInterval> runs = sign_intervals(d);

    bool has_pos = false, has_neg = false;
    for (const SignInterval& r : runs) {
        if (r.sign > 0) has_pos = true;
        if (r.sign < 0) has_neg = true;
    }
    const char* verdict = has_pos && has_neg ? "cross"
                          : has_pos         ? "a_dominates"
                          : has_neg         ? "b_dominates"
                                            : "equal";

    nlohmann::json j;
    j["c_p"] = cp;
    j["c_d"] = cd;
    j["c_p_interval"] = {bounds.c_p_low, bounds.c_p_high};
    j["c_d_interval"] = {bounds.c_d_low, bounds.c_d_high};
    j["n"] = d.n;
    j["alpha"] = band.alpha;
    j["resamples"] = band.resamples;
    j["seed"] = band.seed;
    j["verdict"] = verdict;
    nlohmann::json crossings = nlohmann::json::array();
    for (const SignInterval& r : runs) {
        nlohmann::json jr;
        jr["sign"] = r.sign;
        jr["from"] = r.from;
        jr["to"] = r.to;
        crossings.push_back(std::move(jr));
    }
    j["quantile_crossings"] = std::move(crossings);
    return j.dump(2);
}

}  // namespace stochdom
