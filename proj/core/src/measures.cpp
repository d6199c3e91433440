// Analytic dominance measures on mixture pairs.
//
// The delicate part is locating the sign regions of h(x) = G_A(x) - G_B(x).
// h is probed on a dense uniform grid over the joint truncated support,
// augmented with per-component local grids (so that narrow components far
// from the bulk cannot slip between grid points) and the density
// breakpoints.  Probe signs are taken against a fixed equality band of
// 1e-10; boundaries between sign runs are then sharpened by bisection.
// Masses of both densities over the resulting regions feed the dominance
// rate and the normalisers of the dominance density.

#include "stochdom/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "stochdom/errors.hpp"
#include "stochdom/quadrature.hpp"

namespace stochdom {

namespace {

// Equality band for deciding G_A(x) = G_B(x) under floating point.
constexpr double kSignBand = 1e-10;

struct Hull {
    double lo = 0.0;
    double hi = 0.0;
};

Hull joint_hull(const MixtureModel& a, const MixtureModel& b) {
    const Interval ta = a.truncated_support();
    const Interval tb = b.truncated_support();
    return {std::min(ta.lo, tb.lo), std::max(ta.hi, tb.hi)};
}

std::vector<double> merged_breakpoints(const MixtureModel& a, const MixtureModel& b,
                                       double lo, double hi) {
    std::vector<double> pts;
    for (const MixtureModel* m : {&a, &b})
        for (double p : m->breakpoints())
            if (p > lo && p < hi) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Rough location/spread of a component after its affine map, for local grids.
void comp_probe_params(const Component& c, double& loc, double& spread) {
    double base_loc = 0.0, base_spread = 1.0;
    switch (c.kind) {
        case ComponentKind::gaussian:
            base_loc = c.params[0];
            base_spread = c.params[1];
            break;
        case ComponentKind::uniform:
            base_loc = 0.5 * (c.params[0] + c.params[1]);
            base_spread = 0.5 * (c.params[1] - c.params[0]);
            break;
        case ComponentKind::beta: {
            const double al = c.params[0], be = c.params[1];
            base_loc = al / (al + be);
            base_spread = std::max(
                std::sqrt(al * be / ((al + be) * (al + be) * (al + be + 1.0))), 0.02);
            break;
        }
        case ComponentKind::lognormal: {
            const double mu = c.params[0], sg = c.params[1];
            base_loc = std::exp(mu);
            const double s2 = sg * sg;
            base_spread = std::max(
                std::exp(mu + 0.5 * s2) * std::sqrt(std::max(std::expm1(s2), 1e-8)),
                1e-8);
            break;
        }
    }
    loc = c.scale * base_loc + c.shift;
    spread = std::abs(c.scale) * base_spread;
}

// Initial subdivision for the adaptive integrator.  Narrow components can sit
// entirely between the first Simpson evaluation points of a wide interval, in
// which case the integrand looks identically zero and the refinement never
// triggers.  Seeding cuts around every component's location at multiples of
// its spread guarantees each lobe of the integrand straddles a cut.
std::vector<double> quadrature_cuts(const MixtureModel& a, const MixtureModel& b,
                                    double lo, double hi) {
    static const double kAnchors[] = {-8.0, -6.0, -4.0, -3.0, -2.0, -1.0, -0.5,
                                      0.0,  0.5,  1.0,  2.0,  3.0,  4.0,  6.0, 8.0};
    std::vector<double> pts = merged_breakpoints(a, b, lo, hi);
    for (const MixtureModel* m : {&a, &b}) {
        for (const Component& c : m->components()) {
            double loc = 0.0, spread = 1.0;
            comp_probe_params(c, loc, spread);
            for (double k : kAnchors) {
                const double x = loc + spread * k;
                if (x > lo && x < hi) pts.push_back(x);
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Intervals on which a component's density is large enough for its logarithm
// to be computed in double precision.  Exponential-family tails fall below
// the smallest positive double past ~37 standard deviations, so anything
// outside these windows is indistinguishable from zero density.
std::vector<Interval> representable_intervals(const MixtureModel& m) {
    constexpr double kTailWidth = 36.0;
    std::vector<Interval> raw;
    raw.reserve(m.components().size());
    for (const Component& c : m.components()) {
        double lo = 0.0, hi = 0.0;
        switch (c.kind) {
            case ComponentKind::gaussian:
                lo = c.params[0] - kTailWidth * c.params[1];
                hi = c.params[0] + kTailWidth * c.params[1];
                break;
            case ComponentKind::uniform:
                lo = c.params[0];
                hi = c.params[1];
                break;
            case ComponentKind::beta:
                lo = 0.0;
                hi = 1.0;
                break;
            case ComponentKind::lognormal: {
                const double mu = c.params[0], sg = c.params[1];
                lo = std::exp(std::max(mu - kTailWidth * sg, -700.0));
                hi = std::exp(std::min(mu + kTailWidth * sg, 700.0));
                break;
            }
        }
        const double e0 = c.scale * lo + c.shift;
        const double e1 = c.scale * hi + c.shift;
        raw.push_back({std::min(e0, e1), std::max(e0, e1)});
    }
    std::sort(raw.begin(), raw.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    std::vector<Interval> merged;
    for (const Interval& r : raw) {
        if (!merged.empty() && r.lo <= merged.back().hi)
            merged.back().hi = std::max(merged.back().hi, r.hi);
        else
            merged.push_back(r);
    }
    return merged;
}

std::vector<double> probe_points(const MixtureModel& a, const MixtureModel& b,
                                 double lo, double hi) {
    std::vector<double> pts;
    const std::size_t uniform_count = 1025;
    pts.reserve(uniform_count + 128);
    for (std::size_t k = 0; k < uniform_count; ++k)
        pts.push_back(lo + (hi - lo) * static_cast<double>(k) /
                               static_cast<double>(uniform_count - 1));
    for (const MixtureModel* m : {&a, &b}) {
        for (const Component& c : m->components()) {
            double loc = 0.0, spread = 1.0;
            comp_probe_params(c, loc, spread);
            for (int t = -24; t <= 24; ++t) {
                const double x = loc + spread * (static_cast<double>(t) / 4.0);
                if (x > lo && x < hi) pts.push_back(x);
            }
        }
    }
    for (double p : merged_breakpoints(a, b, lo, hi)) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

struct SignRegions {
    std::vector<Interval> pos;  // G_A - G_B > band
    std::vector<Interval> neg;  // G_A - G_B < -band
};

int band_sign(double h) {
    if (h > kSignBand) return 1;
    if (h < -kSignBand) return -1;
    return 0;
}

// Root of h(x) = target inside [x0, x1]; assumes h(x0) - target and
// h(x1) - target have opposite signs (h is continuous).
double bisect_level(const std::function<double(double)>& h, double x0, double x1,
                    double target) {
    double f0 = h(x0) - target;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (x0 + x1);
        if (mid <= x0 || mid >= x1) break;
        const double fm = h(mid) - target;
        if ((f0 <= 0.0) == (fm <= 0.0)) {
            x0 = mid;
            f0 = fm;
        } else {
            x1 = mid;
        }
    }
    return 0.5 * (x0 + x1);
}

SignRegions detect_regions(const MixtureModel& a, const MixtureModel& b,
                           double lo, double hi) {
    const auto h = [&](double x) { return a.cdf(x) - b.cdf(x); };
    const std::vector<double> xs = probe_points(a, b, lo, hi);
    std::vector<int> sg(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) sg[i] = band_sign(h(xs[i]));

    SignRegions out;
    std::size_t i = 0;
    while (i < xs.size()) {
        const int s = sg[i];
        std::size_t j = i;
        while (j + 1 < xs.size() && sg[j + 1] == s) ++j;
        if (s != 0) {
            const double target = s > 0 ? kSignBand : -kSignBand;
            const double left =
                (i == 0) ? xs.front() : bisect_level(h, xs[i - 1], xs[i], target);
            const double right =
                (j + 1 == xs.size()) ? xs.back()
                                     : bisect_level(h, xs[j], xs[j + 1], target);
            if (right > left) {
                auto& dst = s > 0 ? out.pos : out.neg;
                dst.push_back({left, right});
            }
        }
        i = j + 1;
    }
    return out;
}

struct Decomposition {
    SignRegions regions;
    double mass_a_pos = 0.0, mass_a_neg = 0.0;
    double mass_b_pos = 0.0, mass_b_neg = 0.0;
    double err = 0.0;
};

Decomposition decompose(const MixtureModel& a, const MixtureModel& b, double tol) {
    const Hull hull = joint_hull(a, b);
    Decomposition d;
    d.regions = detect_regions(a, b, hull.lo, hull.hi);

    const std::size_t nregions = d.regions.pos.size() + d.regions.neg.size();
    if (nregions == 0) return d;
    const double share = tol / (2.0 * static_cast<double>(nregions));
    const std::vector<double> bps = quadrature_cuts(a, b, hull.lo, hull.hi);

    const auto mass = [&](const MixtureModel& m, const Interval& r) {
        const QuadratureResult q = integrate([&](double x) { return m.pdf(x); },
                                             r.lo, r.hi, share, bps);
        d.err += q.error_estimate;
        return q.value;
    };
    for (const Interval& r : d.regions.pos) {
        d.mass_a_pos += mass(a, r);
        d.mass_b_pos += mass(b, r);
    }
    for (const Interval& r : d.regions.neg) {
        d.mass_a_neg += mass(a, r);
        d.mass_b_neg += mass(b, r);
    }
    return d;
}

// Total-variation style equality test: half the L1 distance between the
// densities, at a tight tolerance. Used to route "the two laws coincide".
bool laws_coincide(const MixtureModel& a, const MixtureModel& b, double& err) {
    const Hull hull = joint_hull(a, b);
    const std::vector<double> bps = quadrature_cuts(a, b, hull.lo, hull.hi);
    const QuadratureResult q =
        integrate([&](double x) { return std::abs(a.pdf(x) - b.pdf(x)); },
                  hull.lo, hull.hi, 1e-10, bps);
    err = q.error_estimate;
    return 0.5 * q.value <= 1e-9;
}

MeasureValue finite(double v, double err) { return {v, err, false}; }

MeasureValue infinite_value() {
    return {std::numeric_limits<double>::infinity(), 0.0, true};
}

double clamp01(double v) { return std::min(std::max(v, 0.0), 1.0); }

}  // namespace

std::string to_string(DominanceVerdict v) {
    switch (v) {
        case DominanceVerdict::a_dominates: return "a_dominates";
        case DominanceVerdict::b_dominates: return "b_dominates";
        case DominanceVerdict::cross: return "cross";
        case DominanceVerdict::equal: return "equal";
    }
    return "unknown";
}

MeasureValue c_p_analytic(const MixtureModel& a, const MixtureModel& b, double tol) {
    if (!(tol > 0.0)) throw input_error("c_p_analytic requires a positive tolerance");
    const Interval tb = b.truncated_support();
    const std::vector<double> bps = quadrature_cuts(a, b, tb.lo, tb.hi);
    const QuadratureResult q =
        integrate([&](double x) { return b.pdf(x) * a.cdf(x); }, tb.lo, tb.hi, tol, bps);
    return finite(clamp01(q.value), q.error_estimate);
}

MeasureValue c_d_analytic(const MixtureModel& a, const MixtureModel& b, double tol) {
    if (!(tol > 0.0)) throw input_error("c_d_analytic requires a positive tolerance");
    double eq_err = 0.0;
    if (laws_coincide(a, b, eq_err)) return finite(0.5, eq_err);

    const Decomposition d = decompose(a, b, tol);
    const double na = d.mass_a_pos + d.mass_a_neg;
    const double nb = d.mass_b_pos + d.mass_b_neg;
    if (na <= 0.0 && nb <= 0.0) return finite(0.5, d.err + eq_err);
    const double term_a = na > 0.0 ? d.mass_a_pos / na : 0.0;
    const double term_b = nb > 0.0 ? d.mass_b_neg / nb : 0.0;
    return finite(clamp01(0.5 * (term_a - term_b) + 0.5), d.err + eq_err);
}

double dominance_density(const MixtureModel& a, const MixtureModel& b, double x,
                         double tol) {
    if (!(tol > 0.0)) throw input_error("dominance_density requires a positive tolerance");
    double eq_err = 0.0;
    if (laws_coincide(a, b, eq_err))
        throw undefined_density_error(
            "dominance density is undefined for coinciding laws");

    const Decomposition d = decompose(a, b, tol);
    const double na = d.mass_a_pos + d.mass_a_neg;
    const double nb = d.mass_b_pos + d.mass_b_neg;
    const double h = a.cdf(x) - b.cdf(x);
    if (h > kSignBand) return na > 0.0 ? a.pdf(x) / na : 0.0;
    if (h < -kSignBand) return nb > 0.0 ? -b.pdf(x) / nb : 0.0;
    return 0.0;
}

DominanceVerdict classify(const MixtureModel& a, const MixtureModel& b,
                          std::size_t probes, double tol) {
    if (probes < 100) throw input_error("classify requires probes >= 100");
    if (!(tol > 0.0)) throw input_error("classify requires a positive tolerance");
    const MixtureModel pooled = make_mixture({{0.5, a}, {0.5, b}});
    const Hull hull = joint_hull(a, b);
    std::vector<double> xs;
    xs.reserve(probes + 32);
    for (std::size_t k = 1; k <= probes; ++k)
        xs.push_back(pooled.quantile(static_cast<double>(k) /
                                     static_cast<double>(probes + 1)));
    for (double p : merged_breakpoints(a, b, hull.lo, hull.hi)) xs.push_back(p);

    bool has_pos = false, has_neg = false;
    for (double x : xs) {
        const double h = a.cdf(x) - b.cdf(x);
        if (h > tol) has_pos = true;
        if (h < -tol) has_neg = true;
    }
    if (has_pos && has_neg) return DominanceVerdict::cross;
    if (has_pos) return DominanceVerdict::a_dominates;
    if (has_neg) return DominanceVerdict::b_dominates;
    return DominanceVerdict::equal;
}

MeasureValue reference_measure(const std::string& id, const MixtureModel& a,
                               const MixtureModel& b, double tol) {
    if (!(tol > 0.0)) throw input_error("reference_measure requires a positive tolerance");

    // The density-ratio measures (kl, js, tv, hellinger) are exactly invariant
    // under a common affine map of both variables.  Evaluating them with the
    // joint hull mapped to [0, 1] makes the quadrature grid and the density
    // underflow floor independent of the inputs' location and scale, so
    // shifting or scaling both inputs cannot perturb the result.  The
    // CDF-distance measures genuinely depend on scale and stay in the native
    // frame.
    if (id == "kl" || id == "js" || id == "tv" || id == "hellinger") {
        const Hull native = joint_hull(a, b);
        const double width = native.hi - native.lo;
        const bool canonical =
            width > 0.0 && std::abs(native.lo) < 1e-9 && std::abs(width - 1.0) < 1e-9;
        if (width > 0.0 && !canonical) {
            const AffineTransform t{1.0 / width, -native.lo / width};
            return reference_measure(id, transform(a, t), transform(b, t), tol);
        }
    }

    const Hull hull = joint_hull(a, b);
    const std::vector<double> bps = quadrature_cuts(a, b, hull.lo, hull.hi);

    if (id == "kl") {
        // Mass of A where B's density is zero -- or too small for its
        // logarithm to be evaluated in double precision -- forces the
        // divergence.  Values dominated by an unrepresentable log-ratio would
        // otherwise silently reflect the evaluation floor, not the measure.
        const Interval ta = a.truncated_support();
        double covered = 0.0;
        for (const Interval& s : representable_intervals(b)) {
            const double lo = std::max(s.lo, ta.lo);
            const double hi = std::min(s.hi, ta.hi);
            if (hi > lo) covered += a.cdf(hi) - a.cdf(lo);
        }
        const double escaped = (a.cdf(ta.hi) - a.cdf(ta.lo)) - covered;
        if (escaped > 1e-9) return infinite_value();
        const QuadratureResult q = integrate(
            [&](double x) {
                const double ga = a.pdf(x);
                if (ga <= 0.0) return 0.0;
                const double gb = std::max(b.pdf(x), 1e-300);
                return ga * std::log(ga / gb);
            },
            ta.lo, ta.hi, tol, bps);
        return finite(std::max(q.value, 0.0), q.error_estimate);
    }
    if (id == "js") {
        const QuadratureResult q = integrate(
            [&](double x) {
                const double ga = a.pdf(x);
                const double gb = b.pdf(x);
                const double m = ga + gb;
                double v = 0.0;
                if (ga > 0.0) v += ga * std::log(2.0 * ga / m);
                if (gb > 0.0) v += gb * std::log(2.0 * gb / m);
                return v;
            },
            hull.lo, hull.hi, tol, bps);
        return finite(std::max(q.value, 0.0), q.error_estimate);
    }
    if (id == "tv") {
        const QuadratureResult q =
            integrate([&](double x) { return std::abs(a.pdf(x) - b.pdf(x)); },
                      hull.lo, hull.hi, tol, bps);
        return finite(clamp01(0.5 * q.value), 0.5 * q.error_estimate);
    }
    if (id == "hellinger") {
        const QuadratureResult q =
            integrate([&](double x) { return std::sqrt(a.pdf(x) * b.pdf(x)); },
                      hull.lo, hull.hi, tol, bps);
        const double v = 2.0 * (1.0 - q.value);
        return finite(std::min(std::max(v, 0.0), 2.0), 2.0 * q.error_estimate);
    }
    if (id == "wasserstein") {
        const QuadratureResult q =
            integrate([&](double x) { return std::abs(a.cdf(x) - b.cdf(x)); },
                      hull.lo, hull.hi, tol, bps);
        return finite(std::max(q.value, 0.0), q.error_estimate);
    }
    if (id == "signed_wasserstein") {
        const QuadratureResult q =
            integrate([&](double x) { return a.cdf(x) - b.cdf(x); },
                      hull.lo, hull.hi, tol, bps);
        return finite(q.value, q.error_estimate);
    }
    if (id == "c_i") {
        const QuadratureResult q = integrate(
            [&](double x) {
                return std::max(0.0, a.cdf(x) - b.cdf(x)) * b.pdf(x);
            },
            hull.lo, hull.hi, tol, bps);
        return finite(std::min(std::max(q.value, 0.0), 0.5), q.error_estimate);
    }
    throw input_error("unknown reference measure '" + id +
                      "' (expected kl, js, tv, hellinger, wasserstein, "
                      "signed_wasserstein, or c_i)");
}

const std::vector<std::string>& reference_measure_ids() {
    static const std::vector<std::string> ids = {
        "kl", "js", "tv", "hellinger", "wasserstein", "signed_wasserstein", "c_i"};
    return ids;
}

}  // namespace stochdom
