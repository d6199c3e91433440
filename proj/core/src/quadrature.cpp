#include "stochdom/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "stochdom/errors.hpp"

namespace stochdom {

namespace {

struct Accumulator {
    const std::function<double(double)>& f;
    double value = 0.0;
    double err = 0.0;       // accumulated Richardson estimates of accepted panels
    double leftover = 0.0;  // estimates of panels accepted only because depth ran out
};

// Classic adaptive Simpson refinement.  fa/fm/fb are f at the endpoints and
// midpoint of [a, b]; s is the Simpson value of the whole panel.  Accepts the
// panel when the Richardson estimate (s2 - s)/15 meets the panel's tolerance
// share, otherwise recurses with half the tolerance per child.
void refine(Accumulator& acc, double a, double b, double fa, double fm, double fb,
            double s, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = acc.f(lm);
    const double frm = acc.f(rm);
    const double h12 = (b - a) / 12.0;
    const double sl = h12 * (fa + 4.0 * flm + fm);
    const double sr = h12 * (fm + 4.0 * frm + fb);
    const double s2 = sl + sr;
    const double e = (s2 - s) / 15.0;

    const bool width_exhausted = (b - a) < 1e-15 * (std::abs(a) + std::abs(b) + 1.0);
    if (std::abs(e) <= tol || width_exhausted) {
        acc.value += s2 + e;  // Richardson extrapolation
        acc.err += std::abs(e);
        return;
    }
    if (depth <= 0) {
        acc.value += s2 + e;
        acc.err += std::abs(e);
        acc.leftover += std::abs(e);
        return;
    }
    refine(acc, a, m, fa, flm, fm, sl, 0.5 * tol, depth - 1);
    refine(acc, m, b, fm, frm, fb, sr, 0.5 * tol, depth - 1);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f,
                           double a, double b, double tol,
                           const std::vector<double>& breakpoints) {
    if (!std::isfinite(a) || !std::isfinite(b) || a > b)
        throw input_error("integrate: invalid interval");
    if (!(tol > 0.0))
        throw input_error("integrate: tolerance must be positive");
    if (a == b) return {0.0, 0.0};

    std::vector<double> cuts;
    cuts.reserve(breakpoints.size() + 2);
    cuts.push_back(a);
    for (double c : breakpoints)
        if (c > a && c < b) cuts.push_back(c);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Accumulator acc{f};
    const double total = b - a;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double x0 = cuts[i];
        const double x1 = cuts[i + 1];
        const double w = x1 - x0;
        if (w <= 0.0) continue;
        const double segtol = tol * (w / total);
        const double fa = f(x0);
        const double fm = f(0.5 * (x0 + x1));
        const double fb = f(x1);
        const double s = w / 6.0 * (fa + 4.0 * fm + fb);
        refine(acc, x0, x1, fa, fm, fb, s, segtol, 44);
    }

    if (acc.leftover > tol)
        throw numeric_error("integrate: failed to reach the requested tolerance",
                            acc.value, acc.err);
    return {acc.value, acc.err};
}

}  // namespace stochdom
