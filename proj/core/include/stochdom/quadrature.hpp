#pragma once

#include <functional>
#include <vector>

namespace stochdom {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
//
// The interval is first split at the supplied interior breakpoints (points
// where the integrand is known to be non-smooth, e.g. component support
// endpoints), then each segment is refined recursively using the Richardson
// error estimate |S2 - S1| / 15.  Throws numeric_error carrying the best
// estimate if the recursion depth is exhausted before the tolerance is met.
QuadratureResult integrate(const std::function<double(double)>& f,
                           double a, double b, double tol,
                           const std::vector<double>& breakpoints = {});

}  // namespace stochdom
