#pragma once

// Quantile reparameterisation of a sample pair onto [0, 1].
//
// The pooled sorted values tile [0, 1] with 2n bins of width 1/2n; the
// block of bins owned by a tied value splits the constant total density 2
// between the two sides in proportion to their multiplicities.  Both
// resulting variables are supported on [0, 1], their densities sum to 2
// everywhere, and the difference of their CDFs (the diff curve) carries
// both dominance measures: its integral recovers estimate_c_p and its
// signed arc lengths recover estimate_c_d.

#include <cstddef>
#include <string>
#include <vector>

#include "stochdom/samples.hpp"

namespace stochdom {

enum class Side { a, b };

struct QuantileBlock {
    double value = 0.0;      // pooled unique value owning the block
    int mult_a = 0;
    int mult_b = 0;
    std::size_t start_bin = 0;  // first of mult_a + mult_b bins
};

struct QuantilePair {
    std::size_t n = 0;             // per-sample size; the grid has 2n bins
    std::vector<QuantileBlock> blocks;
    std::vector<double> dens_a;    // per-bin densities, size 2n
    std::vector<double> dens_b;
    std::vector<double> cum_a;     // CDF values at the knots j/2n, size 2n+1
    std::vector<double> cum_b;
};

// Piecewise-linear curve on the knots x_j = j/2n (values exact rationals).
struct DiffCurve {
    std::size_t n = 0;
    std::vector<double> x;  // size 2n+1
    std::vector<double> y;
};

QuantilePair build_quantile_pair(const SampleSet& a, const SampleSet& b);

// Bin density at x in [0, 1]; throws input_error outside.
double density(const QuantilePair& q, Side side, double x);

// Piecewise-linear CDF at x in [0, 1]; throws input_error outside.
double cumulative(const QuantilePair& q, Side side, double x);

// G_A - G_B at every knot.  Knot values are computed from integer block
// counts so that exact zeroes (CDFs agreeing) are represented exactly; the
// sign structure of the curve is therefore faithful, not a rounding artifact.
DiffCurve diff_curve(const QuantilePair& q);

// 0.5 + trapezoidal integral (exact for the piecewise-linear curve).
double c_p_from_diff(const DiffCurve& d);

// Signed-length vs nonzero-length ratio mapped to [0, 1]; segments are split
// at interior zero crossings and isolated zeroes carry no length.  Returns
// 0.5 when the curve is identically zero.
double c_d_from_diff(const DiffCurve& d);

// CSV with header "x,diff", one knot per row.
std::string diff_curve_csv(const DiffCurve& d);
void write_diff_curve_csv(const DiffCurve& d, const std::string& path);

}  // namespace stochdom
