#pragma once

// Bootstrap confidence band for the difference curve.
//
// Each replicate resamples both sides with replacement, rebuilds the
// quantile pair, and evaluates both CDFs on the original knot grid.
// Pointwise two-sided quantile envelopes are taken for each CDF at
// confidence sqrt(1 - alpha), so the pair of envelopes holds jointly at
// confidence 1 - alpha; the band on the difference is the difference of
// envelopes, clamped to the feasible triangle |y| <= min(2x, 2-2x).

#include <cstdint>

#include "stochdom/quantile_rv.hpp"

namespace stochdom {

struct ConfidenceBand {
    std::size_t n = 0;
    double alpha = 0.05;
    std::size_t resamples = 1000;
    std::uint64_t seed = 42;
    std::vector<double> x;      // knots j/2n, size 2n+1
    std::vector<double> lower;  // envelope on G_YA - G_YB
    std::vector<double> upper;
};

struct BandBounds {
    double c_p_low = 0.0;
    double c_p_high = 0.0;
    double c_d_low = 0.0;
    double c_d_high = 0.0;
};

// Deterministic for fixed (a, b, alpha, resamples, seed); replicate r draws
// its randomness from an engine seeded by mix(seed, r), so replicates are
// order-independent.  Requires alpha in (0,1), resamples >= 100, equal sizes.
ConfidenceBand bootstrap_band(const SampleSet& a, const SampleSet& b,
                              double alpha = 0.05, std::size_t resamples = 1000,
                              std::uint64_t seed = 42);

// c_p_from_diff / c_d_from_diff applied to the band envelopes; brackets the
// point estimates computed from the same samples.
BandBounds band_bounds(const ConfidenceBand& band);

// CSV with header "x,lower,diff,upper"; the diff column carries the observed
// curve, which must share the band's grid (input_error otherwise).
std::string band_csv(const ConfidenceBand& band, const DiffCurve& observed);
void write_band_csv(const ConfidenceBand& band, const DiffCurve& observed,
                    const std::string& path);

}  // namespace stochdom
