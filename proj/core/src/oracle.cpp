#include "stochdom/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "stochdom/errors.hpp"
#include "stochdom/rng.hpp"

namespace stochdom {

double brute_c_p(const SampleSet& a, const SampleSet& b) {
    if (a.size() == 0 || a.size() != b.size())
        throw input_error("brute_c_p requires two nonempty sample sets of equal size");
    const std::size_t n = a.size();
    long long s = 0;
    for (double av : a.values)
        for (double bv : b.values)
            s += (bv > av) - (bv < av);
    return static_cast<double>(s) /
               (2.0 * static_cast<double>(n) * static_cast<double>(n)) +
           0.5;
}

GridDominance grid_dominance(const MixtureModel& a, const MixtureModel& b,
                             std::size_t gridsize) {
    if (gridsize < 10000)
        throw input_error("grid_dominance requires gridsize >= 10000");
    const Interval ta = a.truncated_support();
    const Interval tb = b.truncated_support();
    const double lo = std::min(ta.lo, tb.lo);
    const double hi = std::max(ta.hi, tb.hi);
    const double h = (hi - lo) / static_cast<double>(gridsize);
    // Same equality band the analytic path uses to decide G_A(x) = G_B(x).
    const double band = 1e-10;

    double cp = 0.0;
    double mass_a_pos = 0.0, mass_a_neg = 0.0;
    double mass_b_pos = 0.0, mass_b_neg = 0.0;
    for (std::size_t k = 0; k < gridsize; ++k) {
        const double x = lo + (static_cast<double>(k) + 0.5) * h;
        const double ga = a.pdf(x);
        const double gb = b.pdf(x);
        const double d = a.cdf(x) - b.cdf(x);
        cp += gb * a.cdf(x) * h;
        if (d > band) {
            mass_a_pos += ga * h;
            mass_b_pos += gb * h;
        } else if (d < -band) {
            mass_a_neg += ga * h;
            mass_b_neg += gb * h;
        }
    }
    const double na = mass_a_pos + mass_a_neg;
    const double nb = mass_b_pos + mass_b_neg;
    GridDominance out;
    out.c_p = std::min(std::max(cp, 0.0), 1.0);
    out.c_d = (na <= 0.0 || nb <= 0.0)
                  ? 0.5
                  : std::min(std::max(0.5 * (mass_a_pos / na - mass_b_neg / nb) + 0.5,
                                      0.0),
                             1.0);
    return out;
}

double monte_carlo_c_p(const MixtureModel& a, const MixtureModel& b,
                       std::size_t draws, std::uint64_t seed) {
    if (draws < 10000)
        throw input_error("monte_carlo_c_p requires draws >= 10000");
    std::mt19937_64 rng(seed);
    double s = 0.0;
    for (std::size_t i = 0; i < draws; ++i) {
        const double xa = sample_one(a, rng);
        const double xb = sample_one(b, rng);
        if (xa < xb)
            s += 1.0;
        else if (xa == xb)
            s += 0.5;
    }
    return s / static_cast<double>(draws);
}

}  // namespace stochdom
