#pragma once

// Independent brute-force references. These are deliberately naive: the
// double loop, the dense midpoint grid and the Monte-Carlo counter exist to
// cross-check the fast paths, both in the tests and behind the CLI's
// --verify flag, so they live in the shipped library.

#include <cstdint>

#include "stochdom/measures.hpp"
#include "stochdom/samples.hpp"

namespace stochdom {

struct GridDominance {
    double c_p = 0.0;
    double c_d = 0.0;
};

// O(n^2) evaluation of (sum of sign(b_k - a_i)) / 2n^2 + 1/2.
double brute_c_p(const SampleSet& a, const SampleSet& b);

// Midpoint-rule evaluation of both analytic measures on a uniform grid over
// the union of truncated supports. Requires gridsize >= 10^4.
GridDominance grid_dominance(const MixtureModel& a, const MixtureModel& b,
                             std::size_t gridsize);

// Fraction of iid pairs with x_a < x_b (ties counted half). Standard error
// is about 0.5/sqrt(draws). Requires draws >= 10^4.
double monte_carlo_c_p(const MixtureModel& a, const MixtureModel& b,
                       std::size_t draws, std::uint64_t seed);

}  // namespace stochdom
