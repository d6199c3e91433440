#pragma once

// Analytic dominance measures for pairs of mixture models.
//
// The two headline quantities are the probability that one variable takes a
// lower value than the other (c_p) and the dominance rate (c_d), which
// weighs the regions where one CDF sits above the other, each normalised by
// the probability mass the respective variable places on the disagreement
// set.  A set of classical references (KL, JS, total variation, Hellinger,
// Wasserstein and variants) is exposed through the same interface so their
// behaviour can be compared property by property.

#include <string>
#include <vector>

#include "stochdom/mixture.hpp"

namespace stochdom {

enum class DominanceVerdict { a_dominates, b_dominates, cross, equal };

std::string to_string(DominanceVerdict v);

struct MeasureValue {
    double value = 0.0;
    double quadrature_error_estimate = 0.0;
    // Set when the measure diverges (KL with mass escaping the support of
    // the second argument); value is +infinity in that case.
    bool infinite = false;
};

// P(X_A < X_B): integral of g_B * G_A. Result lies in [0, 1].
MeasureValue c_p_analytic(const MixtureModel& a, const MixtureModel& b, double tol = 1e-8);

// Signed, normalised dominance density at x: g_A(x)*k_A where G_A > G_B,
// -g_B(x)*k_B where G_A < G_B, 0 where they agree. The normalisers make
// each signed part integrate to +/-1 over the disagreement set.
// Throws undefined_density_error when the two laws coincide.
double dominance_density(const MixtureModel& a, const MixtureModel& b, double x,
                         double tol = 1e-8);

// Dominance rate in [0, 1]: 1 iff A dominates B, 0 iff B dominates A, 0.5
// for equal laws, interior values for crossing pairs.
MeasureValue c_d_analytic(const MixtureModel& a, const MixtureModel& b, double tol = 1e-8);

// First-order stochastic dominance classification by probing the CDF
// difference at quantile-spaced points (plus density breakpoints).
// a_dominates iff G_A - G_B >= -tol everywhere and > tol somewhere.
DominanceVerdict classify(const MixtureModel& a, const MixtureModel& b,
                          std::size_t probes = 512, double tol = 1e-9);

// Reference measures, by id:
//   "kl"                 Kullback-Leibler divergence of A from B
//   "js"                 Jensen-Shannon divergence (sum of both KLs to the midpoint; max 2 ln 2)
//   "tv"                 total variation distance, in [0, 1]
//   "hellinger"          squared Hellinger distance 2*(1 - Bhattacharyya coefficient), in [0, 2]
//   "wasserstein"        L1 distance between the CDFs
//   "signed_wasserstein" signed integral of G_A - G_B
//   "c_i"                integral of max(0, G_A - G_B) dG_B, in [0, 0.5]
// Throws input_error for unknown ids.
MeasureValue reference_measure(const std::string& id, const MixtureModel& a,
                               const MixtureModel& b, double tol = 1e-8);

const std::vector<std::string>& reference_measure_ids();

}  // namespace stochdom
