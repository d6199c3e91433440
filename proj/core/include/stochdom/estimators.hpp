#pragma once

// Sample estimators of the two dominance measures.
//
// estimate_c_p normalises the pairwise sign count (the Mann-Whitney U
// statistic); it is computed by ranks in O(n log n) but equals the O(n^2)
// double loop exactly.  estimate_c_d walks the pooled sorted values and
// classifies each tied block by the empirical CDF difference at its
// endpoints (the psi table): +1 where A's CDF stays above, -1 where it
// stays below, a signed fraction when the CDFs cross strictly inside the
// block, and 0 where they agree at both ends.  The normaliser k_c is the
// pooled-mass fraction of blocks where the CDFs disagree, so the estimate
// ignores regions where the samples look identical.

#include <cstddef>
#include <vector>

#include "stochdom/samples.hpp"

namespace stochdom {

struct PsiBlock {
    double value = 0.0;   // unique pooled value
    int mult_a = 0;       // multiplicity in a
    int mult_b = 0;       // multiplicity in b
    int cum_a = 0;        // count of a-values <= value
    int cum_b = 0;        // count of b-values <= value
    double gamma = 0.0;   // crossing fraction, meaningful only when crossed
    double psi = 0.0;     // block classification, in [-1, 1]
    bool crossed = false; // CDF difference changes strict sign inside the block
    bool counted = false; // contributes pooled mass to the k_c normaliser
};

struct PsiTable {
    std::size_t n = 0;         // per-sample size
    std::vector<PsiBlock> blocks;
    double signed_sum = 0.0;   // sum of (mult_a+mult_b) * psi / 2n
    double k_c = 0.0;          // sum of (mult_a+mult_b) * counted / 2n
};

// Builds the pooled-block table. delta > 0 treats |G_A - G_B| < delta as
// equality in every comparison (branch selection and k_c); delta = 0 is the
// exact-sign variant.
PsiTable build_psi_table(const SampleSet& a, const SampleSet& b, double delta = 0.0);

// (sum of sign(b_k - a_i)) / 2n^2 + 1/2, by ranks. Equal sizes required.
double estimate_c_p(const SampleSet& a, const SampleSet& b);

// ((signed_sum / k_c) + 1) / 2, or exactly 0.5 when k_c = 0.
double estimate_c_d(const SampleSet& a, const SampleSet& b);

// delta-relaxed variant of estimate_c_d; requires delta > 0.
double estimate_c_d_delta(const SampleSet& a, const SampleSet& b, double delta);

}  // namespace stochdom
