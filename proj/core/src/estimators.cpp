// Sample estimators of the dominance measures.
//
// Both estimators work on exact integer counts — pairwise sign sums for the
// probability estimate, cumulative count differences for the block table —
// so no floating-point accumulation can perturb a tie or a sign.  The
// crossing fraction gamma is the only place a quotient appears, and there
// the denominator is a positive integer by construction.

#include "stochdom/estimators.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "stochdom/errors.hpp"

namespace stochdom {

namespace {

void check_pair(const SampleSet& a, const SampleSet& b) {
    if (a.size() == 0 || b.size() == 0)
        throw input_error("sample sets must be nonempty");
    if (a.size() != b.size())
        throw input_error("sample sets must have equal sizes (got " +
                          std::to_string(a.size()) + " and " +
                          std::to_string(b.size()) + ")");
}

}  // namespace

double estimate_c_p(const SampleSet& a, const SampleSet& b) {
    check_pair(a, b);
    const std::size_t n = a.size();
    std::vector<double> sb = b.values;
    std::sort(sb.begin(), sb.end());
    long long s = 0;
    for (double av : a.values) {
        const auto below = std::lower_bound(sb.begin(), sb.end(), av) - sb.begin();
        const auto above = sb.end() - std::upper_bound(sb.begin(), sb.end(), av);
        s += above - below;  // count of b > av minus count of b < av
    }
    return static_cast<double>(s) /
               (2.0 * static_cast<double>(n) * static_cast<double>(n)) +
           0.5;
}

PsiTable build_psi_table(const SampleSet& a, const SampleSet& b, double delta) {
    check_pair(a, b);
    if (delta < 0.0)
        throw input_error("delta must be nonnegative");

    std::vector<double> sa = a.values, sb = b.values;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const std::size_t n = sa.size();

    // |G_A - G_B| < delta on counts: |d| < delta * n. The tiny shave keeps
    // the comparison strict when delta * n itself is not representable.
    const double thr = delta * static_cast<double>(n) * (1.0 - 1e-12);
    const auto delta_sign = [&](int d) {
        if (std::abs(static_cast<double>(d)) < thr) return 0;
        return (d > 0) - (d < 0);
    };

    PsiTable table;
    table.n = n;
    double psi_acc = 0.0;
    double kc_acc = 0.0;

    std::size_t i = 0, j = 0;
    int cum_a = 0, cum_b = 0;
    while (i < n || j < n) {
        double v;
        if (i < n && j < n)
            v = std::min(sa[i], sb[j]);
        else if (i < n)
            v = sa[i];
        else
            v = sb[j];

        int ma = 0, mb = 0;
        while (i < n && sa[i] == v) { ++ma; ++i; }
        while (j < n && sb[j] == v) { ++mb; ++j; }

        const int d0 = cum_a - cum_b;
        cum_a += ma;
        cum_b += mb;
        const int d1 = cum_a - cum_b;
        const int s0 = delta_sign(d0);
        const int s1 = delta_sign(d1);

        PsiBlock blk;
        blk.value = v;
        blk.mult_a = ma;
        blk.mult_b = mb;
        blk.cum_a = cum_a;
        blk.cum_b = cum_b;
        if (s0 == 0 && s1 == 0) {
            blk.psi = 0.0;
            blk.counted = false;
        } else if (s0 >= 0 && s1 >= 0) {
            blk.psi = 1.0;
            blk.counted = true;
        } else if (s0 <= 0 && s1 <= 0) {
            blk.psi = -1.0;
            blk.counted = true;
        } else {
            // Strict sign change inside the block. The endpoint differences
            // have opposite raw signs, so their gap ma - mb is nonzero and
            // the denominator below is a positive integer.
            assert(d0 != 0 && d1 != 0 && (d0 > 0) != (d1 > 0));
            blk.crossed = true;
            blk.gamma = std::abs(static_cast<double>(d0)) /
                        (std::abs(static_cast<double>(d0)) +
                         std::abs(static_cast<double>(d1)));
            blk.psi = s0 > 0 ? 2.0 * blk.gamma - 1.0 : 1.0 - 2.0 * blk.gamma;
            blk.counted = true;
        }
        const double w = static_cast<double>(ma + mb);
        psi_acc += w * blk.psi;
        if (blk.counted) kc_acc += w;
        table.blocks.push_back(blk);
    }
    assert(cum_a == static_cast<int>(n) && cum_b == static_cast<int>(n));

    const double two_n = 2.0 * static_cast<double>(n);
    table.signed_sum = psi_acc / two_n;
    table.k_c = kc_acc / two_n;
    return table;
}

namespace {

double c_d_from_table(const PsiTable& t) {
    if (t.k_c <= 0.0) return 0.5;
    const double v = (t.signed_sum / t.k_c + 1.0) / 2.0;
    return std::min(std::max(v, 0.0), 1.0);
}

}  // namespace

double estimate_c_d(const SampleSet& a, const SampleSet& b) {
    return c_d_from_table(build_psi_table(a, b, 0.0));
}

double estimate_c_d_delta(const SampleSet& a, const SampleSet& b, double delta) {
    if (!(delta > 0.0))
        throw input_error("estimate_c_d_delta requires delta > 0");
    return c_d_from_table(build_psi_table(a, b, delta));
}

}  // namespace stochdom
