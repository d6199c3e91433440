// Quantile reparameterisation of a sample pair.
//
// All CDF knot values are derived from integer counts: within a block of
// m = mult_a + mult_b bins starting after prev_a/prev_b values, the CDF of
// side A at local knot i is (prev_a * m + mult_a * i) / (n * m).  Numerator
// and denominator are exact in double (they stay far below 2^53), so a knot
// where the two empirical CDFs agree yields an exact zero in the diff
// curve.  Accumulating the same quantities with floating-point prefix sums
// would instead leave ~1e-19 residue at such knots, silently turning
// agreement stretches into sign runs and corrupting the arc-length measure.

#include "stochdom/quantile_rv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

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

QuantilePair build_quantile_pair(const SampleSet& a, const SampleSet& b) {
    check_pair(a, b);
    std::vector<double> sa = a.values, sb = b.values;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const std::size_t n = sa.size();

    QuantilePair q;
    q.n = n;
    q.dens_a.assign(2 * n, 0.0);
    q.dens_b.assign(2 * n, 0.0);
    q.cum_a.assign(2 * n + 1, 0.0);
    q.cum_b.assign(2 * n + 1, 0.0);

    std::size_t i = 0, j = 0;
    long long cum_a = 0, cum_b = 0;
    std::size_t bin = 0;
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
        const long long m = ma + mb;

        q.blocks.push_back(QuantileBlock{v, ma, mb, bin});
        const double da = 2.0 * static_cast<double>(ma) / static_cast<double>(m);
        const double db = 2.0 * static_cast<double>(mb) / static_cast<double>(m);
        const double denom = static_cast<double>(static_cast<long long>(n) * m);
        for (long long t = 0; t < m; ++t) {
            q.dens_a[bin + static_cast<std::size_t>(t)] = da;
            q.dens_b[bin + static_cast<std::size_t>(t)] = db;
            const std::size_t knot = bin + static_cast<std::size_t>(t) + 1;
            q.cum_a[knot] =
                static_cast<double>(cum_a * m + static_cast<long long>(ma) * (t + 1)) /
                denom;
            q.cum_b[knot] =
                static_cast<double>(cum_b * m + static_cast<long long>(mb) * (t + 1)) /
                denom;
        }
        cum_a += ma;
        cum_b += mb;
        bin += static_cast<std::size_t>(m);
    }
    return q;
}

namespace {

std::size_t bin_index(const QuantilePair& q, double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw input_error("quantile coordinate must lie in [0, 1]");
    const std::size_t bins = 2 * q.n;
    const auto raw = static_cast<std::size_t>(x * static_cast<double>(bins));
    return std::min(raw, bins - 1);
}

}  // namespace

double density(const QuantilePair& q, Side side, double x) {
    const std::size_t bin = bin_index(q, x);
    return side == Side::a ? q.dens_a[bin] : q.dens_b[bin];
}

double cumulative(const QuantilePair& q, Side side, double x) {
    const std::size_t bin = bin_index(q, x);
    const auto& cum = side == Side::a ? q.cum_a : q.cum_b;
    const auto& dens = side == Side::a ? q.dens_a : q.dens_b;
    if (x == 1.0) return cum.back();
    const double left = static_cast<double>(bin) / (2.0 * static_cast<double>(q.n));
    return cum[bin] + dens[bin] * (x - left);
}

DiffCurve diff_curve(const QuantilePair& q) {
    const std::size_t n = q.n;
    DiffCurve d;
    d.n = n;
    d.x.resize(2 * n + 1);
    d.y.resize(2 * n + 1);
    const double knots = 2.0 * static_cast<double>(n);
    for (std::size_t j = 0; j <= 2 * n; ++j)
        d.x[j] = static_cast<double>(j) / knots;

    d.y[0] = 0.0;
    long long cum_a = 0, cum_b = 0;
    for (const QuantileBlock& blk : q.blocks) {
        const long long m = blk.mult_a + blk.mult_b;
        const long long diff0 = cum_a - cum_b;
        const long long step = blk.mult_a - blk.mult_b;
        const double denom = static_cast<double>(static_cast<long long>(n) * m);
        for (long long t = 1; t <= m; ++t) {
            const long long num = diff0 * m + step * t;
            d.y[blk.start_bin + static_cast<std::size_t>(t)] =
                static_cast<double>(num) / denom;
        }
        cum_a += blk.mult_a;
        cum_b += blk.mult_b;
    }
    return d;
}

double c_p_from_diff(const DiffCurve& d) {
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < d.x.size(); ++j)
        acc += 0.5 * (d.y[j] + d.y[j + 1]) * (d.x[j + 1] - d.x[j]);
    return 0.5 + acc;
}

double c_d_from_diff(const DiffCurve& d) {
    double pos = 0.0, neg = 0.0;
    for (std::size_t j = 0; j + 1 < d.x.size(); ++j) {
        const double len = d.x[j + 1] - d.x[j];
        if (len <= 0.0) continue;
        const double y0 = d.y[j];
        const double y1 = d.y[j + 1];
        if (y0 == 0.0 && y1 == 0.0) continue;
        if (y0 >= 0.0 && y1 >= 0.0) {
            pos += len;
        } else if (y0 <= 0.0 && y1 <= 0.0) {
            neg += len;
        } else {
            const double t = y0 / (y0 - y1);  // crossing fraction
            if (y0 > 0.0) {
                pos += t * len;
                neg += (1.0 - t) * len;
            } else {
                neg += t * len;
                pos += (1.0 - t) * len;
            }
        }
    }
    const double total = pos + neg;
    if (total <= 0.0) return 0.5;
    const double v = ((pos - neg) / total + 1.0) / 2.0;
    return std::min(std::max(v, 0.0), 1.0);
}

std::string diff_curve_csv(const DiffCurve& d) {
    std::string out = "x,diff\n";
    char buf[96];
    for (std::size_t j = 0; j < d.x.size(); ++j) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", d.x[j], d.y[j]);
        out += buf;
    }
    return out;
}

void write_diff_curve_csv(const DiffCurve& d, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw input_error("cannot open '" + path + "' for writing");
    out << diff_curve_csv(d);
    if (!out)
        throw input_error("write failure on '" + path + "'");
}

}  // namespace stochdom
