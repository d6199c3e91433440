// Finite mixture models: densities, distribution functions, quantiles,
// support geometry, affine closure, sampling, and JSON round-trips.
//
// Numerical conventions:
//   - the gaussian CDF goes through erfc to keep the far tails accurate;
//   - beta uses the regularised incomplete beta function and its inverse;
//   - densities with an integrable endpoint singularity (beta with a shape
//     parameter below one) are clamped to a large finite cap so that
//     integrators see finite values; the mass distortion of the clamp is
//     far below every tolerance used in this library;
//   - quantiles are found by bisection inside a finite bracket that carries
//     all but ~1e-16 of the mass, so infinite supports never leak into the
//     arithmetic.

#include "stochdom/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <boost/math/special_functions/beta.hpp>
#include <json.hpp>

#include "stochdom/errors.hpp"
#include "stochdom/rng.hpp"

namespace stochdom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343818684759;
constexpr double kSqrt2 = 1.4142135623730950488016887242096980785697;
constexpr double kTwoPi = 6.2831853071795864769252867665590057683943;
// Cap for densities with an integrable endpoint singularity.
constexpr double kDensityCap = 1e12;

double std_gauss_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }
double std_gauss_cdf(double z) { return 0.5 * std::erfc(-z / kSqrt2); }

double beta_log_norm(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Density of the base (untransformed) law at base coordinate x.
double base_pdf(const Component& c, double x) {
    switch (c.kind) {
        case ComponentKind::gaussian: {
            const double mu = c.params[0], sigma = c.params[1];
            return std_gauss_pdf((x - mu) / sigma) / sigma;
        }
        case ComponentKind::uniform: {
            const double lo = c.params[0], hi = c.params[1];
            return (x >= lo && x <= hi) ? 1.0 / (hi - lo) : 0.0;
        }
        case ComponentKind::beta: {
            const double a = c.params[0], b = c.params[1];
            if (x < 0.0 || x > 1.0) return 0.0;
            if (x == 0.0) {
                if (a > 1.0) return 0.0;
                if (a == 1.0) return std::exp(-beta_log_norm(a, b));
                return kDensityCap;
            }
            if (x == 1.0) {
                if (b > 1.0) return 0.0;
                if (b == 1.0) return std::exp(-beta_log_norm(a, b));
                return kDensityCap;
            }
            const double lv = (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) -
                              beta_log_norm(a, b);
            return std::min(std::exp(lv), kDensityCap);
        }
        case ComponentKind::lognormal: {
            if (x <= 0.0) return 0.0;
            const double mu = c.params[0], sigma = c.params[1];
            return std_gauss_pdf((std::log(x) - mu) / sigma) / (sigma * x);
        }
    }
    return 0.0;
}

// CDF of the base law at base coordinate x.
double base_cdf(const Component& c, double x) {
    switch (c.kind) {
        case ComponentKind::gaussian: {
            const double mu = c.params[0], sigma = c.params[1];
            return std_gauss_cdf((x - mu) / sigma);
        }
        case ComponentKind::uniform: {
            const double lo = c.params[0], hi = c.params[1];
            if (x <= lo) return 0.0;
            if (x >= hi) return 1.0;
            return (x - lo) / (hi - lo);
        }
        case ComponentKind::beta: {
            if (x <= 0.0) return 0.0;
            if (x >= 1.0) return 1.0;
            return boost::math::ibeta(c.params[0], c.params[1], x);
        }
        case ComponentKind::lognormal: {
            if (x <= 0.0) return 0.0;
            const double mu = c.params[0], sigma = c.params[1];
            return std_gauss_cdf((std::log(x) - mu) / sigma);
        }
    }
    return 0.0;
}

Interval base_support(const Component& c) {
    switch (c.kind) {
        case ComponentKind::gaussian: return {-kInf, kInf};
        case ComponentKind::uniform: return {c.params[0], c.params[1]};
        case ComponentKind::beta: return {0.0, 1.0};
        case ComponentKind::lognormal: return {0.0, kInf};
    }
    return {0.0, 0.0};
}

// Finite range carrying all but ~1e-16 of the base mass; used to bracket
// quantile bisection.
Interval base_bracket(const Component& c) {
    switch (c.kind) {
        case ComponentKind::gaussian: {
            const double mu = c.params[0], sigma = c.params[1];
            return {mu - 9.0 * sigma, mu + 9.0 * sigma};
        }
        case ComponentKind::uniform: return {c.params[0], c.params[1]};
        case ComponentKind::beta: return {0.0, 1.0};
        case ComponentKind::lognormal: {
            const double mu = c.params[0], sigma = c.params[1];
            return {0.0, std::exp(std::min(mu + 9.0 * sigma, 700.0))};
        }
    }
    return {0.0, 0.0};
}

Interval map_interval(const Component& c, Interval base) {
    const double u = c.scale * base.lo + c.shift;
    const double v = c.scale * base.hi + c.shift;
    return {std::min(u, v), std::max(u, v)};
}

Interval comp_support(const Component& c) { return map_interval(c, base_support(c)); }
Interval comp_bracket(const Component& c) { return map_interval(c, base_bracket(c)); }

double comp_pdf(const Component& c, double x) {
    return base_pdf(c, (x - c.shift) / c.scale) / std::abs(c.scale);
}

double comp_cdf(const Component& c, double x) {
    const double F = base_cdf(c, (x - c.shift) / c.scale);
    return c.scale > 0.0 ? F : 1.0 - F;
}

void validate_component(const Component& c) {
    if (c.params.size() != 2)
        throw input_error("component '" + to_string(c.kind) +
                          "' requires exactly two parameters");
    const double p0 = c.params[0], p1 = c.params[1];
    if (!std::isfinite(p0) || !std::isfinite(p1))
        throw input_error("component parameters must be finite");
    switch (c.kind) {
        case ComponentKind::gaussian:
        case ComponentKind::lognormal:
            if (!(p1 > 0.0))
                throw input_error("'" + to_string(c.kind) +
                                  "' requires a positive standard deviation");
            break;
        case ComponentKind::uniform:
            if (!(p0 < p1))
                throw input_error("'uniform' requires lo < hi");
            break;
        case ComponentKind::beta:
            if (!(p0 > 0.0) || !(p1 > 0.0))
                throw input_error("'beta' requires positive shape parameters");
            break;
    }
    if (!std::isfinite(c.weight) || c.weight < 0.0)
        throw input_error("component weight must be finite and nonnegative");
    if (!std::isfinite(c.scale) || c.scale == 0.0 || !std::isfinite(c.shift))
        throw input_error("component affine map requires finite shift and nonzero finite scale");
}

double draw_std_gaussian(std::mt19937_64& rng) {
    // Box-Muller, cosine branch: exactly two engine outputs per draw.
    const double u1 = detail::uniform01_positive(rng);
    const double u2 = detail::uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double draw_base(const Component& c, std::mt19937_64& rng) {
    switch (c.kind) {
        case ComponentKind::gaussian:
            return c.params[0] + c.params[1] * draw_std_gaussian(rng);
        case ComponentKind::uniform:
            return detail::uniform_in(rng, c.params[0], c.params[1]);
        case ComponentKind::beta:
            return boost::math::ibeta_inv(c.params[0], c.params[1],
                                          detail::uniform01(rng));
        case ComponentKind::lognormal:
            return std::exp(c.params[0] + c.params[1] * draw_std_gaussian(rng));
    }
    return 0.0;
}

}  // namespace

std::string to_string(ComponentKind k) {
    switch (k) {
        case ComponentKind::gaussian: return "gaussian";
        case ComponentKind::uniform: return "uniform";
        case ComponentKind::beta: return "beta";
        case ComponentKind::lognormal: return "lognormal";
    }
    return "unknown";
}

ComponentKind component_kind_from_string(const std::string& name) {
    if (name == "gaussian") return ComponentKind::gaussian;
    if (name == "uniform") return ComponentKind::uniform;
    if (name == "beta") return ComponentKind::beta;
    if (name == "lognormal") return ComponentKind::lognormal;
    throw input_error("unknown component kind '" + name +
                      "' (expected gaussian, uniform, beta, or lognormal)");
}

MixtureModel::MixtureModel(std::vector<Component> components)
    : components_(std::move(components)) {
    if (components_.empty())
        throw input_error("mixture must have at least one component");
    double wsum = 0.0;
    for (const Component& c : components_) {
        validate_component(c);
        wsum += c.weight;
    }
    if (std::abs(wsum - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "component weights must sum to 1 (got " << wsum << ")";
        throw input_error(os.str());
    }
}

double MixtureModel::pdf(double x) const {
    double v = 0.0;
    for (const Component& c : components_) v += c.weight * comp_pdf(c, x);
    return v;
}

double MixtureModel::cdf(double x) const {
    double v = 0.0;
    for (const Component& c : components_) v += c.weight * comp_cdf(c, x);
    return std::min(std::max(v, 0.0), 1.0);
}

double MixtureModel::quantile(double p) const {
    if (!(p >= 0.0 && p <= 1.0))
        throw input_error("quantile requires a probability in [0, 1]");
    const Interval s = support();
    if (p == 0.0) return s.lo;
    if (p == 1.0) return s.hi;

    double lo = kInf, hi = -kInf;
    for (const Component& c : components_) {
        const Interval b = comp_bracket(c);
        lo = std::min(lo, b.lo);
        hi = std::max(hi, b.hi);
    }
    // Widen until the bracket straddles p (the 1e-16 tail allowance could in
    // principle miss an extreme p); bounded expansion keeps this finite.
    for (int i = 0; i < 64 && cdf(lo) > p; ++i) lo -= std::max(1.0, std::abs(lo));
    for (int i = 0; i < 64 && cdf(hi) < p; ++i) hi += std::max(1.0, std::abs(hi));

    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (cdf(mid) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

Interval MixtureModel::support() const {
    double lo = kInf, hi = -kInf;
    for (const Component& c : components_) {
        const Interval s = comp_support(c);
        lo = std::min(lo, s.lo);
        hi = std::max(hi, s.hi);
    }
    return {lo, hi};
}

Interval MixtureModel::truncated_support(double eps) const {
    if (!(eps > 0.0 && eps < 0.5))
        throw input_error("truncated_support requires eps in (0, 0.5)");
    const Interval s = support();
    const double lo = std::isfinite(s.lo) ? s.lo : quantile(eps);
    const double hi = std::isfinite(s.hi) ? s.hi : quantile(1.0 - eps);
    return {lo, hi};
}

std::vector<double> MixtureModel::breakpoints() const {
    std::vector<double> pts;
    for (const Component& c : components_) {
        const Interval s = comp_support(c);
        if (std::isfinite(s.lo)) pts.push_back(s.lo);
        if (std::isfinite(s.hi)) pts.push_back(s.hi);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<Interval> MixtureModel::support_intervals() const {
    std::vector<Interval> parts;
    parts.reserve(components_.size());
    for (const Component& c : components_) parts.push_back(comp_support(c));
    std::sort(parts.begin(), parts.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (const Interval& p : parts) {
        if (!merged.empty() && p.lo <= merged.back().hi)
            merged.back().hi = std::max(merged.back().hi, p.hi);
        else
            merged.push_back(p);
    }
    return merged;
}

MixtureModel make_gaussian(double mu, double sigma) {
    return MixtureModel({Component{ComponentKind::gaussian, {mu, sigma}, 1.0}});
}

MixtureModel make_uniform(double lo, double hi) {
    return MixtureModel({Component{ComponentKind::uniform, {lo, hi}, 1.0}});
}

MixtureModel make_beta(double alpha, double beta) {
    return MixtureModel({Component{ComponentKind::beta, {alpha, beta}, 1.0}});
}

MixtureModel make_lognormal(double mu, double sigma) {
    return MixtureModel({Component{ComponentKind::lognormal, {mu, sigma}, 1.0}});
}

MixtureModel make_mixture(const std::vector<std::pair<double, MixtureModel>>& weighted) {
    if (weighted.empty())
        throw input_error("make_mixture requires at least one model");
    std::vector<Component> comps;
    for (const auto& [w, model] : weighted) {
        if (!std::isfinite(w) || w < 0.0)
            throw input_error("mixture weights must be finite and nonnegative");
        for (Component c : model.components()) {
            c.weight *= w;
            comps.push_back(std::move(c));
        }
    }
    return MixtureModel(std::move(comps));  // constructor checks the weight sum
}

MixtureModel transform(const MixtureModel& m, const AffineTransform& t) {
    if (!std::isfinite(t.scale) || t.scale == 0.0 || !std::isfinite(t.shift))
        throw input_error("transform requires finite shift and nonzero finite scale");
    std::vector<Component> comps = m.components();
    for (Component& c : comps) {
        c.scale *= t.scale;
        c.shift = t.scale * c.shift + t.shift;
    }
    return MixtureModel(std::move(comps));
}

double sample_one(const MixtureModel& m, std::mt19937_64& rng) {
    const auto& comps = m.components();
    std::size_t pick = comps.size() - 1;
    if (comps.size() > 1) {
        const double u = detail::uniform01(rng);
        double acc = 0.0;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            acc += comps[i].weight;
            if (u < acc) {
                pick = i;
                break;
            }
        }
    }
    const Component& c = comps[pick];
    return c.scale * draw_base(c, rng) + c.shift;
}

std::vector<double> sample(const MixtureModel& m, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_one(m, rng));
    return out;
}

namespace {

MixtureModel mixture_from(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("components") || !j["components"].is_array() ||
        j["components"].empty())
        throw input_error("mixture JSON must contain a nonempty 'components' array");
    std::vector<Component> comps;
    for (const auto& jc : j["components"]) {
        if (!jc.is_object())
            throw input_error("each component must be a JSON object");
        Component c;
        try {
            c.kind = component_kind_from_string(jc.at("kind").get<std::string>());
            const auto& jp = jc.at("params");
            if (!jp.is_array())
                throw input_error("component 'params' must be an array of two numbers");
            c.params = jp.get<std::vector<double>>();
            c.weight = jc.at("weight").get<double>();
            if (jc.contains("scale")) c.scale = jc["scale"].get<double>();
            if (jc.contains("shift")) c.shift = jc["shift"].get<double>();
        } catch (const nlohmann::json::exception& e) {
            throw input_error(std::string("malformed component JSON: ") + e.what());
        }
        comps.push_back(std::move(c));
    }
    return MixtureModel(std::move(comps));
}

}  // namespace

MixtureModel mixture_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("invalid mixture JSON: ") + e.what());
    }
    return mixture_from(j);
}

MixtureModel load_mixture(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open mixture file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return mixture_from_json(buf.str());
}

std::string mixture_to_json(const MixtureModel& m) {
    nlohmann::json comps = nlohmann::json::array();
    for (const Component& c : m.components()) {
        nlohmann::json jc;
        jc["kind"] = to_string(c.kind);
        jc["params"] = c.params;
        jc["weight"] = c.weight;
        if (c.scale != 1.0) jc["scale"] = c.scale;
        if (c.shift != 0.0) jc["shift"] = c.shift;
        comps.push_back(std::move(jc));
    }
    nlohmann::json j;
    j["components"] = std::move(comps);
    return j.dump(2);
}

void save_mixture(const MixtureModel& m, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw input_error("cannot open '" + path + "' for writing");
    out << mixture_to_json(m) << "\n";
    if (!out)
        throw input_error("write failure on '" + path + "'");
}

}  // namespace stochdom
