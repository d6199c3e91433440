#pragma once

// One-dimensional finite mixture models with exact affine transforms.
//
// A model is a convex combination of parametric components (gaussian,
// uniform, beta, lognormal).  Each component carries its own affine map
// (scale, shift) applied to the base law, which closes the family under
// affine transforms of the random variable: scaling a beta or lognormal
// mixture stays exactly representable instead of being approximated.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace stochdom {

enum class ComponentKind { gaussian, uniform, beta, lognormal };

std::string to_string(ComponentKind k);
ComponentKind component_kind_from_string(const std::string& name);

struct Component {
    ComponentKind kind = ComponentKind::gaussian;
    // gaussian/lognormal: {mu, sigma}; uniform: {lo, hi}; beta: {alpha, beta}
    std::vector<double> params;
    double weight = 1.0;  // nonnegative; weights of a model sum to 1
    double scale = 1.0;   // affine map x = scale * x_base + shift; scale != 0
    double shift = 0.0;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

class MixtureModel {
public:
    MixtureModel() = default;

    // Validates: at least one component, two parameters each with
    // kind-specific constraints, nonnegative weights summing to 1 within
    // 1e-12, nonzero scales.  Throws input_error otherwise.
    explicit MixtureModel(std::vector<Component> components);

    const std::vector<Component>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }

    double pdf(double x) const;
    double cdf(double x) const;

    // Inverse CDF by bisection; requires p in [0, 1].
    double quantile(double p) const;

    // Convex hull of the component supports (endpoints may be infinite).
    Interval support() const;

    // Support clipped to the [eps, 1-eps] quantile range; bounds every
    // numerical integral so that at most 2*eps probability mass is ignored.
    Interval truncated_support(double eps = 1e-12) const;

    // Finite points where the density is non-smooth (component support
    // endpoints); integrators split at these.
    std::vector<double> breakpoints() const;

    // Closed intervals whose union carries all probability mass; the density
    // is exactly zero outside.  Sorted and disjoint (overlaps merged).
    std::vector<Interval> support_intervals() const;

private:
    std::vector<Component> components_;
};

struct AffineTransform {
    double scale = 1.0;  // must be nonzero
    double shift = 0.0;
};

MixtureModel make_gaussian(double mu, double sigma);
MixtureModel make_uniform(double lo, double hi);
MixtureModel make_beta(double alpha, double beta);
MixtureModel make_lognormal(double mu, double sigma);

// Convex combination of existing models; weights must be nonnegative and
// sum to 1 within 1e-12.
MixtureModel make_mixture(const std::vector<std::pair<double, MixtureModel>>& weighted);

// Law of scale * X + shift, exact in closed form.
MixtureModel transform(const MixtureModel& m, const AffineTransform& t);

// n iid draws; bit-identical for fixed (model, n, seed) on IEEE platforms.
std::vector<double> sample(const MixtureModel& m, std::size_t n, std::uint64_t seed);

// Single draw consuming the supplied engine (used to interleave streams).
double sample_one(const MixtureModel& m, std::mt19937_64& rng);

// JSON serialisation. Format:
//   {"components":[{"kind":"gaussian","params":[0.0,1.0],"weight":1.0}]}
// Components accept optional "scale" and "shift" (defaults 1 and 0).
MixtureModel mixture_from_json(const std::string& text);
MixtureModel load_mixture(const std::string& path);
std::string mixture_to_json(const MixtureModel& m);
void save_mixture(const MixtureModel& m, const std::string& path);

}  // namespace stochdom
