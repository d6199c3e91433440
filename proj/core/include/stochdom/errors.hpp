#pragma once

#include <stdexcept>
#include <string>

namespace stochdom {

// Malformed input: unparsable sample files, mismatched sample sizes,
// invalid mixture specifications, out-of-domain arguments.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// An adaptive numeric routine could not reach the requested tolerance.
// Carries the best estimate obtained so callers can still inspect it.
class numeric_error : public std::runtime_error {
public:
    numeric_error(const std::string& what_arg, double best, double err)
        : std::runtime_error(what_arg), best_estimate(best), error_estimate(err) {}

    double best_estimate;
    double error_estimate;
};

// The signed dominance density is undefined: the two laws are equal, so the
// normalising constants have no value.
class undefined_density_error : public std::runtime_error {
public:
    explicit undefined_density_error(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

}  // namespace stochdom
