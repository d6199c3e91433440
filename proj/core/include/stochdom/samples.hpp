#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stochdom {

// A single sample: the observed values of one random variable, in the order
// given (sorting happens inside the estimators).  Values must be finite.
struct SampleSet {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
};

// Validates: nonempty, all values finite. Throws input_error otherwise.
SampleSet make_sample_set(std::vector<double> values);

// Reads one decimal value per line.  Lines starting with '#' and
// whitespace-only lines are skipped.  The decimal separator is '.'
// regardless of locale.  Throws input_error naming the 1-based line number
// of the first unparsable value.
std::vector<double> read_samples(std::istream& in, const std::string& source_name = "<stream>");
std::vector<double> read_sample_file(const std::string& path);

void write_sample_file(const std::string& path, const std::vector<double>& values);

}  // namespace stochdom
