#include "stochdom/samples.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string_view>
#include <utility>

#include "stochdom/errors.hpp"

namespace stochdom {

SampleSet make_sample_set(std::vector<double> values) {
    if (values.empty())
        throw input_error("sample set must contain at least one value");
    for (double v : values)
        if (!std::isfinite(v))
            throw input_error("sample values must be finite");
    return SampleSet{std::move(values)};
}

std::vector<double> read_samples(std::istream& in, const std::string& source_name) {
    std::vector<double> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;  // blank line
        if (line[first] == '#') continue;          // comment line
        const std::size_t last = line.find_last_not_of(" \t\r\n");
        const std::string_view tok(line.data() + first, last - first + 1);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value))
            throw input_error(source_name + ":" + std::to_string(lineno) +
                              ": unparsable sample value '" + std::string(tok) + "'");
        out.push_back(value);
    }
    if (in.bad())
        throw input_error(source_name + ": read failure");
    return out;
}

std::vector<double> read_sample_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open sample file '" + path + "'");
    return read_samples(in, path);
}

void write_sample_file(const std::string& path, const std::vector<double>& values) {
    std::ofstream out(path);
    if (!out)
        throw input_error("cannot open '" + path + "' for writing");
    char buf[64];
    for (double v : values) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", v);
        out << buf;
    }
    out.flush();
    if (!out)
        throw input_error("write failure on '" + path + "'");
}

}  // namespace stochdom
