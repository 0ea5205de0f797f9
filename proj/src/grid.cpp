#include "stablekernel/grid.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "stablekernel/errors.hpp"

namespace stablekernel {

std::vector<double> make_grid(double start, double stop, int points, bool logarithmic) {
    if (points < 1) throw DomainError("grid needs at least one point");
    if (!std::isfinite(start) || !std::isfinite(stop)) throw DomainError("grid bounds must be finite");
    if (logarithmic && !(start > 0.0 && stop > 0.0)) throw DomainError("logarithmic grid needs positive bounds");
    std::vector<double> out;
    out.reserve(points);
    if (points == 1) {
        out.push_back(start);
        return out;
    }
    for (int i = 0; i < points; ++i) {
        const double f = static_cast<double>(i) / (points - 1);
        out.push_back(logarithmic ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                                  : start + f * (stop - start));
    }
    out.front() = start;
    out.back() = stop;
    return out;
}

std::vector<double> parse_grid(std::string_view spec) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const auto colon = spec.find(':', pos);
        fields.push_back(spec.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos));
        if (colon == std::string_view::npos) break;
        pos = colon + 1;
    }
    const std::string bad = "radius grid must look like start:stop:points:log, got \"" + std::string(spec) + "\"";
    if (fields.size() < 3 || fields.size() > 4) throw DomainError(bad);
    auto number = [&](std::string_view f) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
        if (f.empty() || ec != std::errc{} || ptr != f.data() + f.size()) throw DomainError(bad);
        return v;
    };
    const double start = number(fields[0]);
    const double stop = number(fields[1]);
    const double points = number(fields[2]);
    if (points != std::floor(points) || points < 1) throw DomainError(bad);
    bool logarithmic = true;
    if (fields.size() == 4) {
        if (fields[3] == "lin") {
            logarithmic = false;
        } else if (fields[3] != "log") {
            throw DomainError(bad);
        }
    }
    return make_grid(start, stop, static_cast<int>(points), logarithmic);
}

std::vector<double> refine_grid(const std::vector<double>& grid) {
    std::vector<double> out;
    out.reserve(2 * grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i > 0) {
            const double a = grid[i - 1];
            const double b = grid[i];
            out.push_back(a > 0.0 && b > 0.0 ? std::sqrt(a * b) : 0.5 * (a + b));
        }
        out.push_back(grid[i]);
    }
    return out;
}

}  // namespace stablekernel
