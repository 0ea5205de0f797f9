#pragma once

#include <string_view>
#include <vector>

namespace stablekernel {

/// `points` values from start to stop inclusive, geometric when `logarithmic`.
std::vector<double> make_grid(double start, double stop, int points, bool logarithmic);

/// Parses "start:stop:points:log" or "start:stop:points:lin" (the spacing field defaults to log).
std::vector<double> parse_grid(std::string_view spec);

/// Inserts the midpoint (geometric for positive neighbours) between consecutive values.
std::vector<double> refine_grid(const std::vector<double>& grid);

}  // namespace stablekernel
