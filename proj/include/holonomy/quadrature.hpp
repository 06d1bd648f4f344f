#pragma once

#include <span>
#include <vector>

namespace holonomy {

/// Composite Simpson rule over uniformly spaced samples with spacing `h`.
/// An odd interval count closes with the one-interval quadratic rule
/// h (5 f_n + 8 f_{n-1} - f_{n-2}) / 12; a single interval falls back to the
/// trapezoid.
double composite_simpson(std::span<const double> f, double h);

/// Running integral at every sample, built from the same rules as
/// composite_simpson, so the last entry equals composite_simpson(f, h).
std::vector<double> cumulative_simpson(std::span<const double> f, double h);

}  // namespace holonomy
