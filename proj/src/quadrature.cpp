#include "holonomy/quadrature.hpp"

#include <cstddef>

namespace holonomy {

namespace {

double simpson_even(std::span<const double> f, std::size_t intervals, double h) {
  double acc = 0.0;
  for (std::size_t k = 0; k + 2 <= intervals; k += 2) acc += f[k] + 4.0 * f[k + 1] + f[k + 2];
  return acc * h / 3.0;
}

// Integral over [x_{k-1}, x_k] of the quadratic through x_{k-2}, x_{k-1}, x_k.
double closing_piece(std::span<const double> f, std::size_t k, double h) {
  return h * (5.0 * f[k] + 8.0 * f[k - 1] - f[k - 2]) / 12.0;
}

}  // namespace

double composite_simpson(std::span<const double> f, double h) {
  if (f.size() < 2) return 0.0;
  const std::size_t n = f.size() - 1;
  if (n == 1) return 0.5 * h * (f[0] + f[1]);
  if (n % 2 == 0) return simpson_even(f, n, h);
  return simpson_even(f, n - 1, h) + closing_piece(f, n, h);
}

std::vector<double> cumulative_simpson(std::span<const double> f, double h) {
  std::vector<double> out(f.size(), 0.0);
  if (f.size() < 2) return out;
  if (f.size() == 2) {
    out[1] = 0.5 * h * (f[0] + f[1]);
    return out;
  }
  for (std::size_t k = 1; k < f.size(); ++k) {
    if (k % 2 == 0) {
      out[k] = out[k - 2] + (f[k - 2] + 4.0 * f[k - 1] + f[k]) * h / 3.0;
    } else if (k == 1) {
      // Forward quadratic through x_0, x_1, x_2.
      out[1] = h * (5.0 * f[0] + 8.0 * f[1] - f[2]) / 12.0;
    } else {
      out[k] = out[k - 1] + closing_piece(f, k, h);
    }
  }
  return out;
}

}  // namespace holonomy
