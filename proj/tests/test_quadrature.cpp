#include <cmath>
#include <vector>

#include "doctest.h"
#include "holonomy/quadrature.hpp"

using holonomy::composite_simpson;
using holonomy::cumulative_simpson;

namespace {

std::vector<double> sample(double (*f)(double), double a, double b, std::size_t intervals) {
  std::vector<double> out;
  for (std::size_t k = 0; k <= intervals; ++k) {
    out.push_back(f(a + (b - a) * static_cast<double>(k) / static_cast<double>(intervals)));
  }
  return out;
}

double cubic(double x) { return 2.0 * x * x * x - x * x + 3.0; }

}  // namespace

TEST_CASE("Simpson is exact on cubics for even interval counts") {
  // int_0^2 (2x^3 - x^2 + 3) dx = 8 - 8/3 + 6
  const double exact = 8.0 - 8.0 / 3.0 + 6.0;
  const auto f = sample(cubic, 0.0, 2.0, 8);
  CHECK(composite_simpson(f, 0.25) == doctest::Approx(exact).epsilon(1e-14));
}

TEST_CASE("odd interval counts and the two-point fallback") {
  const auto quad = [](double x) { return x * x; };
  std::vector<double> f;
  for (int k = 0; k <= 5; ++k) f.push_back(quad(0.2 * k));
  // Quadratic pieces integrate x^2 exactly: 1/3.
  CHECK(composite_simpson(f, 0.2) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(composite_simpson(std::vector<double>{1.0, 3.0}, 0.5) == doctest::Approx(1.0));
  CHECK(composite_simpson(std::vector<double>{4.0}, 1.0) == 0.0);
}

TEST_CASE("cumulative Simpson ends at the composite value and tracks the antiderivative") {
  for (std::size_t n : {2u, 3u, 7u, 64u, 65u}) {
    const auto f = sample([](double x) { return std::cos(x); }, 0.0, 2.0, n);
    const double h = 2.0 / static_cast<double>(n);
    const auto running = cumulative_simpson(f, h);
    CHECK(running.front() == 0.0);
    CHECK(running.back() == doctest::Approx(composite_simpson(f, h)).epsilon(1e-15));
    if (n >= 64) {
      for (std::size_t k = 0; k <= n; ++k) {
        CHECK(std::abs(running[k] - std::sin(h * static_cast<double>(k))) < 1e-7);
      }
    }
  }
}

TEST_CASE("Simpson converges at fourth order") {
  const double exact = std::sin(1.0);
  const auto err = [&](std::size_t n) {
    const auto f = sample([](double x) { return std::cos(x); }, 0.0, 1.0, n);
    return std::abs(composite_simpson(f, 1.0 / static_cast<double>(n)) - exact);
  };
  const double ratio = err(16) / err(32);
  CHECK(ratio > 14.0);
  CHECK(ratio < 18.0);
}
