#include "holonomy/scenarios.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "holonomy/errors.hpp"

namespace holonomy {

namespace {

constexpr double kPi = std::numbers::pi;

void check_omega(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw InvalidSchedule("omega must be positive, got " + num(omega));
  }
}

}  // namespace

ScenarioSpec example_one(double r, double theta, double omega) {
  check_omega(omega);
  DensityOperator rho0 = qubit_state(r, theta, 0.0);
  auto schedule = HamiltonianSchedule::piecewise({{kPi / omega, -omega * pauli::z()}});
  const double dynamical = kPi * r * std::cos(theta);
  ExpectedPhases expected{kPi, dynamical, kPi * (1.0 - r * std::cos(theta)),
                          "constant field: phi = pi, phi_d = pi r cos(theta), "
                          "phi_g = pi (1 - r cos(theta))"};
  return {"example1", std::move(rho0), std::move(schedule), std::move(expected)};
}

ScenarioSpec example_two(double r, double theta, double phi, double omega) {
  check_omega(omega);
  if (!(r >= 0.0 && r <= 1.0)) {
    throw InvalidPurity("Bloch radius r = " + num(r) + " outside [0, 1]");
  }
  if (!(theta > 0.0 && theta < kPi)) {
    throw InvalidAngle("theta = " + num(theta) + " outside (0, pi)");
  }
  if (!(phi > 0.0 && phi <= 2.0 * kPi)) {
    throw InvalidAngle("phi = " + num(phi) + " outside (0, 2 pi]");
  }
  DensityOperator rho0 = qubit_state(r, 0.0, 0.0);
  const ComplexMatrix third = std::sin(phi) * pauli::x() - std::cos(phi) * pauli::y();
  auto schedule = HamiltonianSchedule::piecewise({
      {theta / (2.0 * omega), omega * pauli::y()},
      {phi / (2.0 * omega), omega * pauli::z()},
      {theta / (2.0 * omega), omega * third},
  });
  // atan2 continues -arctan[r tan(phi/2)] through phi = pi.
  const double total = std::atan2(-r * std::sin(0.5 * phi), std::cos(0.5 * phi));
  const double dynamical = -0.5 * phi * r * std::cos(theta);
  ExpectedPhases expected{total, dynamical, total - dynamical,
                          "three-segment field: phi = -arctan[r tan(phi/2)], "
                          "phi_d = -(phi/2) r cos(theta)"};
  return {"example2", std::move(rho0), std::move(schedule), std::move(expected)};
}

ComplexMatrix qubit_log_generator(const ComplexMatrix& x) {
  if (x.rows() != 2 || x.cols() != 2) throw NotQubit("qubit_log_generator needs a 2x2 matrix");
  const double gamma = 0.5 * std::arg(x.determinant());
  const ComplexMatrix y = std::polar(1.0, -gamma) * x;
  const double cos_a = 0.5 * y.trace().real();
  // y = cos a I - i sin a (m . sigma)
  const ComplexMatrix s = Complex(0.0, 0.5) * (y - y.adjoint());
  const std::array<ComplexMatrix, 3> sigmas{pauli::x(), pauli::y(), pauli::z()};
  std::array<double, 3> v{};
  double sin_a = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    v[j] = 0.5 * (s * sigmas[j]).trace().real();
    sin_a += v[j] * v[j];
  }
  sin_a = std::sqrt(sin_a);
  ComplexMatrix k = -gamma * pauli::identity();
  if (sin_a > 0.0) {
    const double a = std::atan2(sin_a, cos_a);
    for (std::size_t j = 0; j < 3; ++j) k += (a * v[j] / sin_a) * sigmas[j];
  } else if (cos_a < 0.0) {
    // y = -I: any axis with a = pi
    k += kPi * pauli::z();
  }
  return 0.5 * (k + k.adjoint());
}

ScenarioSpec random_cyclic_qubit(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> duration(0.2, 1.2);
  std::uniform_real_distribution<double> angle(0.2, 1.2);

  DensityOperator rho0 = random_density(2, seed);
  std::vector<ScheduleSegment> segments;
  ComplexMatrix w = pauli::identity();
  for (int s = 0; s < 2; ++s) {
    ComplexMatrix h = normal(rng) * pauli::identity();
    h += normal(rng) * pauli::x() + normal(rng) * pauli::y() + normal(rng) * pauli::z();
    const double dt = duration(rng);
    w = expm_hermitian_generator(h, -dt) * w;
    segments.push_back({dt, std::move(h)});
  }

  // Close on a rotation about the Bloch axis of rho0, which commutes with it.
  const BlochVector b = bloch_of(rho0);
  const double len = b.norm();
  ComplexMatrix axis = pauli::z();
  if (len > 1e-12) {
    axis = (b.r[0] * pauli::x() + b.r[1] * pauli::y() + b.r[2] * pauli::z()) / len;
  }
  const ComplexMatrix target = expm_hermitian_generator(axis, -angle(rng));
  const double dt = duration(rng);
  segments.push_back({dt, qubit_log_generator(target * w.adjoint()) / dt});

  return {"random-cyclic-" + std::to_string(seed), std::move(rho0),
          HamiltonianSchedule::piecewise(std::move(segments)), std::nullopt};
}

std::vector<BlochSample> bloch_path(const ScenarioSpec& spec, std::size_t samples) {
  if (spec.rho0.dim() != 2) throw NotQubit("bloch_path needs a qubit scenario");
  if (samples < 2) throw InvalidSchedule("bloch_path needs at least 2 samples");
  const double tau = spec.schedule.duration();
  std::vector<BlochSample> out;
  out.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const double t =
        k + 1 == samples ? tau : tau * static_cast<double>(k) / static_cast<double>(samples - 1);
    const ComplexMatrix u = unitary_at(spec.schedule, t);
    out.push_back({t, bloch_of(ComplexMatrix(u * spec.rho0.matrix() * u.adjoint()))});
  }
  return out;
}

}  // namespace holonomy
