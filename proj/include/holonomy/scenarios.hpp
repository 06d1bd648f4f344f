#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holonomy/evolution.hpp"
#include "holonomy/states.hpp"

namespace holonomy {

// Closed-form phases for a built-in scenario, with the formula that produced
// them.
struct ExpectedPhases {
  double total = 0.0;
  double dynamical = 0.0;
  double geometric = 0.0;
  std::string source;
};

struct ScenarioSpec {
  std::string name;
  DensityOperator rho0;
  HamiltonianSchedule schedule;
  std::optional<ExpectedPhases> expected;
};

/// Qubit in a constant field along z: H = -omega sz for tau = pi / omega,
/// rho0 = qubit_state(r, theta, 0). U(tau) = -I.
ScenarioSpec example_one(double r, double theta, double omega = 1.0);

/// Qubit in a three-segment field. Generators omega sy, omega sz and
/// omega (sin phi sx - cos phi sy) for durations theta/(2 omega),
/// phi/(2 omega), theta/(2 omega); rho0 = (I + r sz) / 2.
/// Requires theta in (0, pi) and phi in (0, 2 pi].
ScenarioSpec example_two(double r, double theta, double phi, double omega = 1.0);

/// Random qubit state and a random piecewise schedule whose final segment
/// closes the loop: U(tau) is a rotation about the state's Bloch axis.
ScenarioSpec random_cyclic_qubit(std::uint64_t seed);

/// Hermitian K with x = exp(-i K) for a 2x2 unitary x.
ComplexMatrix qubit_log_generator(const ComplexMatrix& x);

struct BlochSample {
  double t = 0.0;
  BlochVector r;
};

/// Bloch vectors of rho(t) at `samples` uniformly spaced times in [0, tau].
/// Throws NotQubit.
std::vector<BlochSample> bloch_path(const ScenarioSpec& spec, std::size_t samples);

}  // namespace holonomy
