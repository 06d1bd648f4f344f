#include <numbers>

#include "doctest.h"
#include "holonomy/errors.hpp"
#include "holonomy/scenarios.hpp"
#include "holonomy/transport.hpp"
#include "oracles.hpp"

using namespace holonomy;

namespace {

constexpr double kPi = std::numbers::pi;

UnitaryPath constant_field_path(std::size_t samples = kDefaultSamplesPerSegment) {
  return propagate(HamiltonianSchedule::piecewise({{kPi, -pauli::z()}}), samples);
}

UnitaryPath three_segment_path(double theta, double phi,
                               std::size_t samples = kDefaultSamplesPerSegment) {
  return propagate(example_two(0.5, theta, phi).schedule, samples);
}

UnitaryPath zero_path() {
  return propagate(HamiltonianSchedule::piecewise({{1.0, ComplexMatrix::Zero(2, 2)}}), 16);
}

// Counterexample phase on the correct branch: pi + atan2(-r sin a, cos a).
double counterexample_oracle(double r, double theta) {
  const double a = kPi * std::cos(theta);
  return oracle::principal(kPi + std::atan2(-r * std::sin(a), std::cos(a)));
}

}  // namespace

TEST_CASE("parallel_residual of ordinary evolution") {
  const UnitaryPath ex1 = constant_field_path();
  const double r = 0.6, theta = 0.5;
  CHECK(parallel_residual(qubit_state(r, theta), ex1) ==
        doctest::Approx(r * std::cos(theta)).epsilon(1e-12));
  CHECK(parallel_residual(qubit_state(r, theta), zero_path()) == 0.0);
  CHECK(parallel_residual(qubit_state(0.8, 0.0), three_segment_path(kPi / 2, 1.3)) <= 1e-8);
  CHECK_THROWS_AS(parallel_residual(random_density(3, 2), ex1), DimensionMismatch);
}

TEST_CASE("parallel_lift on the constant field") {
  const double r = 0.7, theta = 1.1;
  const DensityOperator rho = qubit_state(r, theta);
  const UnitaryPath path = constant_field_path();
  const TransportedPath lift = parallel_lift(rho, path);
  CHECK(lift.xi.front() == 0.0);
  for (std::size_t n = 0; n < path.size(); n += 11) {
    CHECK(std::abs(lift.xi[n] + path.times()[n] * r * std::cos(theta)) <= 1e-12);
  }
  CHECK(std::abs(lift.xi_final() + dynamical_phase(rho, path)) <= 1e-12);
  CHECK(parallel_residual(rho, lift.lifted) <= 1e-8);
  CHECK(oracle::distance(sjoqvist_phase(rho, lift), oracle::ex1_geometric(r, theta)) <= 1e-10);

  const TransportedPath idle = parallel_lift(rho, zero_path());
  for (double x : idle.xi) CHECK(x == 0.0);
  CHECK(sjoqvist_phase(rho, idle) == 0.0);
}

TEST_CASE("parallel_lift on the three-segment field") {
  for (double theta : {0.7, kPi / 2, 2.2}) {
    for (double phi : {0.9, 2.6}) {
      const double r = 0.5;
      const DensityOperator rho = qubit_state(r, 0.0);
      const UnitaryPath path = three_segment_path(theta, phi);
      const TransportedPath lift = parallel_lift(rho, path);
      CHECK(std::abs(lift.xi_final() - phi / 2 * r * std::cos(theta)) <= 1e-8);
      CHECK(parallel_residual(rho, lift.lifted) <= 1e-8);
      CHECK(phase_distance(sjoqvist_phase(rho, lift), geometric_phase(rho, path).geometric) <= 1e-6);
    }
  }
  const PhaseReport geo = geometric_phase(qubit_state(0.5, 0.0), three_segment_path(kPi / 2, 1.0));
  CHECK(oracle::distance(
            sjoqvist_phase(qubit_state(0.5, 0.0),
                           parallel_lift(qubit_state(0.5, 0.0), three_segment_path(kPi / 2, 1.0))),
            -std::atan(0.5 * std::tan(0.5))) <= 1e-10);
  CHECK(oracle::distance(geo.geometric, -std::atan(0.5 * std::tan(0.5))) <= 1e-10);
}

TEST_CASE("the U(1) lift does not depend on grid density") {
  const DensityOperator rho = qubit_state(0.5, 0.0);
  const double a = parallel_lift(rho, three_segment_path(1.2, 2.0, 256)).xi_final();
  const double b = parallel_lift(rho, three_segment_path(1.2, 2.0, 512)).xi_final();
  CHECK(std::abs(a - b) <= 1e-8);

  // Sampled constant-field schedule delivered on two grids.
  const auto field = [](double) { return ComplexMatrix(-pauli::z()); };
  const DensityOperator tilted = qubit_state(0.4, 0.9);
  const double s1 =
      parallel_lift(tilted, propagate(HamiltonianSchedule::sampled_from(field, kPi, 257))).xi_final();
  const double s2 =
      parallel_lift(tilted, propagate(HamiltonianSchedule::sampled_from(field, kPi, 513))).xi_final();
  CHECK(std::abs(s1 - s2) <= 1e-6);
}

TEST_CASE("lift refuses non-cyclic input") {
  CHECK_THROWS_AS(parallel_lift(qubit_state(0.5, 1.0), three_segment_path(1.0, 1.0)), NotCyclic);
}

TEST_CASE("Sjoqvist phase matches the geometric phase on random cyclic qubits") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ScenarioSpec spec = random_cyclic_qubit(seed);
    const UnitaryPath path = propagate(spec.schedule);
    const TransportedPath lift = parallel_lift(spec.rho0, path);
    const PhaseReport rep = geometric_phase(spec.rho0, path);
    CHECK(std::abs(lift.xi_final() + rep.dynamical) <= 1e-8);
    CHECK(phase_distance(sjoqvist_phase(spec.rho0, lift), rep.geometric) <= 1e-6);
    CHECK(parallel_residual(spec.rho0, lift.lifted) <= 1e-8);
  }
}

TEST_CASE("counterexample: a second parallel transport with the wrong phase") {
  const double r = 0.5, theta = kPi / 4;
  const CounterexampleResult res = counterexample_lift(r, theta);
  CHECK(res.residuals[0] <= 1e-8);
  CHECK(res.residuals[1] <= 1e-8);
  CHECK(oracle::distance(res.geometric, oracle::ex1_geometric(r, theta)) <= 1e-10);
  CHECK(std::abs(res.phase - counterexample_oracle(r, theta)) <= 1e-10);
  CHECK(phase_distance(res.phase, res.geometric) > 0.5);
}

TEST_CASE("counterexample: degenerate and invalid parameters") {
  const CounterexampleResult flat = counterexample_lift(0.5, kPi / 2);
  CHECK(oracle::distance(flat.phase, kPi) <= 1e-12);
  CHECK(oracle::distance(flat.geometric, kPi) <= 1e-12);

  CHECK_THROWS_AS(counterexample_lift(0.0, 0.4), InvalidPurity);
  CHECK_THROWS_AS(counterexample_lift(1.2, 0.4), InvalidPurity);
  CHECK_THROWS_AS(counterexample_lift(0.5, kPi / 3), SingularParameter);
}

TEST_CASE("counterexample differs from the geometric phase across the grid") {
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const double r = 0.1 + 0.8 * i / 9.0;
      const double theta = 0.2 + 1.1 * j / 9.0;
      const CounterexampleResult res = counterexample_lift(r, theta, 1.0, 64);
      CHECK(res.residuals[0] <= 1e-8);
      CHECK(res.residuals[1] <= 1e-8);
      CHECK(std::abs(res.phase - counterexample_oracle(r, theta)) <= 1e-10);
      CHECK(phase_distance(res.phase, res.geometric) > 1e-3);
    }
  }
}
