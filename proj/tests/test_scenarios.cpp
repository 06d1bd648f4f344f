#include <numbers>

#include "doctest.h"
#include "holonomy/errors.hpp"
#include "holonomy/phases.hpp"
#include "holonomy/scenarios.hpp"
#include "oracles.hpp"

using namespace holonomy;

namespace {

constexpr double kPi = std::numbers::pi;

PhaseReport run(const ScenarioSpec& spec) {
  return geometric_phase(spec.rho0, propagate(spec.schedule));
}

}  // namespace

TEST_CASE("example_one expected values") {
  CHECK(example_one(1.0, 0.9).expected->geometric == doctest::Approx(kPi * (1 - std::cos(0.9))));
  CHECK(example_one(0.0, 2.0).expected->geometric == doctest::Approx(kPi));
  CHECK(example_one(0.5, kPi / 3).expected->geometric == doctest::Approx(3 * kPi / 4));
  const ScenarioSpec spec = example_one(0.5, kPi / 3, 2.0);
  CHECK(spec.schedule.duration() == doctest::Approx(kPi / 2));
  CHECK(phase_distance(run(spec).geometric, spec.expected->geometric) <= 1e-10);
  CHECK_THROWS_AS(example_one(1.5, 0.0), InvalidPurity);
  CHECK_FALSE(spec.expected->source.empty());
}

TEST_CASE("example_two expected values") {
  for (double r : {0.3, 1.0}) {
    const double phi = 1.1;
    CHECK(example_two(r, kPi / 2, phi).expected->geometric ==
          doctest::Approx(-std::atan(r * std::tan(phi / 2))));
  }
  const ScenarioSpec tri = example_two(1.0, kPi / 2, kPi / 2);
  CHECK(tri.expected->geometric == doctest::Approx(-kPi / 4));
  CHECK(std::abs(run(tri).geometric + kPi / 4) <= 1e-12);

  for (double r : {0.2, 0.9}) {
    for (double theta : {0.4, 2.1}) {
      const ScenarioSpec full = example_two(r, theta, 2 * kPi);
      CHECK(phase_distance(full.expected->geometric, kPi * (1 + r * std::cos(theta))) <= 1e-12);
      CHECK(phase_distance(run(full).geometric, kPi * (1 + r * std::cos(theta))) <= 1e-10);
    }
  }

  CHECK_THROWS_AS(example_two(0.5, 0.0, 1.0), InvalidAngle);
  CHECK_THROWS_AS(example_two(0.5, kPi, 1.0), InvalidAngle);
  CHECK_THROWS_AS(example_two(0.5, 1.0, 0.0), InvalidAngle);
  CHECK_THROWS_AS(example_two(0.5, 1.0, 7.0), InvalidAngle);
  CHECK_THROWS_AS(example_two(-0.5, 1.0, 1.0), InvalidPurity);
}

TEST_CASE("engine matches every expected record") {
  for (double r : {0.1, 0.5, 0.95}) {
    for (double theta : {0.3, 1.4, 2.7}) {
      const ScenarioSpec one = example_one(r, theta);
      CHECK(phase_distance(run(one).geometric, one.expected->geometric) <= 1e-6);
      for (double phi : {0.5, 2.0, 4.0, 6.0}) {
        const ScenarioSpec two = example_two(r, theta, phi);
        const PhaseReport rep = run(two);
        CHECK(phase_distance(rep.geometric, two.expected->geometric) <= 1e-6);
        CHECK(phase_distance(rep.total, two.expected->total) <= 1e-10);
        CHECK(std::abs(rep.dynamical - two.expected->dynamical) <= 1e-10);
      }
    }
  }
}

TEST_CASE("propagated three-segment U(tau) matches the product form") {
  for (double theta : {0.5, 1.7}) {
    for (double phi : {0.8, 3.9}) {
      const UnitaryPath path = propagate(example_two(0.5, theta, phi).schedule);
      CHECK((path.final_unitary() - oracle::ex2_final_unitary(theta, phi)).norm() <= 1e-12);
    }
  }
}

TEST_CASE("phases are independent of omega") {
  const PhaseReport base = run(example_one(0.6, 1.2, 1.0));
  for (double omega : {0.5, 2.0}) {
    const PhaseReport rep = run(example_one(0.6, 1.2, omega));
    CHECK(std::abs(rep.total - base.total) <= 1e-10);
    CHECK(std::abs(rep.dynamical - base.dynamical) <= 1e-10);
    CHECK(std::abs(rep.geometric - base.geometric) <= 1e-10);
  }
  const PhaseReport base2 = run(example_two(0.6, 1.2, 2.5, 1.0));
  const PhaseReport fast = run(example_two(0.6, 1.2, 2.5, 3.0));
  CHECK(std::abs(fast.geometric - base2.geometric) <= 1e-10);
}

TEST_CASE("bloch_path") {
  const auto still = bloch_path(example_one(0.7, 0.0), 20);
  REQUIRE(still.size() == 20);
  for (const auto& s : still) {
    CHECK(std::abs(s.r.r[0]) < 1e-15);
    CHECK(std::abs(s.r.r[1]) < 1e-15);
    CHECK(s.r.r[2] == doctest::Approx(0.7));
  }

  const double r = 0.8, theta = 1.0, phi = 1.4;
  const ScenarioSpec spec = example_two(r, theta, phi);
  const auto path = bloch_path(spec, 100);
  CHECK(path.front().t == 0.0);
  CHECK(path.back().t == doctest::Approx(spec.schedule.duration()));
  CHECK(path.front().r.r[2] == doctest::Approx(r));
  for (int k = 0; k < 3; ++k) CHECK(std::abs(path.back().r.r[k] - path.front().r.r[k]) <= 1e-9);
  for (const auto& s : path) CHECK(std::abs(s.r.norm() - r) <= 1e-10);

  // Endpoint of the first segment, t1 = theta / 2.
  const auto two = bloch_path(
      ScenarioSpec{"first leg", spec.rho0,
                   HamiltonianSchedule::piecewise({spec.schedule.segments().front()}), std::nullopt},
      2);
  REQUIRE(two.size() == 2);
  CHECK(two[1].t == doctest::Approx(theta / 2));
  CHECK(two[1].r.r[0] == doctest::Approx(r * std::sin(theta)));
  CHECK(std::abs(two[1].r.r[1]) < 1e-14);
  CHECK(two[1].r.r[2] == doctest::Approx(r * std::cos(theta)));

  const ScenarioSpec big{"qutrit", random_density(3, 1),
                         HamiltonianSchedule::piecewise({{1.0, ComplexMatrix::Zero(3, 3)}}),
                         std::nullopt};
  CHECK_THROWS_AS(bloch_path(big, 4), NotQubit);
}

TEST_CASE("random cyclic qubits are cyclic and reproducible") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const ScenarioSpec a = random_cyclic_qubit(seed);
    const ScenarioSpec b = random_cyclic_qubit(seed);
    CHECK((a.rho0.matrix() - b.rho0.matrix()).norm() == 0.0);
    const UnitaryPath path = propagate(a.schedule);
    CHECK(cyclicity_residual(path, a.rho0) <= kExactCyclicityTol);
  }
}

TEST_CASE("qubit_log_generator inverts the exponential") {
  const ComplexMatrix k = 0.4 * pauli::x() - 1.1 * pauli::y() + 0.3 * pauli::z() +
                          0.2 * pauli::identity();
  const ComplexMatrix x = expm_hermitian_generator(k, -1.0);
  const ComplexMatrix back = qubit_log_generator(x);
  CHECK(hermiticity_error(back) <= 1e-12);
  CHECK((expm_hermitian_generator(back, -1.0) - x).norm() <= 1e-12);
}
