#include <random>

#include "doctest.h"
#include "holonomy/errors.hpp"
#include "holonomy/matcore.hpp"
#include "oracles.hpp"

using namespace holonomy;

TEST_CASE("hermitian_eig: identity, diagonal and rotated Pauli inputs") {
  const HermitianEig id = hermitian_eig(ComplexMatrix::Identity(2, 2));
  CHECK(id.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(id.eigenvalues(1) == doctest::Approx(1.0));
  CHECK(unitarity_error(id.eigenvectors) < 1e-12);

  const HermitianEig z = hermitian_eig(pauli::z());
  CHECK(z.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(z.eigenvalues(1) == doctest::Approx(1.0));
  // Columns are basis vectors up to phase: |1> for -1, |0> for +1.
  CHECK(std::abs(z.eigenvectors(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(z.eigenvectors(0, 1)) == doctest::Approx(1.0));

  const ComplexMatrix xz = (pauli::x() + pauli::z()) / std::sqrt(2.0);
  const HermitianEig e = hermitian_eig(xz);
  CHECK(e.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(e.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  ComplexMatrix m = pauli::x();
  m(0, 1) += 1e-9;
  CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("hermitian_eig reconstructs random Hermitian matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<Eigen::Index>(1 + trial % 8);
    const ComplexMatrix m = oracle::random_hermitian(rng, n);
    const HermitianEig e = hermitian_eig(m);
    const ComplexMatrix back =
        e.eigenvectors * e.eigenvalues.cast<Complex>().asDiagonal() * e.eigenvectors.adjoint();
    CHECK((m - back).norm() <= 1e-10);
    CHECK(unitarity_error(e.eigenvectors) <= 1e-12);
    for (Eigen::Index k = 1; k < n; ++k) CHECK(e.eigenvalues(k - 1) <= e.eigenvalues(k));
  }
}

TEST_CASE("expm_hermitian_generator: closed forms") {
  const double pi = oracle::kPi;
  CHECK((expm_hermitian_generator(pauli::z(), pi) + ComplexMatrix::Identity(2, 2)).norm() < 1e-14);
  std::mt19937_64 rng(3);
  const ComplexMatrix h = oracle::random_hermitian(rng, 3);
  CHECK((expm_hermitian_generator(h, 0.0) - ComplexMatrix::Identity(3, 3)).norm() < 1e-14);
  // e^{i pi/2 sy} = i sy = [[0, 1], [-1, 0]]
  ComplexMatrix expected(2, 2);
  expected << 0.0, 1.0, -1.0, 0.0;
  CHECK((expm_hermitian_generator(pauli::y(), pi / 2) - expected).norm() < 1e-14);
  CHECK_THROWS_AS(expm_hermitian_generator(pauli::x() + Complex(0, 1) * pauli::z(), 1.0),
                  NotHermitian);
}

TEST_CASE("expm_hermitian_generator matches a Taylor-series oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<Eigen::Index>(1 + trial % 6);
    const ComplexMatrix h = oracle::random_hermitian(rng, n);
    const double s = 0.1 * (trial - 25);
    const ComplexMatrix ref = oracle::taylor_expm(Complex(0, s) * h);
    const ComplexMatrix got = expm_hermitian_generator(h, s);
    CHECK((got - ref).norm() < 1e-11);
    CHECK(unitarity_error(got) < 1e-12);
  }
}

TEST_CASE("expm group property e^{ish} e^{ith} = e^{i(s+t)h}") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<Eigen::Index>(1 + trial % 4);
    const ComplexMatrix h = oracle::random_hermitian(rng, n);
    const double s = u(rng), t = u(rng);
    const ComplexMatrix lhs = expm_hermitian_generator(h, s) * expm_hermitian_generator(h, t);
    CHECK((lhs - expm_hermitian_generator(h, s + t)).norm() <= 1e-10);
  }
}

TEST_CASE("kron: block structure and index formula") {
  ComplexMatrix d1 = ComplexMatrix::Zero(4, 4);
  d1.diagonal() << 1.0, -1.0, 1.0, -1.0;
  CHECK((kron(ComplexMatrix::Identity(2, 2), pauli::z()) - d1).norm() == 0.0);
  ComplexMatrix d2 = ComplexMatrix::Zero(4, 4);
  d2.diagonal() << 1.0, 1.0, -1.0, -1.0;
  CHECK((kron(pauli::z(), ComplexMatrix::Identity(2, 2)) - d2).norm() == 0.0);
  ComplexMatrix anti = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) anti(i, 3 - i) = 1.0;
  CHECK((kron(pauli::x(), pauli::x()) - anti).norm() == 0.0);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = oracle::random_hermitian(rng, 1 + trial % 3);
    const ComplexMatrix b = oracle::random_hermitian(rng, 1 + trial % 4);
    CHECK((kron(a, b) - oracle::kron_index(a, b)).norm() == 0.0);
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) <= 1e-12);
  }
}

TEST_CASE("partial_trace: product, maximally mixed and Bell inputs") {
  const ComplexMatrix rho_a = (pauli::identity() + 0.3 * pauli::x()) / 2.0;
  const ComplexMatrix rho_b = (pauli::identity() + 0.6 * pauli::z() - 0.2 * pauli::y()) / 2.0;
  CHECK((partial_trace(kron(rho_a, rho_b), 2, 2, Subsystem::B) - rho_b).norm() < 1e-15);
  CHECK((partial_trace(kron(rho_a, rho_b), 2, 2, Subsystem::A) - rho_a).norm() < 1e-15);
  CHECK((partial_trace(ComplexMatrix::Identity(4, 4) / 4.0, 2, 2, Subsystem::B) -
         ComplexMatrix::Identity(2, 2) / 2.0)
            .norm() < 1e-15);

  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const ComplexMatrix proj = bell * bell.adjoint();
  CHECK((partial_trace(proj, 2, 2, Subsystem::B) - ComplexMatrix::Identity(2, 2) / 2.0).norm() <
        1e-15);

  CHECK_THROWS_AS(partial_trace(ComplexMatrix::Identity(4, 4), 2, 3, Subsystem::B),
                  DimensionMismatch);
}

TEST_CASE("partial_trace agrees with the basis-vector oracle and keeps the trace") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index na = 1 + trial % 3, nb = 1 + (trial / 3) % 3;
    const ComplexMatrix m = oracle::random_hermitian(rng, na * nb);
    const ComplexMatrix got = partial_trace(m, na, nb, Subsystem::B);
    CHECK((got - oracle::partial_trace_a_brute(m, na, nb)).norm() < 1e-12);
    CHECK(std::abs(got.trace() - m.trace()) <= 1e-12);
    CHECK(std::abs(partial_trace(m, na, nb, Subsystem::A).trace() - m.trace()) <= 1e-12);
  }
}

TEST_CASE("commutator_norm") {
  CHECK(commutator_norm(pauli::z(), pauli::z()) == 0.0);
  CHECK(commutator_norm(pauli::x(), pauli::y()) == doctest::Approx(2.0 * std::sqrt(2.0)));
  std::mt19937_64 rng(1);
  CHECK(commutator_norm(ComplexMatrix::Identity(3, 3), oracle::random_hermitian(rng, 3)) == 0.0);
  CHECK_THROWS_AS(commutator_norm(pauli::x(), ComplexMatrix::Identity(3, 3)), DimensionMismatch);
}

TEST_CASE("dimension cap and finiteness") {
  CHECK_THROWS_AS(check_square(ComplexMatrix::Identity(65, 65), "m"), DimensionMismatch);
  CHECK_NOTHROW(check_square(ComplexMatrix::Identity(65, 65), "m", 128));
  ComplexMatrix bad = pauli::x();
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(check_square(bad, "m"), DimensionMismatch);
}
