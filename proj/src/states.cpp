#include "holonomy/states.hpp"

#include <cmath>
#include <random>
#include <string>

#include "holonomy/errors.hpp"

namespace holonomy {

DensityOperator DensityOperator::from_matrix(const ComplexMatrix& m) {
  check_square(m, "density operator");
  check_hermitian(m, kDensityTol, "density operator");
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > kDensityTol) {
    throw InvalidDensity("density operator trace is " + num(tr.real()) +
                         (tr.imag() != 0.0 ? " + " + num(tr.imag()) + "i" : "") +
                         ", expected 1");
  }
  ComplexMatrix sym = 0.5 * (m + m.adjoint());
  const double lowest = hermitian_eig(sym).eigenvalues(0);
  if (lowest < -kDensityTol) {
    throw InvalidDensity("density operator has negative eigenvalue " + num(lowest));
  }
  return DensityOperator(std::move(sym));
}

DensityOperator DensityOperator::pure(const ComplexVector& psi) {
  if (psi.size() == 0) throw DimensionMismatch("pure state vector is empty");
  if (std::abs(psi.norm() - 1.0) > kDensityTol) {
    throw InvalidDensity("pure state vector has norm " + num(psi.norm()));
  }
  return from_matrix(psi * psi.adjoint());
}

double BlochVector::norm() const { return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]); }

DensityOperator qubit_state(double r, double theta, double phi) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw InvalidPurity("Bloch radius r = " + num(r) + " outside [0, 1]");
  }
  if (!std::isfinite(theta) || !std::isfinite(phi)) throw InvalidAngle("non-finite angle");
  const double nx = std::sin(theta) * std::cos(phi);
  const double ny = std::sin(theta) * std::sin(phi);
  const double nz = std::cos(theta);
  const ComplexMatrix m =
      0.5 * (pauli::identity() + r * (nx * pauli::x() + ny * pauli::y() + nz * pauli::z()));
  return DensityOperator::from_matrix(m);
}

SpectralDecomposition spectral_decompose(const DensityOperator& rho) {
  const HermitianEig eig = hermitian_eig(rho.matrix());
  SpectralDecomposition out;
  double total = 0.0;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    const double w = eig.eigenvalues(k) < 0.0 ? 0.0 : eig.eigenvalues(k);
    out.weights.push_back(w);
    out.basis.push_back(eig.eigenvectors.col(k));
    total += w;
  }
  for (double& w : out.weights) w /= total;
  return out;
}

BlochVector bloch_of(const ComplexMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw NotQubit("Bloch vector requires a 2x2 operator, got dimension " +
                   num(m.rows()));
  }
  BlochVector b;
  b.r[0] = (m * pauli::x()).trace().real();
  b.r[1] = (m * pauli::y()).trace().real();
  b.r[2] = (m * pauli::z()).trace().real();
  return b;
}

BlochVector bloch_of(const DensityOperator& rho) { return bloch_of(rho.matrix()); }

DensityOperator random_density(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw DimensionMismatch("random_density: dim must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityOperator::from_matrix(0.5 * (m + m.adjoint()));
}

}  // namespace holonomy
