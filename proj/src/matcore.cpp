#include "holonomy/matcore.hpp"

#include <cmath>
#include <string>

#include "holonomy/errors.hpp"

namespace holonomy {

namespace pauli {
ComplexMatrix identity() { return ComplexMatrix::Identity(2, 2); }

ComplexMatrix x() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

ComplexMatrix y() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

ComplexMatrix z() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}
}  // namespace pauli

double hermiticity_error(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

void check_square(const ComplexMatrix& m, const char* what, std::size_t max_dim) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw DimensionMismatch(std::string(what) + " must be a non-empty square matrix, got " +
                            num(m.rows()) + "x" + num(m.cols()));
  }
  if (static_cast<std::size_t>(m.rows()) > max_dim) {
    throw DimensionMismatch(std::string(what) + " dimension " + num(m.rows()) +
                            " exceeds the cap of " + num(max_dim));
  }
  if (!is_finite(m)) {
    throw DimensionMismatch(std::string(what) + " has non-finite entries");
  }
}

void check_hermitian(const ComplexMatrix& m, double tol, const char* what) {
  const double err = hermiticity_error(m);
  if (!(err <= tol)) {
    throw NotHermitian(std::string(what) + " is not Hermitian (max |m - m^dag| = " +
                       num(err) + ")");
  }
}

HermitianEig hermitian_eig(const ComplexMatrix& m) {
  check_square(m, "hermitian_eig input");
  check_hermitian(m, kHermitianTol, "hermitian_eig input");
  // Symmetrize so the solver sees an exactly Hermitian lower triangle.
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

HermitianExponential::HermitianExponential(const ComplexMatrix& h) : eig_(hermitian_eig(h)) {}

ComplexMatrix HermitianExponential::operator()(double s) const {
  const auto n = eig_.eigenvalues.size();
  ComplexVector phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double a = s * eig_.eigenvalues(k);
    phases(k) = Complex(std::cos(a), std::sin(a));
  }
  return eig_.eigenvectors * phases.asDiagonal() * eig_.eigenvectors.adjoint();
}

ComplexMatrix expm_hermitian_generator(const ComplexMatrix& h, double s) {
  return HermitianExponential(h)(s);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const auto ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  ComplexMatrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j) out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep) {
  const auto na = static_cast<Eigen::Index>(dim_a);
  const auto nb = static_cast<Eigen::Index>(dim_b);
  if (na == 0 || nb == 0 || m.rows() != na * nb || m.cols() != na * nb) {
    throw DimensionMismatch("partial_trace: matrix is " + num(m.rows()) + "x" +
                            num(m.cols()) + " but dim_a*dim_b = " +
                            num(dim_a * dim_b));
  }
  if (keep == Subsystem::B) {
    ComplexMatrix out = ComplexMatrix::Zero(nb, nb);
    for (Eigen::Index i = 0; i < na; ++i) out += m.block(i * nb, i * nb, nb, nb);
    return out;
  }
  ComplexMatrix out(na, na);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index j = 0; j < na; ++j) out(i, j) = m.block(i * nb, j * nb, nb, nb).trace();
  return out;
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw DimensionMismatch("commutator_norm: operand shapes differ");
  }
  return (a * b - b * a).norm();
}

double unitarity_error(const ComplexMatrix& u) {
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
}

}  // namespace holonomy
