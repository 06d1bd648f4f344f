#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace holonomy {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr std::size_t kDefaultMaxDimension = 64;

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

/// Largest entrywise deviation |m - m^dag|.
double hermiticity_error(const ComplexMatrix& m);

bool is_finite(const ComplexMatrix& m);

/// Throws unless `m` is square, finite, non-empty and within the dimension cap.
void check_square(const ComplexMatrix& m, const char* what,
                  std::size_t max_dim = kDefaultMaxDimension);

/// Throws NotHermitian when the entrywise deviation exceeds `tol`.
void check_hermitian(const ComplexMatrix& m, double tol = kHermitianTol,
                     const char* what = "matrix");

struct HermitianEig {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // columns, unitary
};

/// Eigendecomposition of a Hermitian matrix, m = V diag(lambda) V^dag.
/// Ordering among tied eigenvalues is whatever the solver produces.
HermitianEig hermitian_eig(const ComplexMatrix& m);

/// exp(i s h) for Hermitian h, built from the eigendecomposition so the
/// result is unitary to rounding.
ComplexMatrix expm_hermitian_generator(const ComplexMatrix& h, double s);

// Cached eigendecomposition for evaluating exp(i s h) at many s.
class HermitianExponential {
 public:
  explicit HermitianExponential(const ComplexMatrix& h);
  ComplexMatrix operator()(double s) const;

 private:
  HermitianEig eig_;
};

/// (kron(a, b))[i*Nb + k, j*Nb + l] = a[i, j] * b[k, l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { A, B };

/// Partial trace of an operator on C^dim_a (x) C^dim_b, keeping `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a,
                            std::size_t dim_b, Subsystem keep);

/// Frobenius norm of [a, b].
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

/// Frobenius distance of u^dag u from the identity.
double unitarity_error(const ComplexMatrix& u);

}  // namespace holonomy
