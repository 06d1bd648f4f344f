#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "holonomy/matcore.hpp"

namespace holonomy {

inline constexpr double kDensityTol = 1e-10;

// Hermitian, unit-trace, positive-semidefinite operator. Only constructible
// through validating factories, so every instance satisfies the invariants.
class DensityOperator {
 public:
  /// Validates `m` (Hermitian, trace and positivity within kDensityTol).
  /// Throws InvalidDensity / NotHermitian / DimensionMismatch.
  static DensityOperator from_matrix(const ComplexMatrix& m);
  /// |psi><psi| after checking ||psi|| = 1 within kDensityTol.
  static DensityOperator pure(const ComplexVector& psi);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }

 private:
  explicit DensityOperator(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

struct SpectralDecomposition {
  std::vector<double> weights;        // ascending, non-negative, sum 1
  std::vector<ComplexVector> basis;   // orthonormal
};

struct BlochVector {
  std::array<double, 3> r{};
  double norm() const;
};

/// rho = (I + r (sin t cos p sx + sin t sin p sy + cos t sz)) / 2.
DensityOperator qubit_state(double r, double theta, double phi = 0.0);

/// Eigen-decomposition rho = sum_k w_k |k><k|. Eigenvalues in [-1e-10, 0)
/// are clamped to zero and the weights renormalized.
SpectralDecomposition spectral_decompose(const DensityOperator& rho);

BlochVector bloch_of(const DensityOperator& rho);
BlochVector bloch_of(const ComplexMatrix& qubit_operator);

/// G G^dag / Tr(G G^dag) with i.i.d. standard complex Gaussian G.
DensityOperator random_density(std::size_t dim, std::uint64_t seed);

}  // namespace holonomy
