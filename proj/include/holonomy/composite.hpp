#pragma once

#include <array>
#include <span>

#include "holonomy/evolution.hpp"
#include "holonomy/phases.hpp"
#include "holonomy/states.hpp"

namespace holonomy {

// Bipartite state on C^dim_a (x) C^dim_b.
struct CompositeState {
  std::size_t dim_a = 1;
  std::size_t dim_b = 1;
  DensityOperator rho_ab;

  /// Throws DimensionMismatch unless rho_ab.dim() == dim_a * dim_b.
  static CompositeState make(std::size_t dim_a, std::size_t dim_b, DensityOperator rho_ab);

  DensityOperator reduced_b() const;
};

/// I_A (x) U_B(t) at every grid point, generator I_A (x) H_B(t).
UnitaryPath lift_unitary(const UnitaryPath& u_b, std::size_t dim_a);

struct TheoremCheck {
  PhaseReport phi_ab;
  PhaseReport phi_b;
  double agreement = 0.0;  // phase_distance of the two geometric phases
};

/// Geometric phase of rho_AB under I (x) U_B against that of the reduced
/// state rho_B under U_B. Throws NotCyclic (either level) or NodalPoint.
TheoremCheck theorem_check(const CompositeState& state, const UnitaryPath& u_b,
                           const PhaseOptions& opts = {});

/// sum_i w_i |i><i|_A (x) rho_i^B, dim_a = weights.size().
/// Throws InvalidWeights, DimensionMismatch.
CompositeState build_correlated(std::span<const double> weights,
                                std::span<const DensityOperator> states_b);

/// r^B_j = Tr[rho_AB (I (x) sigma_j)] for a qubit B. Throws NotQubit.
std::array<double, 3> pauli_coefficients_b(const CompositeState& state);

}  // namespace holonomy
