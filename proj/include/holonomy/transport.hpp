#pragma once

#include <array>
#include <vector>

#include "holonomy/evolution.hpp"
#include "holonomy/phases.hpp"
#include "holonomy/states.hpp"

namespace holonomy {

inline constexpr double kParallelTol = 1e-8;

// U'(t) = e^{i xi(t)} U(t) with xi chosen so U' is parallel transported
// along rho(t). `lifted` carries the adjusted generator H(t) - xi'(t) I.
struct TransportedPath {
  UnitaryPath base;
  std::vector<double> xi;  // on the base grid, xi(0) = 0
  UnitaryPath lifted;

  double xi_final() const { return xi.back(); }
};

/// max over the grid of |Tr[rho0 U^dag dU/dt]|, i.e. |Tr[rho(t) H(t)]|.
/// Segment boundaries are checked against the generator on both sides.
double parallel_residual(const DensityOperator& rho0, const UnitaryPath& path);

/// Unique U(1) parallel lift with xi(0) = 0 and xi' = Tr[rho(t) H(t)], so
/// xi(tau) equals minus the dynamical phase. Throws NotCyclic.
TransportedPath parallel_lift(const DensityOperator& rho0, const UnitaryPath& path,
                              const PhaseOptions& opts = {});

/// arg Tr[rho0 U'(tau)] for a parallel lift. Throws NodalPoint.
double sjoqvist_phase(const DensityOperator& rho0, const TransportedPath& lifted,
                      const PhaseOptions& opts = {});

struct CounterexampleResult {
  // max |Tr[rho_+- U''^dag dU''/dt]| for the two eigenprojectors of rho0
  std::array<double, 2> residuals{};
  double phase = 0.0;      // arg Tr[rho0 U''(tau)]
  double geometric = 0.0;  // geometric phase of rho0 under the original U
};

/// Alternative parallel transport for the constant-field qubit:
/// U''(t) = e^{i w t sz} e^{-i w t cos(theta) n.sigma}, n = (sin theta, 0, cos theta).
/// It is parallel for both eigenprojectors of rho0 yet its final phase is
/// not the geometric phase. Throws InvalidPurity, SingularParameter.
CounterexampleResult counterexample_lift(double r, double theta, double omega = 1.0,
                                         std::size_t samples = kDefaultSamplesPerSegment);

}  // namespace holonomy
