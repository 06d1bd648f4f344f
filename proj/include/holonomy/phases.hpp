#pragma once

#include <optional>

#include "holonomy/evolution.hpp"
#include "holonomy/states.hpp"

namespace holonomy {

inline constexpr double kNodalTol = 1e-9;

struct PhaseOptions {
  // Falls back to UnitaryPath::cyclicity_tol() when unset.
  std::optional<double> cyclicity_tol;
  double nodal_tol = kNodalTol;
};

// Phases acquired by rho0 over one cycle of a unitary path.
//
// `total` is the principal value of arg Tr[rho0 U(tau)], `dynamical` the
// unwrapped integral -int Tr[rho(t) H(t)] dt, and `geometric` their raw
// difference. At a nodal point the total and geometric phases are NaN.
struct PhaseReport {
  double total = 0.0;
  double dynamical = 0.0;
  double geometric = 0.0;
  double geometric_mod = 0.0;  // [0, 2 pi)
  double trace_magnitude = 0.0;
  double cyclicity_residual = 0.0;
  bool nodal = false;
};

/// Throws NotCyclic when the residual exceeds the tolerance; returns it.
double require_cyclic(const DensityOperator& rho0, const UnitaryPath& path,
                      const PhaseOptions& opts = {});

/// arg Tr[rho0 U(tau)] in (-pi, pi]. Throws NotCyclic, NodalPoint.
double total_phase(const DensityOperator& rho0, const UnitaryPath& path,
                   const PhaseOptions& opts = {});

/// -int_0^tau Tr[rho(t) H(t)] dt: closed form on constant-generator
/// segments, composite Simpson elsewhere. Throws NotCyclic.
double dynamical_phase(const DensityOperator& rho0, const UnitaryPath& path,
                       const PhaseOptions& opts = {});

/// Full report; a nodal point is flagged rather than thrown. Throws NotCyclic.
PhaseReport phase_report(const DensityOperator& rho0, const UnitaryPath& path,
                         const PhaseOptions& opts = {});

/// Same as phase_report but throws NodalPoint instead of flagging.
PhaseReport geometric_phase(const DensityOperator& rho0, const UnitaryPath& path,
                            const PhaseOptions& opts = {});

// Gauge phase phi(t) removed from U(t) before integrating the one-form, as a
// function of s = t / tau with phi(0) = 0 and phi(tau) = total phase.
enum class GaugePhaseInterpolation { Linear, Cubic, Smoothstep };

/// Line integral of beta = i Tr[rho0 U~^dag dU~] with U~ = e^{-i phi(t)} U(t),
/// evaluated numerically on the path grid.
double one_form_integral(const DensityOperator& rho0, const UnitaryPath& path,
                         GaugePhaseInterpolation interpolation = GaugePhaseInterpolation::Linear,
                         const PhaseOptions& opts = {});

/// Aharonov-Anandan phase of a pure state, computed on the state vector
/// psi(t) = U(t) psi0.
double aa_phase_pure(const ComplexVector& psi0, const UnitaryPath& path,
                     const PhaseOptions& opts = {});

/// sum_k w_k phi_g^k over the spectral decomposition of rho0. Requires
/// U(tau) to be a scalar multiple of the identity (NotGlobalCyclic otherwise).
double weighted_decomposition_phase(const DensityOperator& rho0, const UnitaryPath& path,
                                    const PhaseOptions& opts = {});

/// Tr[rho0 U(tau)] / |Tr[rho0 U(tau)]|. Throws NodalPoint.
Complex holonomy_factor(const DensityOperator& rho0, const UnitaryPath& path,
                        const PhaseOptions& opts = {});

/// min_k |a - b - 2 pi k|, in [0, pi].
double phase_distance(double a, double b);

/// x mod 2 pi in [0, 2 pi).
double wrap_two_pi(double x);

/// Tr[rho(t) H(t)] integrated over the path (so dynamical = -energy_integral).
double energy_integral(const ComplexMatrix& rho0, const UnitaryPath& path);

}  // namespace holonomy
