#include "holonomy/phases.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "holonomy/errors.hpp"
#include "holonomy/quadrature.hpp"

namespace holonomy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double segment_step(const UnitaryPath& path, const PathSegment& seg) {
  return (path.times()[seg.last] - path.times()[seg.first]) /
         static_cast<double>(seg.intervals());
}

double expectation(const ComplexMatrix& rho0, const ComplexMatrix& u, const ComplexMatrix& h) {
  // Tr[U rho0 U^dag H] = Tr[rho0 U^dag H U]
  return (rho0 * u.adjoint() * h * u).trace().real();
}

Complex final_overlap(const DensityOperator& rho0, const UnitaryPath& path) {
  return (rho0.matrix() * path.final_unitary()).trace();
}

struct GaugeProfile {
  double value;       // phi(s) / phi(1)
  double derivative;  // d/ds of the above
};

GaugeProfile gauge_profile(GaugePhaseInterpolation kind, double s) {
  switch (kind) {
    case GaugePhaseInterpolation::Linear:
      return {s, 1.0};
    case GaugePhaseInterpolation::Cubic:
      return {s * s * s, 3.0 * s * s};
    case GaugePhaseInterpolation::Smoothstep:
      return {s * s * (3.0 - 2.0 * s), 6.0 * s * (1.0 - s)};
  }
  return {s, 1.0};
}

}  // namespace

double phase_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

double wrap_two_pi(double x) {
  double w = std::fmod(x, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double require_cyclic(const DensityOperator& rho0, const UnitaryPath& path,
                      const PhaseOptions& opts) {
  const double residual = cyclicity_residual(path, rho0);
  const double tol = opts.cyclicity_tol.value_or(path.cyclicity_tol());
  if (!(residual <= tol)) {
    throw NotCyclic("evolution is not cyclic for this state: ||U rho U^dag - rho|| = " +
                    num(residual) + " exceeds tolerance " + num(tol));
  }
  return residual;
}

double energy_integral(const ComplexMatrix& rho0, const UnitaryPath& path) {
  double acc = 0.0;
  std::vector<double> f;
  for (const auto& seg : path.segments()) {
    const double duration = path.times()[seg.last] - path.times()[seg.first];
    if (seg.constant) {
      // rho(t) evolves under this same generator, so the integrand is flat.
      acc += duration * expectation(rho0, path.unitaries()[seg.first], seg.h.front());
      continue;
    }
    f.assign(seg.h.size(), 0.0);
    for (std::size_t k = 0; k < seg.h.size(); ++k) {
      f[k] = expectation(rho0, path.unitaries()[seg.first + k], seg.h[k]);
    }
    acc += composite_simpson(f, segment_step(path, seg));
  }
  return acc;
}

double total_phase(const DensityOperator& rho0, const UnitaryPath& path, const PhaseOptions& opts) {
  require_cyclic(rho0, path, opts);
  const Complex tr = final_overlap(rho0, path);
  if (std::abs(tr) < opts.nodal_tol) {
    throw NodalPoint("total phase undefined: |Tr[rho0 U(tau)]| = " +
                     num(std::abs(tr)));
  }
  return principal_arg(tr);
}

double dynamical_phase(const DensityOperator& rho0, const UnitaryPath& path,
                       const PhaseOptions& opts) {
  require_cyclic(rho0, path, opts);
  return -energy_integral(rho0.matrix(), path);
}

PhaseReport phase_report(const DensityOperator& rho0, const UnitaryPath& path,
                         const PhaseOptions& opts) {
  PhaseReport rep;
  rep.cyclicity_residual = require_cyclic(rho0, path, opts);
  const Complex tr = final_overlap(rho0, path);
  rep.trace_magnitude = std::abs(tr);
  rep.dynamical = -energy_integral(rho0.matrix(), path);
  rep.nodal = rep.trace_magnitude < opts.nodal_tol;
  if (rep.nodal) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    rep.total = rep.geometric = rep.geometric_mod = nan;
    return rep;
  }
  rep.total = principal_arg(tr);
  rep.geometric = rep.total - rep.dynamical;
  rep.geometric_mod = wrap_two_pi(rep.geometric);
  return rep;
}

PhaseReport geometric_phase(const DensityOperator& rho0, const UnitaryPath& path,
                            const PhaseOptions& opts) {
  PhaseReport rep = phase_report(rho0, path, opts);
  if (rep.nodal) {
    throw NodalPoint("geometric phase undefined: |Tr[rho0 U(tau)]| = " +
                     num(rep.trace_magnitude));
  }
  return rep;
}

double one_form_integral(const DensityOperator& rho0, const UnitaryPath& path,
                         GaugePhaseInterpolation interpolation, const PhaseOptions& opts) {
  const double phi_tau = total_phase(rho0, path, opts);
  const double tau = path.duration();
  const Complex i(0.0, 1.0);
  const ComplexMatrix& rho = rho0.matrix();

  double acc = 0.0;
  std::vector<double> beta;
  for (const auto& seg : path.segments()) {
    beta.assign(seg.h.size(), 0.0);
    for (std::size_t k = 0; k < seg.h.size(); ++k) {
      const std::size_t n = seg.first + k;
      const double t = path.times()[n];
      const GaugeProfile g = gauge_profile(interpolation, t / tau);
      const double phi = phi_tau * g.value;
      const double phi_dot = phi_tau * g.derivative / tau;
      const ComplexMatrix& u = path.unitaries()[n];
      const ComplexMatrix u_dot = -i * (seg.h[k] * u);
      const Complex gauge = std::polar(1.0, -phi);
      const ComplexMatrix ut = gauge * u;
      const ComplexMatrix ut_dot = gauge * (u_dot - i * phi_dot * u);
      beta[k] = (i * (rho * ut.adjoint() * ut_dot).trace()).real();
    }
    acc += composite_simpson(beta, segment_step(path, seg));
  }
  return acc;
}

double aa_phase_pure(const ComplexVector& psi0, const UnitaryPath& path,
                     const PhaseOptions& opts) {
  const DensityOperator proj = DensityOperator::pure(psi0);
  require_cyclic(proj, path, opts);

  const Complex overlap = psi0.dot(path.final_unitary() * psi0);
  if (std::abs(overlap) < opts.nodal_tol) {
    throw NodalPoint("pure-state overlap vanishes");
  }

  double energy = 0.0;
  std::vector<double> f;
  for (const auto& seg : path.segments()) {
    f.assign(seg.h.size(), 0.0);
    for (std::size_t k = 0; k < seg.h.size(); ++k) {
      const ComplexVector psi = path.unitaries()[seg.first + k] * psi0;
      f[k] = psi.dot(seg.h[k] * psi).real();
    }
    if (seg.constant) {
      energy += f.front() * (path.times()[seg.last] - path.times()[seg.first]);
    } else {
      energy += composite_simpson(f, segment_step(path, seg));
    }
  }
  return principal_arg(overlap) + energy;
}

double weighted_decomposition_phase(const DensityOperator& rho0, const UnitaryPath& path,
                                    const PhaseOptions& opts) {
  const GlobalCyclicity gc = is_global_cyclic(path);
  if (!gc.global) {
    throw NotGlobalCyclic("U(tau) is not a multiple of the identity (residual " +
                          num(gc.residual) + ")");
  }
  const SpectralDecomposition spec = spectral_decompose(rho0);
  double acc = 0.0;
  for (std::size_t k = 0; k < spec.weights.size(); ++k) {
    if (spec.weights[k] == 0.0) continue;
    const ComplexVector& v = spec.basis[k];
    const double pure = aa_phase_pure(v, path, opts);
    // Every eigenvector sees the same global phase; align the branch of
    // each term's total phase with it.
    const double own_total = principal_arg(v.dot(path.final_unitary() * v));
    const double shift = kTwoPi * std::round((own_total - gc.phase) / kTwoPi);
    acc += spec.weights[k] * (pure - shift);
  }
  return acc;
}

Complex holonomy_factor(const DensityOperator& rho0, const UnitaryPath& path,
                        const PhaseOptions& opts) {
  const Complex tr = final_overlap(rho0, path);
  if (std::abs(tr) < opts.nodal_tol) {
    throw NodalPoint("holonomy factor undefined: |Tr[rho0 U(tau)]| = " +
                     num(std::abs(tr)));
  }
  return std::polar(1.0, principal_arg(tr));
}

}  // namespace holonomy
