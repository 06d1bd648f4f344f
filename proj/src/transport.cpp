#include "holonomy/transport.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "holonomy/errors.hpp"
#include "holonomy/quadrature.hpp"

namespace holonomy {

namespace {

double energy_at(const ComplexMatrix& rho0, const ComplexMatrix& u, const ComplexMatrix& h) {
  return (rho0 * u.adjoint() * h * u).trace().real();
}

}  // namespace

double parallel_residual(const DensityOperator& rho0, const UnitaryPath& path) {
  if (rho0.dim() != path.dim()) {
    throw DimensionMismatch("parallel_residual: state and path dimensions differ");
  }
  const Complex i(0.0, 1.0);
  double worst = 0.0;
  for (const auto& seg : path.segments()) {
    for (std::size_t k = 0; k < seg.h.size(); ++k) {
      const ComplexMatrix& u = path.unitaries()[seg.first + k];
      const ComplexMatrix u_dot = -i * (seg.h[k] * u);
      worst = std::max(worst, std::abs((rho0.matrix() * u.adjoint() * u_dot).trace()));
    }
  }
  return worst;
}

TransportedPath parallel_lift(const DensityOperator& rho0, const UnitaryPath& path,
                              const PhaseOptions& opts) {
  require_cyclic(rho0, path, opts);
  const ComplexMatrix& rho = rho0.matrix();
  const auto& times = path.times();

  std::vector<double> xi(path.size(), 0.0);
  std::vector<PathSegment> segments = path.segments();
  std::vector<double> rate;
  for (auto& seg : segments) {
    rate.assign(seg.h.size(), 0.0);
    for (std::size_t k = 0; k < seg.h.size(); ++k) {
      rate[k] = energy_at(rho, path.unitaries()[seg.first + k], seg.h[k]);
    }
    const double base = xi[seg.first];
    if (seg.constant) {
      // Constant generator: Tr[rho(t) H] does not change along the segment.
      std::fill(rate.begin(), rate.end(), rate.front());
      for (std::size_t k = 1; k < seg.h.size(); ++k) {
        xi[seg.first + k] = base + rate.front() * (times[seg.first + k] - times[seg.first]);
      }
    } else {
      const double step =
          (times[seg.last] - times[seg.first]) / static_cast<double>(seg.intervals());
      const std::vector<double> running = cumulative_simpson(rate, step);
      for (std::size_t k = 1; k < seg.h.size(); ++k) xi[seg.first + k] = base + running[k];
    }
    for (std::size_t k = 0; k < seg.h.size(); ++k) {
      seg.h[k] -= rate[k] * ComplexMatrix::Identity(seg.h[k].rows(), seg.h[k].cols());
    }
  }

  std::vector<ComplexMatrix> lifted;
  lifted.reserve(path.size());
  for (std::size_t n = 0; n < path.size(); ++n) {
    lifted.push_back(std::polar(1.0, xi[n]) * path.unitaries()[n]);
  }
  UnitaryPath lifted_path(times, std::move(lifted), std::move(segments), path.kind());
  return TransportedPath{path, std::move(xi), std::move(lifted_path)};
}

double sjoqvist_phase(const DensityOperator& rho0, const TransportedPath& lifted,
                      const PhaseOptions& opts) {
  const Complex tr = (rho0.matrix() * lifted.lifted.final_unitary()).trace();
  if (std::abs(tr) < opts.nodal_tol) {
    throw NodalPoint("|Tr[rho0 U'(tau)]| = " + num(std::abs(tr)) +
                     " below nodal tolerance");
  }
  return principal_arg(tr);
}

CounterexampleResult counterexample_lift(double r, double theta, double omega,
                                         std::size_t samples) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw InvalidPurity("counterexample needs 0 < r <= 1, got " + num(r));
  }
  if (!(omega > 0.0)) throw InvalidSchedule("omega must be positive");
  const double c = std::cos(theta);
  if (std::abs(std::cos(std::numbers::pi * c)) < 1e-9) {
    throw SingularParameter("cos(pi cos theta) vanishes; closed form is degenerate");
  }
  if (samples < 2) throw InvalidSchedule("samples must be >= 2");

  const ComplexMatrix sz = pauli::z();
  const ComplexMatrix n_sigma = std::sin(theta) * pauli::x() + c * pauli::z();
  const HermitianExponential field(sz);
  const HermitianExponential tilt(n_sigma);
  const Complex i(0.0, 1.0);

  const DensityOperator rho0 = qubit_state(r, theta, 0.0);
  const ComplexMatrix id = pauli::identity();
  const std::array<ComplexMatrix, 2> projectors{0.5 * (id + n_sigma), 0.5 * (id - n_sigma)};

  const double tau = std::numbers::pi / omega;
  CounterexampleResult out;
  ComplexMatrix u_final;
  for (std::size_t k = 0; k <= samples; ++k) {
    const double t = tau * static_cast<double>(k) / static_cast<double>(samples);
    const ComplexMatrix a = field(omega * t);
    const ComplexMatrix b = tilt(-omega * t * c);
    const ComplexMatrix u = a * b;
    // Product rule on both factors.
    const ComplexMatrix u_dot = i * omega * (sz * u) + u * (-i * omega * c * n_sigma);
    for (std::size_t p = 0; p < 2; ++p) {
      const double res = std::abs((projectors[p] * u.adjoint() * u_dot).trace());
      out.residuals[p] = std::max(out.residuals[p], res);
    }
    if (k == samples) u_final = u;
  }
  out.phase = principal_arg((rho0.matrix() * u_final).trace());

  const HamiltonianSchedule schedule =
      HamiltonianSchedule::piecewise({ScheduleSegment{tau, -omega * sz}});
  out.geometric = geometric_phase(rho0, propagate(schedule, samples)).geometric;
  return out;
}

}  // namespace holonomy
