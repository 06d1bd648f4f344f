#include "holonomy/composite.hpp"

#include <cmath>
#include <string>

#include "holonomy/errors.hpp"

namespace holonomy {

CompositeState CompositeState::make(std::size_t dim_a, std::size_t dim_b,
                                    DensityOperator rho_ab) {
  if (dim_a == 0 || dim_b == 0 || rho_ab.dim() != dim_a * dim_b) {
    throw DimensionMismatch("composite state of dimension " + num(rho_ab.dim()) +
                            " does not factor as " + num(dim_a) + " x " +
                            num(dim_b));
  }
  return CompositeState{dim_a, dim_b, std::move(rho_ab)};
}

DensityOperator CompositeState::reduced_b() const {
  return DensityOperator::from_matrix(partial_trace(rho_ab.matrix(), dim_a, dim_b, Subsystem::B));
}

UnitaryPath lift_unitary(const UnitaryPath& u_b, std::size_t dim_a) {
  if (dim_a == 0) throw DimensionMismatch("lift_unitary: dim_a must be >= 1");
  const auto na = static_cast<Eigen::Index>(dim_a);
  const ComplexMatrix id = ComplexMatrix::Identity(na, na);
  std::vector<ComplexMatrix> unitaries;
  unitaries.reserve(u_b.size());
  for (const auto& u : u_b.unitaries()) unitaries.push_back(kron(id, u));
  std::vector<PathSegment> segments = u_b.segments();
  for (auto& seg : segments) {
    for (auto& h : seg.h) h = kron(id, h);
  }
  return UnitaryPath(u_b.times(), std::move(unitaries), std::move(segments), u_b.kind());
}

TheoremCheck theorem_check(const CompositeState& state, const UnitaryPath& u_b,
                           const PhaseOptions& opts) {
  if (u_b.dim() != state.dim_b) {
    throw DimensionMismatch("path acts on dimension " + num(u_b.dim()) +
                            " but subsystem B has dimension " + num(state.dim_b));
  }
  const UnitaryPath lifted = lift_unitary(u_b, state.dim_a);
  TheoremCheck out;
  out.phi_ab = geometric_phase(state.rho_ab, lifted, opts);
  out.phi_b = geometric_phase(state.reduced_b(), u_b, opts);
  out.agreement = phase_distance(out.phi_ab.geometric, out.phi_b.geometric);
  return out;
}

CompositeState build_correlated(std::span<const double> weights,
                                std::span<const DensityOperator> states_b) {
  if (weights.empty() || weights.size() != states_b.size()) {
    throw InvalidWeights("need one weight per subsystem-B state (" +
                         num(weights.size()) + " weights, " +
                         num(states_b.size()) + " states)");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw InvalidWeights("weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kDensityTol) {
    throw InvalidWeights("weights sum to " + num(sum) + ", expected 1");
  }
  const std::size_t dim_b = states_b.front().dim();
  const auto na = static_cast<Eigen::Index>(weights.size());
  const auto nb = static_cast<Eigen::Index>(dim_b);
  ComplexMatrix m = ComplexMatrix::Zero(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    const auto& rho_i = states_b[static_cast<std::size_t>(i)];
    if (rho_i.dim() != dim_b) {
      throw DimensionMismatch("subsystem-B states have differing dimensions");
    }
    m.block(i * nb, i * nb, nb, nb) = weights[static_cast<std::size_t>(i)] * rho_i.matrix();
  }
  return CompositeState::make(weights.size(), dim_b, DensityOperator::from_matrix(m));
}

std::array<double, 3> pauli_coefficients_b(const CompositeState& state) {
  if (state.dim_b != 2) {
    throw NotQubit("Pauli coefficients need a qubit subsystem B, got dimension " +
                   num(state.dim_b));
  }
  const auto na = static_cast<Eigen::Index>(state.dim_a);
  const ComplexMatrix id = ComplexMatrix::Identity(na, na);
  const std::array<ComplexMatrix, 3> sigmas{pauli::x(), pauli::y(), pauli::z()};
  std::array<double, 3> out{};
  for (std::size_t j = 0; j < 3; ++j) {
    out[j] = (state.rho_ab.matrix() * kron(id, sigmas[j])).trace().real();
  }
  return out;
}

}  // namespace holonomy
