#include "holonomy/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "holonomy/errors.hpp"

namespace holonomy {

namespace {

void validate_generator(const ComplexMatrix& h, const std::string& where, Eigen::Index dim) {
  try {
    check_square(h, where.c_str());
    check_hermitian(h, kHermitianTol, where.c_str());
  } catch (const Error& e) {
    throw InvalidSchedule(e.what());
  }
  if (dim >= 0 && h.rows() != dim) {
    throw InvalidSchedule(where + " has dimension " + std::to_string(h.rows()) + ", expected " +
                          std::to_string(dim));
  }
}

}  // namespace

HamiltonianSchedule HamiltonianSchedule::piecewise(std::vector<ScheduleSegment> segments) {
  if (segments.empty()) throw InvalidSchedule("schedule has no segments");
  const Eigen::Index dim = segments.front().h.rows();
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const std::string where = "segment " + std::to_string(i);
    if (!(segments[i].duration > 0.0) || !std::isfinite(segments[i].duration)) {
      throw InvalidSchedule(where + " has non-positive duration");
    }
    validate_generator(segments[i].h, where + " h", dim);
  }
  return HamiltonianSchedule(std::move(segments));
}

HamiltonianSchedule HamiltonianSchedule::sampled(double tau, std::vector<ComplexMatrix> h) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw InvalidSchedule("sampled tau must be > 0");
  if (h.size() < 3) throw InvalidSchedule("sampled schedule needs at least 3 points");
  const Eigen::Index dim = h.front().rows();
  for (std::size_t i = 0; i < h.size(); ++i) {
    validate_generator(h[i], "sample " + std::to_string(i) + " h", dim);
  }
  return HamiltonianSchedule(SampledHamiltonian{tau, std::move(h)});
}

HamiltonianSchedule HamiltonianSchedule::sampled_from(
    const std::function<ComplexMatrix(double)>& h, double tau, std::size_t points) {
  std::vector<ComplexMatrix> samples;
  samples.reserve(points);
  for (std::size_t n = 0; n < points; ++n) {
    samples.push_back(h(tau * static_cast<double>(n) / static_cast<double>(points - 1)));
  }
  return sampled(tau, std::move(samples));
}

const std::vector<ScheduleSegment>& HamiltonianSchedule::segments() const {
  return std::get<Piecewise>(data_);
}

const SampledHamiltonian& HamiltonianSchedule::samples() const {
  return std::get<SampledHamiltonian>(data_);
}

double HamiltonianSchedule::duration() const {
  if (is_piecewise()) {
    double tau = 0.0;
    for (const auto& s : segments()) tau += s.duration;
    return tau;
  }
  return samples().tau;
}

std::size_t HamiltonianSchedule::dim() const {
  return static_cast<std::size_t>(is_piecewise() ? segments().front().h.rows()
                                                 : samples().h.front().rows());
}

ComplexMatrix HamiltonianSchedule::hamiltonian_at(double t) const {
  if (is_piecewise()) {
    double start = 0.0;
    for (const auto& s : segments()) {
      if (t <= start + s.duration) return s.h;
      start += s.duration;
    }
    return segments().back().h;
  }
  const auto& smp = samples();
  const double dt = smp.tau / static_cast<double>(smp.h.size() - 1);
  const double x = std::clamp(t / dt, 0.0, static_cast<double>(smp.h.size() - 1));
  const auto n = std::min(static_cast<std::size_t>(x), smp.h.size() - 2);
  const double frac = x - static_cast<double>(n);
  return (1.0 - frac) * smp.h[n] + frac * smp.h[n + 1];
}

UnitaryPath::UnitaryPath(std::vector<double> times, std::vector<ComplexMatrix> unitaries,
                         std::vector<PathSegment> segments, PathKind kind)
    : times_(std::move(times)),
      unitaries_(std::move(unitaries)),
      segments_(std::move(segments)),
      kind_(kind) {
  if (times_.size() < 2 || times_.size() != unitaries_.size()) {
    throw InvalidSchedule("unitary path needs matching times and unitaries (>= 2 points)");
  }
  if (segments_.empty() || segments_.front().first != 0 ||
      segments_.back().last != times_.size() - 1) {
    throw InvalidSchedule("unitary path segments must cover the grid");
  }
}

const ComplexMatrix& UnitaryPath::generator_at(std::size_t n) const {
  if (n >= size()) {
    throw IndexOutOfRange("grid index " + std::to_string(n) + " outside path of size " +
                          std::to_string(size()));
  }
  for (const auto& seg : segments_) {
    if (n >= seg.first && n <= seg.last) return seg.h[n - seg.first];
  }
  throw IndexOutOfRange("grid index " + std::to_string(n) + " not covered by any segment");
}

UnitaryPath propagate(const HamiltonianSchedule& schedule, std::size_t samples_per_segment) {
  const auto dim = static_cast<Eigen::Index>(schedule.dim());
  std::vector<double> times{0.0};
  std::vector<ComplexMatrix> unitaries{ComplexMatrix::Identity(dim, dim)};
  std::vector<PathSegment> segments;

  if (schedule.is_piecewise()) {
    if (samples_per_segment < 2) {
      throw InvalidSchedule("samples_per_segment must be >= 2");
    }
    double start = 0.0;
    for (const auto& s : schedule.segments()) {
      const HermitianExponential step(s.h);
      const ComplexMatrix u0 = unitaries.back();
      PathSegment seg;
      seg.first = times.size() - 1;
      seg.constant = true;
      seg.h.push_back(s.h);
      for (std::size_t k = 1; k <= samples_per_segment; ++k) {
        const double dt = s.duration * static_cast<double>(k) /
                          static_cast<double>(samples_per_segment);
        times.push_back(start + dt);
        unitaries.push_back(step(-dt) * u0);
        seg.h.push_back(s.h);
      }
      seg.last = times.size() - 1;
      start += s.duration;
      segments.push_back(std::move(seg));
    }
    return UnitaryPath(std::move(times), std::move(unitaries), std::move(segments),
                       PathKind::Exact);
  }

  const auto& smp = schedule.samples();
  const std::size_t intervals = smp.h.size() - 1;
  const double dt = smp.tau / static_cast<double>(intervals);
  PathSegment seg;
  seg.first = 0;
  seg.last = intervals;
  seg.h = smp.h;
  for (std::size_t n = 0; n < intervals; ++n) {
    const ComplexMatrix mid = 0.5 * (smp.h[n] + smp.h[n + 1]);
    unitaries.push_back(expm_hermitian_generator(mid, -dt) * unitaries.back());
    times.push_back(smp.tau * static_cast<double>(n + 1) / static_cast<double>(intervals));
  }
  segments.push_back(std::move(seg));
  return UnitaryPath(std::move(times), std::move(unitaries), std::move(segments),
                     PathKind::Sampled);
}

ComplexMatrix unitary_at(const HamiltonianSchedule& schedule, double t) {
  const auto dim = static_cast<Eigen::Index>(schedule.dim());
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  t = std::clamp(t, 0.0, schedule.duration());
  if (schedule.is_piecewise()) {
    double start = 0.0;
    for (const auto& s : schedule.segments()) {
      const double dt = std::min(s.duration, t - start);
      if (dt <= 0.0) break;
      u = expm_hermitian_generator(s.h, -dt) * u;
      start += s.duration;
    }
    return u;
  }
  const auto& smp = schedule.samples();
  const double dt = smp.tau / static_cast<double>(smp.h.size() - 1);
  double now = 0.0;
  for (std::size_t n = 0; n + 1 < smp.h.size(); ++n) {
    const double step = std::min(dt, t - now);
    if (step <= 0.0) break;
    const ComplexMatrix end = step < dt ? schedule.hamiltonian_at(now + step) : smp.h[n + 1];
    u = expm_hermitian_generator(0.5 * (smp.h[n] + end), -step) * u;
    now += dt;
  }
  return u;
}

ComplexMatrix derivative_at(const UnitaryPath& path, std::size_t n) {
  const ComplexMatrix& h = path.generator_at(n);
  return Complex(0.0, -1.0) * (h * path.unitaries()[n]);
}

double cyclicity_residual(const UnitaryPath& path, const DensityOperator& rho0) {
  if (rho0.dim() != path.dim()) {
    throw DimensionMismatch("state dimension " + std::to_string(rho0.dim()) +
                            " differs from path dimension " + std::to_string(path.dim()));
  }
  const ComplexMatrix& u = path.final_unitary();
  return (u * rho0.matrix() * u.adjoint() - rho0.matrix()).norm();
}

GlobalCyclicity is_global_cyclic(const UnitaryPath& path, double tol) {
  const ComplexMatrix& u = path.final_unitary();
  GlobalCyclicity out;
  out.phase = principal_arg(u(0, 0));
  const Complex c = std::polar(1.0, out.phase);
  out.residual = (u - c * ComplexMatrix::Identity(u.rows(), u.cols())).norm();
  out.global = out.residual <= tol;
  return out;
}

UnitaryPath rephase(const UnitaryPath& path, const std::function<double(double)>& delta,
                    const std::function<double(double)>& delta_dot) {
  std::vector<ComplexMatrix> unitaries;
  unitaries.reserve(path.size());
  for (std::size_t n = 0; n < path.size(); ++n) {
    unitaries.push_back(std::polar(1.0, delta(path.times()[n])) * path.unitaries()[n]);
  }
  std::vector<PathSegment> segments = path.segments();
  for (auto& seg : segments) {
    seg.constant = false;
    for (std::size_t k = 0; k < seg.h.size(); ++k) {
      const double d = delta_dot(path.times()[seg.first + k]);
      seg.h[k] -= d * ComplexMatrix::Identity(seg.h[k].rows(), seg.h[k].cols());
    }
  }
  return UnitaryPath(path.times(), std::move(unitaries), std::move(segments), path.kind());
}

double principal_arg(Complex z) {
  constexpr double kSnap = 1e-14;
  if (z.real() < 0.0 && std::abs(z.imag()) <= kSnap * std::abs(z)) return std::numbers::pi;
  return std::arg(z);
}

}  // namespace holonomy
