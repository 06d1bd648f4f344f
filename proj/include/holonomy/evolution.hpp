#pragma once

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include "holonomy/matcore.hpp"
#include "holonomy/states.hpp"

namespace holonomy {

// hbar = 1 throughout: every Hamiltonian is an angular frequency.

inline constexpr std::size_t kDefaultSamplesPerSegment = 256;
inline constexpr double kExactCyclicityTol = 1e-9;
inline constexpr double kSampledCyclicityTol = 1e-6;
inline constexpr double kGlobalCyclicTol = 1e-9;

struct ScheduleSegment {
  double duration = 0.0;
  ComplexMatrix h;
};

// H(t) on the uniform grid t_n = n tau / (size - 1).
struct SampledHamiltonian {
  double tau = 0.0;
  std::vector<ComplexMatrix> h;
};

class HamiltonianSchedule {
 public:
  /// Throws InvalidSchedule naming the offending segment.
  static HamiltonianSchedule piecewise(std::vector<ScheduleSegment> segments);
  static HamiltonianSchedule sampled(double tau, std::vector<ComplexMatrix> h);
  static HamiltonianSchedule sampled_from(const std::function<ComplexMatrix(double)>& h,
                                          double tau, std::size_t points);

  bool is_piecewise() const { return std::holds_alternative<Piecewise>(data_); }
  const std::vector<ScheduleSegment>& segments() const;
  const SampledHamiltonian& samples() const;

  double duration() const;
  std::size_t dim() const;

  /// H(t) with the left-segment value at piecewise boundaries and linear
  /// interpolation between samples.
  ComplexMatrix hamiltonian_at(double t) const;

 private:
  using Piecewise = std::vector<ScheduleSegment>;
  explicit HamiltonianSchedule(std::variant<Piecewise, SampledHamiltonian> d)
      : data_(std::move(d)) {}
  std::variant<Piecewise, SampledHamiltonian> data_;
};

// A contiguous run of grid points [first, last] sharing one generator
// description. Neighbouring segments share their boundary point; `h` holds
// the generator as seen from inside this segment at each of its points.
struct PathSegment {
  std::size_t first = 0;
  std::size_t last = 0;
  bool constant = false;  // h is the same matrix at every point
  std::vector<ComplexMatrix> h;

  std::size_t intervals() const { return last - first; }
};

enum class PathKind { Exact, Sampled };

// Time-ordered propagator sampled on a grid, carrying the generator so that
// dU/dt = -i H(t) U(t) is available without finite differences.
class UnitaryPath {
 public:
  UnitaryPath(std::vector<double> times, std::vector<ComplexMatrix> unitaries,
              std::vector<PathSegment> segments, PathKind kind);

  const std::vector<double>& times() const { return times_; }
  const std::vector<ComplexMatrix>& unitaries() const { return unitaries_; }
  const std::vector<PathSegment>& segments() const { return segments_; }
  PathKind kind() const { return kind_; }

  std::size_t size() const { return times_.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(unitaries_.front().rows()); }
  double duration() const { return times_.back(); }
  const ComplexMatrix& final_unitary() const { return unitaries_.back(); }

  /// Generator at grid point n; boundary points take the left segment.
  const ComplexMatrix& generator_at(std::size_t n) const;

  /// Default cyclicity tolerance for this path's construction.
  double cyclicity_tol() const {
    return kind_ == PathKind::Exact ? kExactCyclicityTol : kSampledCyclicityTol;
  }

 private:
  std::vector<double> times_;
  std::vector<ComplexMatrix> unitaries_;
  std::vector<PathSegment> segments_;
  PathKind kind_;
};

/// Piecewise-constant: exact exponentials, `samples_per_segment` grid
/// intervals per segment. Sampled: midpoint-exponential stepping on the
/// schedule's own grid, U_{n+1} = exp(-i (H_n + H_{n+1}) dt / 2) U_n.
UnitaryPath propagate(const HamiltonianSchedule& schedule,
                      std::size_t samples_per_segment = kDefaultSamplesPerSegment);

/// U(t) at an arbitrary time (exact for piecewise schedules).
ComplexMatrix unitary_at(const HamiltonianSchedule& schedule, double t);

/// -i H(t_n) U(t_n).
ComplexMatrix derivative_at(const UnitaryPath& path, std::size_t n);

/// || U(tau) rho0 U(tau)^dag - rho0 ||_F.
double cyclicity_residual(const UnitaryPath& path, const DensityOperator& rho0);

struct GlobalCyclicity {
  bool global = false;
  double phase = 0.0;     // arg U(tau)[0,0]; meaningful when global
  double residual = 0.0;  // || U(tau) - e^{i phase} I ||_F
};

GlobalCyclicity is_global_cyclic(const UnitaryPath& path, double tol = kGlobalCyclicTol);

/// e^{i delta(t)} U(t) with generator H(t) - delta'(t) I.
UnitaryPath rephase(const UnitaryPath& path, const std::function<double(double)>& delta,
                    const std::function<double(double)>& delta_dot);

/// arg z in (-pi, pi]. Points within 1e-14 |z| of the negative real axis
/// resolve to +pi.
double principal_arg(Complex z);

}  // namespace holonomy
