#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace holonomy {

// Base class for every failure raised by the library. The CLI maps the
// concrete type onto an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Short %g-style rendering of a number for error messages.
template <typename T>
std::string num(T x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

#define HOLONOMY_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

HOLONOMY_DEFINE_ERROR(NotHermitian);
HOLONOMY_DEFINE_ERROR(DimensionMismatch);
HOLONOMY_DEFINE_ERROR(InvalidDensity);
HOLONOMY_DEFINE_ERROR(InvalidPurity);
HOLONOMY_DEFINE_ERROR(InvalidAngle);
HOLONOMY_DEFINE_ERROR(NotQubit);
HOLONOMY_DEFINE_ERROR(InvalidSchedule);
HOLONOMY_DEFINE_ERROR(IndexOutOfRange);
HOLONOMY_DEFINE_ERROR(InvalidWeights);
HOLONOMY_DEFINE_ERROR(SingularParameter);
HOLONOMY_DEFINE_ERROR(ParseError);
// Phase-level failures: the evolution is not a cycle for the given state, or
// the total phase is undefined.
HOLONOMY_DEFINE_ERROR(NotCyclic);
HOLONOMY_DEFINE_ERROR(NotGlobalCyclic);
HOLONOMY_DEFINE_ERROR(NodalPoint);

#undef HOLONOMY_DEFINE_ERROR

}  // namespace holonomy
