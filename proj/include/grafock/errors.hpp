#pragma once

#include <stdexcept>
#include <string>

namespace grafock {

// Base for all library errors. `code()` is the stable machine-readable name
// the CLI prints when mapping a failure to an exit status.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define GRAFOCK_DEFINE_ERROR(Name)                                     \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(#Name, what) {}     \
  };

GRAFOCK_DEFINE_ERROR(NotInvertible)
GRAFOCK_DEFINE_ERROR(DimensionTooLarge)
GRAFOCK_DEFINE_ERROR(BoundDiverges)
GRAFOCK_DEFINE_ERROR(InvalidOrder)
GRAFOCK_DEFINE_ERROR(ConvergencePreconditionFailed)
GRAFOCK_DEFINE_ERROR(CapExceeded)
GRAFOCK_DEFINE_ERROR(QuadratureUnderResolved)
GRAFOCK_DEFINE_ERROR(GridExceeded)
GRAFOCK_DEFINE_ERROR(TruncationOverflow)
GRAFOCK_DEFINE_ERROR(IntegralDiverges)
GRAFOCK_DEFINE_ERROR(NonFinite)
GRAFOCK_DEFINE_ERROR(ParseError)

#undef GRAFOCK_DEFINE_ERROR

}  // namespace grafock
