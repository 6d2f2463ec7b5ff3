#pragma once

#include <stdexcept>
#include <string>

namespace toricmin {

// Every mathematical failure the library reports carries one of these codes.
// The CLI maps them to exit status 2.
enum class ErrorCode {
  EmptyRegion,
  UnboundedRegion,
  UnsupportedDimension,
  BoundaryAmbiguous,
  NonSmoothCone,
  NonPrimitiveRay,
  IncompleteFan,
  NotProjective,
  PLInconsistent,
  NotCartier,
  NotBig,
  ArityMismatch,
  PointOutsideChart,
  NotInTorus,
  UnknownPoint,
  ZeroFunction,
  UnknownCone,
  InvalidInput,
  NefViolation,
  NoSections,
};

const char *error_name(ErrorCode code);

class MathError : public std::runtime_error {
 public:
  MathError(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) {
  throw MathError(code, what);
}

}  // namespace toricmin
