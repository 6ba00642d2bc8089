#ifndef PEAKSTAB_ERROR_HPP
#define PEAKSTAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace peakstab {

enum class ErrorCode {
  CycleDetected,
  UnknownLabel,
  DuplicateLabel,
  DimensionMismatch,
  NotConnected,
  NotTypeA,
  ShapeMismatch,
  InvariantViolated,
  KappaNotPositive,
  NotSemistable,
  NotSincere,
  InvalidAlien,
  NotSpSegment,
  BoundaryAngle,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message, std::string witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

private:
  ErrorCode code_;
  std::string witness_;
};

}  // namespace peakstab

#endif
