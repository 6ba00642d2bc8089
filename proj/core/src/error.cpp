#include "peakstab/error.hpp"

namespace peakstab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotTypeA: return "NotTypeA";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
    case ErrorCode::KappaNotPositive: return "KappaNotPositive";
    case ErrorCode::NotSemistable: return "NotSemistable";
    case ErrorCode::NotSincere: return "NotSincere";
    case ErrorCode::InvalidAlien: return "InvalidAlien";
    case ErrorCode::NotSpSegment: return "NotSpSegment";
    case ErrorCode::BoundaryAngle: return "BoundaryAngle";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace peakstab
