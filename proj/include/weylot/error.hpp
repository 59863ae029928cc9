#pragma once

#include <stdexcept>
#include <string>

namespace weylot {

enum class ErrorCode {
  NotFullDimensional,
  OriginNotInterior,
  VertexNotFound,
  UnsupportedType,
  OrbitCapExceeded,
  GroupCapExceeded,
  NotDominant,
  NotLatticePoint,
  OutOfTableRange,
  InternalTableViolation,
  NotReflexive,
  UnbalancedMasses,
  CombinatorialBudgetExceeded,
  MalformedHeader,
  NonIntegerEntry,
  InvalidArgument,
  ArithmeticOverflow,
  InternalError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::VertexNotFound: return "VertexNotFound";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::OrbitCapExceeded: return "OrbitCapExceeded";
    case ErrorCode::GroupCapExceeded: return "GroupCapExceeded";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NotLatticePoint: return "NotLatticePoint";
    case ErrorCode::OutOfTableRange: return "OutOfTableRange";
    case ErrorCode::InternalTableViolation: return "InternalTableViolation";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::UnbalancedMasses: return "UnbalancedMasses";
    case ErrorCode::CombinatorialBudgetExceeded: return "CombinatorialBudgetExceeded";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::NonIntegerEntry: return "NonIntegerEntry";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Resource caps (orbit, group, cycle budget) as opposed to bad input.
  bool is_resource_cap() const noexcept {
    return code_ == ErrorCode::OrbitCapExceeded || code_ == ErrorCode::GroupCapExceeded ||
           code_ == ErrorCode::CombinatorialBudgetExceeded;
  }

 private:
  ErrorCode code_;
};

}  // namespace weylot
