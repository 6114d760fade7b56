#ifndef HYPERALPHA_ERROR_HPP
#define HYPERALPHA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperalpha {

enum class ErrorCode {
  // input validation
  EdgeOutOfRange,
  DuplicateEdge,
  EdgeTooSmall,
  DuplicateVertexInEdge,
  SyntaxError,
  InvalidArgument,
  InfeasibleModel,
  // tensor forms
  InvalidOrder,
  EdgeLargerThanOrder,
  DimensionMismatch,
  NegativeEntry,
  // preconditions of derived quantities
  NoEdges,
  Disconnected,
  TooFewEdges,
  NotUniform,
  ConstantVector,
  NonPositiveEntry,
  // size guards
  InstanceTooLarge,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EdgeOutOfRange: return "EdgeOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EdgeTooSmall: return "EdgeTooSmall";
    case ErrorCode::DuplicateVertexInEdge: return "DuplicateVertexInEdge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InfeasibleModel: return "InfeasibleModel";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::EdgeLargerThanOrder: return "EdgeLargerThanOrder";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooFewEdges: return "TooFewEdges";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::ConstantVector: return "ConstantVector";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Size guards are distinguished from validation failures.
  bool is_guard() const noexcept { return code_ == ErrorCode::InstanceTooLarge; }

 private:
  ErrorCode code_;
};

}  // namespace hyperalpha

#endif  // HYPERALPHA_ERROR_HPP
