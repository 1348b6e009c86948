#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vflame {

enum class ErrorCode {
  kDuplicateVertex,
  kDuplicateEdge,
  kLoopEdge,
  kRootHasInEdge,
  kUnknownEndpoint,
  kUnknownVertex,
  kEdgeNotIngoing,
  kRootInSet,
  kNotAPath,
  kModeViolation,
  kTrivialPathInEdgeView,
  kNotAnEMSeparation,
  kPreconditionViolated,
  kChainConditionViolated,
  kNotDisjoint,
  kNotXYPaths,
  kNotInG,
  kNotSpanning,
  kNotLarge,
  kNotAFlame,
  kLedgerNotInG,
  kTooLarge,
  kHypothesisViolated,
  kParseError,
  kInternal,
};

std::string_view to_string(ErrorCode code);

// Every recoverable failure of the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace vflame
