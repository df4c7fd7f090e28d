#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plumb {

enum class ErrorCode {
  // graph validation
  Disconnected,
  SelfLoop,
  DanglingEdge,
  DuplicateId,
  NegativeGenus,
  // weights and matrices
  InfiniteWeight,
  NotSymmetric,
  NotSquare,
  ZeroDenominator,
  // moves
  NoSuchEdge,
  NoSuchVertex,
  NotContractible,
  MultiEdgeCreated,
  NotElliptic,
  // chains and combs
  EmptyChain,
  IndexOutOfRange,
  NotAComb,
  PositiveGenusString,
  StringWeightTooSmall,
  GcdViolation,
  InvalidParameter,
  // decision engine
  NotATree,
  ValencyTooLow,
  HypothesisViolated,
  NotMinimal,
  // oracle
  UnknownGenerator,
  // files
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library. `vertices()` names the offending
/// vertex ids when the failure is about specific vertices.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::vector<int> vertices = {})
      : std::runtime_error(what), code_(code), vertices_(std::move(vertices)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& vertices() const noexcept { return vertices_; }

 private:
  ErrorCode code_;
  std::vector<int> vertices_;
};

}  // namespace plumb
