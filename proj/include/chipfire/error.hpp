#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chipfire {

enum class ErrorKind {
  // malformed or inconsistent input
  InvalidInput,
  LoopEdge,
  DisconnectedGraph,
  DivisibilityViolation,
  NonPositiveWeight,
  UnknownVertex,
  DimensionMismatch,
  NotAutomorphism,
  HalfEdgeToInvolution,
  VertexToNeighbor,
  // computation limits
  IterationCapExceeded,
  GroupOrderCapExceeded,
  Overflow,
  // algorithm preconditions
  NotQEffective,
  NotQReduced,
  ChargeAtQNotOne,
  InvalidWord,
};

enum class ErrorCategory { Validation, Computation, Precondition };

constexpr ErrorCategory category_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IterationCapExceeded:
    case ErrorKind::GroupOrderCapExceeded:
    case ErrorKind::Overflow:
      return ErrorCategory::Computation;
    case ErrorKind::NotQEffective:
    case ErrorKind::NotQReduced:
    case ErrorKind::ChargeAtQNotOne:
    case ErrorKind::InvalidWord:
      return ErrorCategory::Precondition;
    default:
      return ErrorCategory::Validation;
  }
}

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  ErrorCategory category() const noexcept { return category_of(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace chipfire
