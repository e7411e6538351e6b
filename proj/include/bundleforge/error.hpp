#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bundleforge {

enum class ErrorCode {
  DuplicateVertex,
  LoopEdge,
  UnknownEndpoint,
  UnknownVertex,
  NotAMorphism,
  NotSurjective,
  SearchBudgetExceeded,
  EnumerationBoundExceeded,
  ShapeMismatch,
  NotABijection,
  NotSymmetric,
  NoConvergence,
  FiberSizeMismatch,
  NoLifting,
  InvalidVoltage,
  FiberNotIsomorphic,
  NotACovering,
  TransitionNotIso,
  LocalTrivialityFails,
  BaseMismatch,
  FiberMismatch,
  CompositesDisagree,
  CompositeCollapses,
  NotAGroup,
  NotAHomomorphism,
  InvalidGeneratorSystem,
  NoTransversalSection,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; the code identifies the failure and
// the message names the witness (vertex, edge, element pair...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bundleforge
