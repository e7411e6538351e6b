#include "bundleforge/error.hpp"

namespace bundleforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::FiberSizeMismatch: return "FiberSizeMismatch";
    case ErrorCode::NoLifting: return "NoLifting";
    case ErrorCode::InvalidVoltage: return "InvalidVoltage";
    case ErrorCode::FiberNotIsomorphic: return "FiberNotIsomorphic";
    case ErrorCode::NotACovering: return "NotACovering";
    case ErrorCode::TransitionNotIso: return "TransitionNotIso";
    case ErrorCode::LocalTrivialityFails: return "LocalTrivialityFails";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::FiberMismatch: return "FiberMismatch";
    case ErrorCode::CompositesDisagree: return "CompositesDisagree";
    case ErrorCode::CompositeCollapses: return "CompositeCollapses";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::InvalidGeneratorSystem: return "InvalidGeneratorSystem";
    case ErrorCode::NoTransversalSection: return "NoTransversalSection";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace bundleforge
