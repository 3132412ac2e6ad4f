#pragma once

#include <stdexcept>
#include <string>

namespace semicross {

enum class ErrorKind {
  // semigroup tables
  NotAssociative,
  NoInverse,
  NonUniqueInverse,
  QuotientNotGroup,
  BoundExceeded,
  TooLarge,
  // block algebras and partial automorphisms
  ParentMismatch,
  OutsideDomain,
  DimensionMismatch,
  IllConditioned,
  // partial actions
  UnitIdealNotFull,
  ExtensionViolated,
  InverseMismatch,
  FormulaMismatch,
  IdentityViolated,
  // covariant representations
  NotPartialIsometry,
  CovarianceViolated,
  SpaceMismatch,
  CompositionViolated,
  HomomorphismViolated,
  TranslationViolated,
  CovrepMismatch,
  PairNotInS,
  // crossed products
  NotNondegenerate,
  NotStarHomomorphism,
  StructureMismatch,
  ActionIllDefined,
  SpanMismatch,
  DiagramViolated,
  // scenario I/O
  ParseError,
  UnresolvedReference,
  Precondition,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NonUniqueInverse: return "NonUniqueInverse";
    case ErrorKind::QuotientNotGroup: return "QuotientNotGroup";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::UnitIdealNotFull: return "UnitIdealNotFull";
    case ErrorKind::ExtensionViolated: return "ExtensionViolated";
    case ErrorKind::InverseMismatch: return "InverseMismatch";
    case ErrorKind::FormulaMismatch: return "FormulaMismatch";
    case ErrorKind::IdentityViolated: return "IdentityViolated";
    case ErrorKind::NotPartialIsometry: return "NotPartialIsometry";
    case ErrorKind::CovarianceViolated: return "CovarianceViolated";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::CompositionViolated: return "CompositionViolated";
    case ErrorKind::HomomorphismViolated: return "HomomorphismViolated";
    case ErrorKind::TranslationViolated: return "TranslationViolated";
    case ErrorKind::CovrepMismatch: return "CovrepMismatch";
    case ErrorKind::PairNotInS: return "PairNotInS";
    case ErrorKind::NotNondegenerate: return "NotNondegenerate";
    case ErrorKind::NotStarHomomorphism: return "NotStarHomomorphism";
    case ErrorKind::StructureMismatch: return "StructureMismatch";
    case ErrorKind::ActionIllDefined: return "ActionIllDefined";
    case ErrorKind::SpanMismatch: return "SpanMismatch";
    case ErrorKind::DiagramViolated: return "DiagramViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnresolvedReference: return "UnresolvedReference";
    case ErrorKind::Precondition: return "Precondition";
  }
  return "Unknown";
}

/// Library-wide exception; `kind` identifies the contract that was violated
/// and `what()` carries the counterexample description.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace semicross
