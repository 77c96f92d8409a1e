#include "lgp/error.hpp"

namespace lgp {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::BadIdentity: return "BadIdentity";
    case ErrorCode::BadInverse: return "BadInverse";
    case ErrorCode::BadTable: return "BadTable";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::FieldNotContained: return "FieldNotContained";
    case ErrorCode::FieldNotAbove: return "FieldNotAbove";
    case ErrorCode::LatticeCycle: return "LatticeCycle";
    case ErrorCode::UnknownField: return "UnknownField";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::NotARefinement: return "NotARefinement";
    case ErrorCode::MissingMap: return "MissingMap";
    case ErrorCode::NotFunctorial: return "NotFunctorial";
    case ErrorCode::BadCochain: return "BadCochain";
    case ErrorCode::InvalidModule: return "InvalidModule";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::StateBoundExceeded: return "StateBoundExceeded";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::DegenerateExtension: return "DegenerateExtension";
    case ErrorCode::Mismatch: return "Mismatch";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotConnected:
    case ErrorCode::StateBoundExceeded:
    case ErrorCode::HypothesisViolated:
    case ErrorCode::DegenerateExtension:
    case ErrorCode::Mismatch:
    case ErrorCode::Ok:
      return false;
    default:
      return true;
  }
}

void Status::check() const {
  if (!is_ok()) throw Error(code, witness);
}

}  // namespace lgp
