#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lgp {

enum class ErrorCode {
  Ok = 0,
  // malformed or invariant-violating input
  ParseError,
  InvalidArgument,
  NotAssociative,
  BadIdentity,
  BadInverse,
  BadTable,
  NotHomomorphism,
  NotBipartite,
  FieldNotContained,
  FieldNotAbove,
  LatticeCycle,
  UnknownField,
  UnknownVertex,
  DuplicateId,
  InvalidAction,
  NotARefinement,
  MissingMap,
  NotFunctorial,
  BadCochain,
  InvalidModule,
  UnknownExample,
  // failures of a well-formed computation
  NotConnected,
  StateBoundExceeded,
  HypothesisViolated,
  DegenerateExtension,
  Mismatch,
};

std::string_view error_name(ErrorCode code) noexcept;

// True for codes caused by the caller's input rather than by the computation.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Result of a validation routine: either ok or an error code with a witness.
struct Status {
  ErrorCode code = ErrorCode::Ok;
  std::string witness;

  static Status ok() { return {}; }
  static Status fail(ErrorCode c, std::string w) { return {c, std::move(w)}; }

  bool is_ok() const noexcept { return code == ErrorCode::Ok; }
  explicit operator bool() const noexcept { return is_ok(); }

  // Throws Error if not ok.
  void check() const;
};

}  // namespace lgp
