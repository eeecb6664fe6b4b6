#pragma once

#include <stdexcept>
#include <string>

namespace axial {

enum class ErrorCode {
  Parse,
  DivisionByZero,
  FieldMismatch,
  InvalidField,
  DimensionMismatch,
  AsymmetricStructure,
  AlgebraMismatch,
  NotIdempotent,
  BadLambda,
  NotAnAxis,
  IncompleteDecomposition,
  SingularVandermonde,
  OrbitOverflow,
  Inconsistent,
  MissingForm,
  UnboundVariable,
  FreshCollision,
  UnknownName,
  FieldTooSmall,
  UnsupportedShape,
  InvalidTripleSystem,
  SelfCheckFailed,
  NotAxes,
  Schema,
  Io,
  InvalidArgument,
};

const char* errorCodeName(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace axial
