#pragma once

#include <stdexcept>
#include <string>

namespace crs {

enum class Errc {
  DivisionByZero,
  FieldMismatch,
  NotASquare,
  NonInvertibleConstantTerm,
  CharacteristicObstruction,
  ReconstructionFailed,
  NotAPerfectSquare,
  ModelUnsupported,
  NoRationalTwoTorsion,
  DerivativeNotSquare,
  FieldTooLarge,
  WrongOrder,
  IrrationalKernel,
  NotElkies,
  EigenvalueNotFound,
  NoRationalRoot,
  TorsionNotFound,
  PreconditionViolated,
  NonInvertibleModulus,
  SpecialJInvariant,
  DerivativeVanishes,
  UnsupportedLevel,
  ParseError,
  InvariantViolation,
  LinearSystemSingular,
  NoCurveFound,
  NotFound,
  RetriesExhausted,
  IOFailure,
  InternalError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace crs
