#pragma once

#include <stdexcept>
#include <string>

namespace lnewton {

enum class Errc {
  InvalidPrime,
  InvalidArgument,
  InvalidSubfield,
  SizeExceeded,
  ZeroArgument,
  Unsupported,
  PrimeMismatch,
  NotIntegral,
  PrecisionExhausted,
  InvalidConstantTerm,
  NotInvertible,
  NotDivisible,
  DegreeAnomaly,
  EmptyInput,
  NotDiagonal,
  InsufficientTruncation,
  NotClosed,
  ImpossibleTerm,
  RegimeError,
  IdentityViolation,
  SyntaxError,
  UnknownSuite,
  InternalError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace lnewton
