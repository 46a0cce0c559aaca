#include "lnewton/error.hpp"
#include "lnewton/rational.hpp"

namespace lnewton {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidPrime: return "InvalidPrime";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidSubfield: return "InvalidSubfield";
    case Errc::SizeExceeded: return "SizeExceeded";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::Unsupported: return "Unsupported";
    case Errc::PrimeMismatch: return "PrimeMismatch";
    case Errc::NotIntegral: return "NotIntegral";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::InvalidConstantTerm: return "InvalidConstantTerm";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::DegreeAnomaly: return "DegreeAnomaly";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NotDiagonal: return "NotDiagonal";
    case Errc::InsufficientTruncation: return "InsufficientTruncation";
    case Errc::NotClosed: return "NotClosed";
    case Errc::ImpossibleTerm: return "ImpossibleTerm";
    case Errc::RegimeError: return "RegimeError";
    case Errc::IdentityViolation: return "IdentityViolation";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::InternalError: return "InternalError";
  }
  return "Unknown";
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) fail(Errc::SyntaxError, "not a rational: " + text);
  if (r.get_den() == 0) fail(Errc::ZeroArgument, "zero denominator: " + text);
  r.canonicalize();
  return r;
}

long padic_val(const Integer& x, std::uint64_t p) {
  require(x != 0, Errc::ZeroArgument, "valuation of zero");
  Integer t = abs(x);
  long v = 0;
  Integer P(static_cast<unsigned long>(p));
  while (mpz_divisible_p(t.get_mpz_t(), P.get_mpz_t())) {
    t /= P;
    ++v;
  }
  return v;
}

long padic_val(const Rational& x, std::uint64_t p) {
  require(x != 0, Errc::ZeroArgument, "valuation of zero");
  long v = padic_val(Integer(x.get_num()), p);
  return v - padic_val(Integer(x.get_den()), p);
}

std::uint64_t mod_reduce(const Integer& x, std::uint64_t m) {
  Integer M(static_cast<unsigned long>(m));
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
  return r.get_ui();
}

std::uint64_t mod_reduce(const Rational& x, std::uint64_t m) {
  Integer M(static_cast<unsigned long>(m));
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), M.get_mpz_t()) == 0 && m != 1)
    fail(Errc::NotInvertible, "denominator " + x.get_den().get_str() + " not invertible mod " +
                                  std::to_string(m));
  Integer num = x.get_num();
  return mod_reduce(Integer(num * inv), m);
}

}  // namespace lnewton
