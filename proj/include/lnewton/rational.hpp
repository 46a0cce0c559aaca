#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lnewton {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "num/den" with den omitted when it is 1.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Always "num/den".
inline std::string to_fraction(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text);

inline Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

/// p-adic valuation of a nonzero integer.
long padic_val(const Integer& x, std::uint64_t p);

/// p-adic valuation of a nonzero rational.
long padic_val(const Rational& x, std::uint64_t p);

/// x mod m for a rational whose denominator is prime to m. Result in [0, m).
std::uint64_t mod_reduce(const Rational& x, std::uint64_t m);

std::uint64_t mod_reduce(const Integer& x, std::uint64_t m);

}  // namespace lnewton
