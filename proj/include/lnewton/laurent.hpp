#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lnewton {

struct Term {
  std::vector<int> exp;
  std::uint32_t coeff = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Laurent polynomial with coefficients in F_p. Terms are kept combined,
/// nonzero, and sorted by exponent vector in descending lexicographic order.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::uint32_t p, unsigned nvars,
              const std::vector<std::pair<std::vector<int>, long long>>& terms);
  static LaurentPoly univariate(std::uint32_t p, const std::vector<std::pair<int, long long>>& terms);

  std::uint32_t p() const { return p_; }
  unsigned nvars() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  std::uint32_t constant_term() const;
  LaurentPoly without_constant() const;
  LaurentPoly plus_constant(long long c) const;
  bool is_polynomial() const;
  /// Largest exponent; univariate only.
  int degree() const;
  /// n! times the volume of the convex hull of the origin and the exponents (n <= 2).
  long normalized_volume() const;
  /// f(x + b) for a univariate polynomial.
  LaurentPoly shift(long long b) const;
  /// Canonical text form, parseable by parse_poly.
  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::uint32_t p_ = 0;
  unsigned n_ = 0;
  std::vector<Term> terms_;
};

/// Convex hull vertices of a planar point set, counterclockwise, collinear points dropped.
std::vector<std::pair<long, long>> convex_hull(std::vector<std::pair<long, long>> pts);

}  // namespace lnewton
