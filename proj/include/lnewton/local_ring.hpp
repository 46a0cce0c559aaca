#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lnewton/cyclotomic.hpp"
#include "lnewton/ffield.hpp"

namespace lnewton {

/// Z_q[pi] / (pi^{p-1} + p) with Z_q = (Z / p^N)[x] / (F), where F is the lifted
/// modulus of the residue field F_q, q = p^A. Elements are coefficient vectors
/// indexed [i * A + j] for pi^i x^j, i < p - 1, j < A. All ring operations are
/// exact modulo p^N, i.e. modulo pi^{N (p-1)}.
class LocalRing {
 public:
  using Elem = std::vector<std::uint64_t>;

  LocalRing(std::uint32_t p, unsigned A, long precision);

  std::uint32_t p() const { return p_; }
  unsigned unramified_degree() const { return A_; }
  /// Guaranteed pi-adic precision, N (p - 1).
  long precision() const { return static_cast<long>(N_) * (p_ - 1); }
  std::uint64_t modulus() const { return P_; }
  const FieldCtx& residue_field() const { return F_; }

  Elem zero() const { return Elem(R_ * A_, 0); }
  Elem one() const { return from_int(1); }
  Elem from_int(long long v) const;
  Elem from_integer(const Integer& v) const;
  /// Denominator must be prime to p.
  Elem from_rational(const Rational& v) const;
  Elem pi_power(long s) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, std::uint64_t e) const;
  /// Inverse of a unit.
  Elem inv(const Elem& a) const;

  bool is_zero(const Elem& a) const;
  /// ord_pi, or nullopt when a vanishes to the working precision.
  std::optional<long> valuation(const Elem& a) const;
  bool equal_mod(const Elem& a, const Elem& b, long M) const;
  /// Residue of a / pi^s in F_q; requires ord_pi(a) >= s.
  FqElem unit_residue(const Elem& a, long s) const;

  Elem teichmuller(FqElem r) const;
  /// The primitive p-th root of unity congruent to 1 + pi modulo pi^2.
  const Elem& zeta() const { return zeta_; }
  Elem embed(const CycNum& c) const;

  /// True when only the x^0 unramified coordinates are nonzero, i.e. a lies in Z_p[pi].
  bool in_base(const Elem& a) const;
  /// Reinterprets a base element in another ring with the same p and N.
  Elem to_ring(const Elem& a, const LocalRing& target) const;

 private:
  std::uint32_t p_;
  unsigned A_;
  unsigned R_;  // p - 1
  unsigned N_;
  std::uint64_t P_;
  FieldCtx F_;
  std::vector<std::uint64_t> lifted_modulus_;  // F_0..F_{A-1}, monic
  Elem zeta_;

  std::uint64_t mod(long long v) const;
};

}  // namespace lnewton
