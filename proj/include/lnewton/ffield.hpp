#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace lnewton {

/// Element of F_{p^k}, stored as the integer sum c_i p^i of its coefficients
/// in the polynomial basis 1, x, ..., x^{k-1}.
struct FqElem {
  std::uint64_t index = 0;
  friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, returned as (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Multiplicative order of q modulo m (m >= 1, gcd(q, m) = 1).
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t m);

std::uint64_t ipow(std::uint64_t base, unsigned e);

/// Immutable finite field context. The modulus is the lexicographically
/// smallest monic irreducible of degree k (leading coefficients compared
/// first), and the generator is the smallest element of order p^k - 1.
class FieldCtx {
 public:
  static constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 40;

  FieldCtx(std::uint32_t p, std::uint32_t k, std::uint64_t max_order = kDefaultMaxOrder);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint64_t order() const { return q_; }
  /// Monic modulus, coefficients c_0..c_k. For k = 1 this is x.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FqElem generator() const { return generator_; }

  FqElem zero() const { return {0}; }
  FqElem one() const { return {1}; }
  FqElem from_int(long long v) const;
  std::vector<std::uint32_t> coeffs(FqElem x) const;
  FqElem from_coeffs(const std::vector<std::uint32_t>& c) const;

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  FqElem inv(FqElem a) const;
  FqElem pow(FqElem a, std::uint64_t e) const;
  /// x^{p^j}
  FqElem frobenius(FqElem x, unsigned j) const;

  bool in_subfield(FqElem x, unsigned s) const;
  /// Trace to the subfield F_{p^s}; s must divide k.
  FqElem trace(FqElem x, unsigned s) const;
  /// Trace to F_p as an integer in [0, p).
  std::uint32_t abs_trace(FqElem x) const;

  /// Discrete logarithm to the base generator(); x must be nonzero.
  std::uint64_t discrete_log(FqElem x) const;
  /// log_g(a) for a in F_p*, via the norm of the generator.
  std::uint64_t log_of_prime_field(std::uint32_t a) const;

  /// T[e] = Tr(g^e) for e in [0, q - 2]. Requires p < 256.
  std::vector<std::uint8_t> trace_table(unsigned threads = 1) const;

  const std::vector<std::pair<std::uint64_t, unsigned>>& order_minus_one_factors() const {
    return factors_;
  }

 private:
  std::uint32_t p_;
  std::uint32_t k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> ppow_;
  std::vector<std::uint32_t> basis_trace_;
  std::vector<std::pair<std::uint64_t, unsigned>> factors_;
  FqElem generator_;

  bool has_full_order(FqElem x) const;
};

FieldCtx build_field(std::uint32_t p, std::uint32_t k,
                     std::uint64_t max_order = FieldCtx::kDefaultMaxOrder);

}  // namespace lnewton
