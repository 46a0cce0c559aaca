#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lnewton/cyclotomic.hpp"
#include "lnewton/laurent.hpp"
#include "lnewton/local_ring.hpp"

namespace lnewton {

/// Gauss sums G_k(p^s) = -sum_{a in F_{p^s}^*} chi(a)^{-k} zeta_p^{Tr a}, for the
/// subfield F_{p^s} of the residue field of a local ring, chi the Teichmuller character.
class GaussSumTable {
 public:
  GaussSumTable(const LocalRing& L, unsigned s);

  std::uint64_t field_order() const { return qs_; }
  /// G_k for k taken mod p^s - 1; cached.
  const LocalRing::Elem& G(std::uint64_t k);
  /// chi(g_s)^e for the generator g_s of F_{p^s}^* induced from the residue field.
  const LocalRing::Elem& chi_generator_power(std::uint64_t e) const { return gpow_[e % (qs_ - 1)]; }

 private:
  const LocalRing& L_;
  unsigned s_;
  std::uint64_t qs_;
  std::vector<std::uint8_t> tr_;
  std::vector<LocalRing::Elem> gpow_;
  std::vector<LocalRing::Elem> zpow_;
  std::map<std::uint64_t, LocalRing::Elem> cache_;
};

/// Sum of the base-p digits of k.
unsigned digit_sigma(std::uint64_t k, std::uint32_t p);

/// Morita's p-adic Gamma at x in Z_p (denominator prime to p), reduced mod p.
std::uint32_t padic_gamma_mod_p(std::uint32_t p, const Rational& x);

struct CheckReport {
  std::string name;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && cases > 0; }
};

/// ord_pi G_k = sigma(k) and G_k / pi^{sigma(k)} = prod_j Gamma_p({p^j k / (q - 1)}) mod pi, all k.
CheckReport gross_koblitz_check(std::uint32_t p, unsigned a, long M);

/// G_{r(q^{dk} - 1)}(q^{dk}) = G_{r(q^d - 1)}(q^d)^k for every r with (q^d - 1) r integral.
CheckReport hasse_davenport_check(std::uint32_t p, unsigned a, unsigned d, unsigned k, long M);

/// zeta^{Tr a} = sum_k G_k / (1 - q) chi(a)^k for every a in F_q^*.
CheckReport interpolation_check(std::uint32_t p, unsigned a, long M);

struct LocalValue {
  LocalRing ring;
  LocalRing::Elem value;
};

/// S_k^*(f) over F_{q^k}, q = p^a, from the expansion over H(q, k) into Gauss sums.
LocalValue exp_sum_via_gauss(const LaurentPoly& f, unsigned k, unsigned a, long M);

struct LocalSeries {
  LocalRing ring;  ///< unramified degree 1
  std::vector<LocalRing::Elem> coeffs;
};

/// L^*(f, T)^{(-1)^{n-1}} modulo T^{D+1} as the product over levels d <= d_max, q-orbits O
/// and h <= h_max of (1 - q^{dh} T^d X_O)^{C(h+m-n-1, m-n-1)}. Requires q = p.
/// Coefficients are reliable modulo pi^{val_cutoff}; throws InsufficientTruncation otherwise.
LocalSeries theorem_product(const LaurentPoly& f, unsigned D, unsigned d_max, unsigned h_max, long M,
                            long val_cutoff);

/// Exact product for diagonal f (m = n, invertible exponent matrix), truncated at D.
LocalSeries wan_diagonal_lfunction(const LaurentPoly& f, unsigned D, long M);

/// True when every coefficient c_0..c_upto agrees modulo pi^M.
bool series_match(const LocalSeries& s, const CycSeries& oracle, std::size_t upto, long M);

}  // namespace lnewton
