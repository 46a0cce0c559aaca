#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lnewton/cyclotomic.hpp"
#include "lnewton/laurent.hpp"
#include "lnewton/newton_polygon.hpp"

namespace lnewton {

enum class FiberMode { Auto, Naive, Reduced };

struct OracleOptions {
  unsigned a = 1;  ///< ground field F_q with q = p^a
  std::uint64_t budget = 600'000'000;  ///< max points enumerated per exponential sum
  unsigned threads = 1;
  FiberMode fiber = FiberMode::Auto;
};

/// f = A(x) + B(x) y + c y^2 with c a nonzero constant and p odd.
bool quadratic_fiber_applicable(const LaurentPoly& f);

/// Number of torus points the oracle visits for S_k.
std::uint64_t enumeration_cost(const LaurentPoly& f, unsigned k, const OracleOptions& opt);

/// S_k^*(f) = sum over (F_{q^k}^*)^n of zeta_p^{Tr f(x)}.
CycNum exp_sum_star(const LaurentPoly& f, unsigned k, const OracleOptions& opt = {});

/// S_k(f) over all of F_{q^k}^n; f must not have negative exponents in a coordinate set to 0.
CycNum exp_sum_full(const LaurentPoly& f, unsigned k, const OracleOptions& opt = {});

struct LFunctionResult {
  CycSeries series;
  long degree_bound = 0;
  std::vector<std::size_t> vanishing_violations;
  bool checked_beyond_bound = false;
};

/// Best-effort nondegeneracy: exact for univariate input, a search over F_p for n = 2.
bool believed_nondegenerate(const LaurentPoly& f);

/// Default truncation: target bound + 2, clipped to the budget but never below the bound.
unsigned default_degree_cap(const LaurentPoly& f, const OracleOptions& opt, bool affine);

/// L^*(f, T)^{(-1)^{n-1}} truncated at degree D.
LFunctionResult lfunction_star(const LaurentPoly& f, std::optional<unsigned> D, const OracleOptions& opt = {});

/// L(f, T) for a univariate polynomial, a polynomial of degree d - 1 when p does not divide d.
LFunctionResult lfunction_affine(const LaurentPoly& f, std::optional<unsigned> D,
                                 const OracleOptions& opt = {});

/// [exp(sum (1 - q^k)^{m-n} S_k^* T^k / k)]^{(-1)^{n-1}} from rescaled sums, m = number of nonconstant terms.
CycSeries l0_star(const LaurentPoly& f, unsigned D, const OracleOptions& opt = {});

/// The same series from L^*(T)^{(-1)^{n-1}} via prod_i L^*(q^i T)^{(-1)^i C(m-n, i)}.
CycSeries l0_star_from_lstar(const CycSeries& lstar_signed, long m_minus_n, const Integer& q);

/// Exact division of a polynomial of the given degree by (1 - T).
CycSeries strip_trivial_factor(const CycSeries& poly, std::size_t degree);

/// ord_p of each coefficient c_0..c_upto; nullopt for zero.
std::vector<std::optional<Rational>> coefficient_ords(const CycSeries& s, std::size_t upto);

struct OraclePolygon {
  NewtonPolygon polygon;  ///< in ord_q normalization
  LFunctionResult lfunction;
  bool affine = false;  ///< polygon of L(f, T) rather than L^*
};

/// NP of L(f, T) for univariate polynomials, else NP of L^*(f, T)^{(-1)^{n-1}}.
OraclePolygon oracle_newton_polygon(const LaurentPoly& f, std::optional<unsigned> D = std::nullopt,
                                    const OracleOptions& opt = {});

}  // namespace lnewton
