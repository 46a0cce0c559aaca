#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lnewton/laurent.hpp"
#include "lnewton/newton_polygon.hpp"
#include "lnewton/oracle.hpp"

namespace lnewton {

struct ShiftResult {
  LaurentPoly f;       ///< monic, no x^{d-1} term, no constant
  std::uint32_t b = 0;  ///< f(x + b) before scaling
  std::uint32_t scale = 1;  ///< inverse of the original leading coefficient
};

/// Monic rescaling, x -> x + b clearing the x^{d-1} coefficient, constant dropped.
/// None of these change the Newton polygon.
ShiftResult normalize_shift(const LaurentPoly& f);

/// C(r; u, v) as vectors h_1..h_{d-2}, sorted. Needs a monic f with no x^{d-1} term.
std::vector<std::vector<std::uint32_t>> enumerate_C(const LaurentPoly& f, long r, long u, long v);

/// F(r; u, v) mod p.
std::uint32_t F_of(const LaurentPoly& f, long r, long u, long v);

/// F_r^s mod p: the sum over s-sets U of distinct u-values of the x^r coefficient of
/// det(sum_r' F(r'; u_i, u_j) x^r'), where diagonal entries skip columns with a digit p - 1.
/// Sets with sum above u_sum_bound are skipped; the default
/// floor(d r / (p - 1)) drops only sets that admit no solutions.
std::uint32_t F_r_s(const LaurentPoly& f, long r, unsigned s, std::optional<long> u_sum_bound = std::nullopt);

enum class SlopeStatus { Proved, Inconclusive, BoundExceeded };
const char* slope_status_name(SlopeStatus s);

struct SlopeReport {
  unsigned s = 0;
  long R = 0;
  Rational lambda;  ///< R / (p - 1); a lower bound unless proved
  SlopeStatus status = SlopeStatus::Inconclusive;
  std::vector<std::pair<long, std::uint32_t>> trace;  ///< (r, F_r^s) for every r tried
};

/// First r with F_r^s nonzero, scanned upward from (p - 1) s (s - 1) / (2d). A proved lambda is
/// ord c_s of L_0^*(f, T) for the given f; it is ord c_s of L^* too when lambda < 1 or f is a monomial.
SlopeReport lambda_s(const LaurentPoly& f, unsigned s, std::optional<long> r_cap = std::nullopt);

struct SmallDegreePolygon {
  NewtonPolygon polygon;  ///< NP of L(f, T)
  ShiftResult normalized;
  std::vector<SlopeReport> reports;
  bool used_oracle = false;
};

/// NP of L(f, T) for 3 <= d <= 6 from lambda_s, s <= (d + 1) / 2, and the symmetry alpha -> 1 - alpha;
/// falls back to the oracle when a needed lambda_s is inconclusive and allow_oracle is set.
SmallDegreePolygon full_np_small_d(const LaurentPoly& f, const OracleOptions& opt = {}, bool allow_oracle = true);

}  // namespace lnewton
