#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lnewton/rational.hpp"

namespace lnewton {

/// Element of Q(zeta_p) in the basis 1, zeta, ..., zeta^{p-2}, stored as
/// integer numerators over a common positive denominator in lowest terms.
class CycNum {
 public:
  CycNum() = default;
  explicit CycNum(std::uint32_t p);
  CycNum(std::uint32_t p, const Rational& c);

  static CycNum zeta_power(std::uint32_t p, long long c);
  /// sum_c h[c] zeta^c for c in [0, p)
  static CycNum from_counts(std::uint32_t p, const std::vector<Integer>& h);
  static CycNum from_counts(std::uint32_t p, const std::vector<std::int64_t>& h);
  static CycNum from_coeffs(std::uint32_t p, std::vector<Integer> num, Integer den = 1);

  std::uint32_t p() const { return p_; }
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }
  Rational coeff(std::size_t i) const;

  bool is_zero() const;
  bool is_integral() const { return den_ == 1; }
  bool is_rational() const;

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator-() const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator*(const Rational& c) const;
  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
  bool operator==(const CycNum& o) const { return p_ == o.p_ && den_ == o.den_ && num_ == o.num_; }

  std::string to_string() const;

 private:
  std::uint32_t p_ = 0;
  std::vector<Integer> num_;
  Integer den_ = 1;

  void normalize();
};

/// lambda-adic valuation, lambda = zeta_p - 1. Infinite for zero.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(); }
  static Valuation finite(long v) { return Valuation(v); }
  bool is_infinite() const { return inf_; }
  long value() const;
  bool operator==(const Valuation& o) const { return inf_ == o.inf_ && (inf_ || v_ == o.v_); }

 private:
  Valuation() : inf_(true), v_(0) {}
  explicit Valuation(long v) : inf_(false), v_(v) {}
  bool inf_;
  long v_;
};

Valuation lambda_valuation(const CycNum& x, long cap = 1L << 20);

/// ord_p = lambda valuation / (p - 1). Throws ZeroArgument on zero.
Rational ord_p(const CycNum& x, long cap = 1L << 20);

/// Truncated power series in T with Q(zeta_p) coefficients c_0..c_D.
class CycSeries {
 public:
  CycSeries() = default;
  CycSeries(std::uint32_t p, std::size_t D);
  static CycSeries one(std::uint32_t p, std::size_t D);

  std::uint32_t p() const { return p_; }
  std::size_t degree_cap() const { return c_.size() - 1; }
  const CycNum& operator[](std::size_t i) const { return c_[i]; }
  CycNum& operator[](std::size_t i) { return c_[i]; }
  const std::vector<CycNum>& coeffs() const { return c_; }

  CycSeries operator*(const CycSeries& o) const;
  CycSeries inverse() const;
  CycSeries pow(long e) const;
  /// T -> c T
  CycSeries scale(const Rational& c) const;
  CycSeries truncate(std::size_t D) const;
  bool operator==(const CycSeries& o) const { return p_ == o.p_ && c_ == o.c_; }

 private:
  std::uint32_t p_ = 0;
  std::vector<CycNum> c_;
};

/// exp(sum_{k=1}^{D} S_k T^k / k) truncated at degree D; S[0] is ignored.
CycSeries series_exp_power_sums(const std::vector<CycNum>& S, std::size_t D);

/// Inverse operation: recovers S_1..S_D from a series with constant term 1.
std::vector<CycNum> series_power_sums(const CycSeries& L);

}  // namespace lnewton
