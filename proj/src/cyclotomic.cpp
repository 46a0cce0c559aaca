#include "lnewton/cyclotomic.hpp"

#include "lnewton/error.hpp"

namespace lnewton {

CycNum::CycNum(std::uint32_t p) : p_(p), num_(p - 1), den_(1) {
  require(p >= 2, Errc::InvalidPrime, "cyclotomic field needs a prime");
}

CycNum::CycNum(std::uint32_t p, const Rational& c) : CycNum(p) {
  num_[0] = c.get_num();
  den_ = c.get_den();
}

CycNum CycNum::zeta_power(std::uint32_t p, long long c) {
  long long r = c % static_cast<long long>(p);
  if (r < 0) r += p;
  CycNum z(p);
  if (r == static_cast<long long>(p) - 1) {
    for (auto& v : z.num_) v = -1;
  } else {
    z.num_[r] = 1;
  }
  return z;
}

CycNum CycNum::from_counts(std::uint32_t p, const std::vector<Integer>& h) {
  require(h.size() == p, Errc::InvalidArgument, "count vector must have length p");
  CycNum z(p);
  for (std::uint32_t c = 0; c + 1 < p; ++c) z.num_[c] = h[c] - h[p - 1];
  return z;
}

CycNum CycNum::from_counts(std::uint32_t p, const std::vector<std::int64_t>& h) {
  std::vector<Integer> H(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) H[i] = Integer(static_cast<long>(h[i]));
  return from_counts(p, H);
}

CycNum CycNum::from_coeffs(std::uint32_t p, std::vector<Integer> num, Integer den) {
  require(num.size() == p - 1, Errc::InvalidArgument, "coefficient vector must have length p-1");
  require(den != 0, Errc::ZeroArgument, "zero denominator");
  CycNum z(p);
  z.num_ = std::move(num);
  z.den_ = std::move(den);
  z.normalize();
  return z;
}

void CycNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& v : num_) v = -v;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& v : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g == 1) return;
  for (auto& v : num_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

Rational CycNum::coeff(std::size_t i) const {
  Rational r(num_.at(i), den_);
  r.canonicalize();
  return r;
}

bool CycNum::is_zero() const {
  for (const auto& v : num_)
    if (v != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

CycNum CycNum::operator+(const CycNum& o) const {
  require(p_ == o.p_, Errc::PrimeMismatch, "adding elements of different fields");
  CycNum r(p_);
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) r.num_[i] = num_[i] + o.num_[i];
    r.den_ = den_;
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) r.num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
    r.den_ = den_ * o.den_;
  }
  r.normalize();
  return r;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& v : r.num_) v = -v;
  return r;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator*(const CycNum& o) const {
  require(p_ == o.p_, Errc::PrimeMismatch, "multiplying elements of different fields");
  const std::size_t n = p_;
  // product in Z[x]/(x^p - 1), then fold the zeta^{p-1} coefficient
  std::vector<Integer> acc(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (o.num_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= n) k -= n;
      mpz_addmul(acc[k].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
    }
  }
  CycNum r(p_);
  for (std::size_t i = 0; i + 1 < n; ++i) r.num_[i] = acc[i] - acc[n - 1];
  r.den_ = den_ * o.den_;
  r.normalize();
  return r;
}

CycNum CycNum::operator*(const Rational& c) const {
  CycNum r = *this;
  for (auto& v : r.num_) v *= c.get_num();
  r.den_ *= c.get_den();
  r.normalize();
  return r;
}

std::string CycNum::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    Rational c = coeff(i);
    std::string s = lnewton::to_string(c);
    if (!out.empty() && c > 0) out += "+";
    if (i == 0)
      out += s;
    else
      out += s + "*z^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

long Valuation::value() const {
  require(!inf_, Errc::InvalidArgument, "valuation is infinite");
  return v_;
}

Valuation lambda_valuation(const CycNum& x, long cap) {
  require(x.is_integral(), Errc::NotIntegral, "element has denominator " + x.denominator().get_str());
  if (x.is_zero()) return Valuation::infinite();
  const std::uint32_t p = x.p();
  std::vector<Integer> a = x.numerators();
  a.push_back(0);  // room for the degree p-1 term
  Integer P(static_cast<unsigned long>(p));
  for (long v = 0;; ++v) {
    Integer s = 0;
    for (std::size_t i = 0; i + 1 < p; ++i) s += a[i];
    if (!mpz_divisible_p(s.get_mpz_t(), P.get_mpz_t())) return Valuation::finite(v);
    require(v < cap, Errc::PrecisionExhausted, "lambda valuation cap reached");
    // subtract (A(1)/p) Phi_p so A(1) = 0, then divide by (x - 1)
    Integer t = s / P;
    for (std::size_t i = 0; i < p; ++i) a[i] -= t;
    Integer carry = 0;
    std::vector<Integer> b(p, 0);
    for (std::size_t i = p - 1; i-- > 0;) {
      carry += a[i + 1];
      b[i] = carry;
    }
    a = std::move(b);
  }
}

Rational ord_p(const CycNum& x, long cap) {
  auto v = lambda_valuation(x, cap);
  require(!v.is_infinite(), Errc::ZeroArgument, "ord of zero");
  Rational r(v.value(), x.p() - 1);
  r.canonicalize();
  return r;
}

CycSeries::CycSeries(std::uint32_t p, std::size_t D) : p_(p), c_(D + 1, CycNum(p)) {}

CycSeries CycSeries::one(std::uint32_t p, std::size_t D) {
  CycSeries s(p, D);
  s.c_[0] = CycNum(p, Rational(1));
  return s;
}

CycSeries CycSeries::operator*(const CycSeries& o) const {
  require(p_ == o.p_, Errc::PrimeMismatch, "series over different fields");
  std::size_t D = std::min(degree_cap(), o.degree_cap());
  CycSeries r(p_, D);
  for (std::size_t i = 0; i <= D; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= D; ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

CycSeries CycSeries::inverse() const {
  require(c_[0].is_rational() && !c_[0].is_zero(), Errc::NotInvertible,
          "constant term must be a nonzero rational");
  Rational c0inv = 1 / c_[0].coeff(0);
  std::size_t D = degree_cap();
  CycSeries r(p_, D);
  r.c_[0] = CycNum(p_, c0inv);
  for (std::size_t n = 1; n <= D; ++n) {
    CycNum acc(p_);
    for (std::size_t k = 1; k <= n; ++k)
      if (!c_[k].is_zero()) acc += c_[k] * r.c_[n - k];
    r.c_[n] = acc * (-c0inv);
  }
  return r;
}

CycSeries CycSeries::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycSeries r = one(p_, degree_cap()), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

CycSeries CycSeries::scale(const Rational& c) const {
  CycSeries r = *this;
  Rational f = 1;
  for (std::size_t i = 0; i <= degree_cap(); ++i) {
    r.c_[i] = c_[i] * f;
    f *= c;
  }
  return r;
}

CycSeries CycSeries::truncate(std::size_t D) const {
  require(D <= degree_cap(), Errc::InvalidArgument, "cannot extend a truncated series");
  CycSeries r = *this;
  r.c_.resize(D + 1);
  return r;
}

CycSeries series_exp_power_sums(const std::vector<CycNum>& S, std::size_t D) {
  require(S.size() > D, Errc::InvalidArgument, "need power sums S_1..S_D");
  std::uint32_t p = S[1 <= D ? 1 : 0].p();
  CycSeries e = CycSeries::one(p, D);
  for (std::size_t n = 1; n <= D; ++n) {
    CycNum acc(p);
    for (std::size_t k = 1; k <= n; ++k) acc += S[k] * e[n - k];
    e[n] = acc * Rational(1, static_cast<unsigned long>(n));
  }
  return e;
}

std::vector<CycNum> series_power_sums(const CycSeries& L) {
  require(L[0] == CycNum(L.p(), Rational(1)), Errc::InvalidArgument, "constant term must be 1");
  std::size_t D = L.degree_cap();
  std::vector<CycNum> S(D + 1, CycNum(L.p()));
  for (std::size_t n = 1; n <= D; ++n) {
    CycNum acc = L[n] * Rational(static_cast<long>(n));
    for (std::size_t k = 1; k < n; ++k) acc -= S[k] * L[n - k];
    S[n] = acc;
  }
  return S;
}

}  // namespace lnewton
