#include "lnewton/local_ring.hpp"

#include "lnewton/error.hpp"

namespace lnewton {

using u128 = unsigned __int128;

LocalRing::LocalRing(std::uint32_t p, unsigned A, long precision)
    : p_(p), A_(A), R_(p - 1), N_(0), P_(1), F_(p, A) {
  require(p >= 3, Errc::InvalidPrime, "local ring needs an odd prime");
  require(precision >= 1, Errc::InvalidArgument, "precision must be positive");
  N_ = static_cast<unsigned>((precision + R_ - 1) / R_);
  for (unsigned i = 0; i < N_; ++i) {
    require(P_ < (std::uint64_t{1} << 50) / p, Errc::SizeExceeded, "p-adic precision too large");
    P_ *= p;
  }
  const auto& m = F_.modulus();
  lifted_modulus_.assign(m.begin(), m.begin() + A);
  // zeta = 1 + pi u with u^{p-1} - 1 - sum_{i=2}^{p-1} (C(p,i)/p) pi^{i-1} u^{i-1} = 0
  std::vector<std::uint64_t> c(p, 0);
  for (std::uint32_t i = 1; i < p; ++i) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), p, i);
    c[i] = mod_reduce(Integer(b / p), P_);
  }
  Elem pi = pi_power(1);
  Elem u = one();
  for (int iter = 0; iter < 200; ++iter) {
    Elem h = sub(pow(u, R_), one());
    Elem dh = mul(from_int(R_), pow(u, R_ - 1));
    for (std::uint32_t i = 2; i < p; ++i) {
      Elem term = mul(from_int(static_cast<long long>(c[i])), pow(pi, i - 1));
      h = sub(h, mul(term, pow(u, i - 1)));
      dh = sub(dh, mul(mul(term, from_int(i - 1)), pow(u, i - 2)));
    }
    Elem next = sub(u, mul(h, inv(dh)));
    if (next == u) break;
    u = next;
  }
  zeta_ = add(one(), mul(pi, u));
  require(pow(zeta_, p) == one() && zeta_ != one(), Errc::InternalError, "zeta_p lift failed");
}

std::uint64_t LocalRing::mod(long long v) const {
  long long r = v % static_cast<long long>(P_);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(P_) : r);
}

LocalRing::Elem LocalRing::from_int(long long v) const {
  Elem e = zero();
  e[0] = mod(v);
  return e;
}

LocalRing::Elem LocalRing::from_integer(const Integer& v) const {
  Elem e = zero();
  e[0] = mod_reduce(v, P_);
  return e;
}

LocalRing::Elem LocalRing::from_rational(const Rational& v) const {
  Elem e = zero();
  e[0] = mod_reduce(v, P_);
  return e;
}

LocalRing::Elem LocalRing::pi_power(long s) const {
  require(s >= 0, Errc::InvalidArgument, "negative power of pi");
  Elem e = zero();
  long i = s % R_, ex = s / R_;
  std::uint64_t v = 1;
  for (long t = 0; t < ex; ++t) v = static_cast<std::uint64_t>(static_cast<u128>(v) * p_ % P_);
  if (ex % 2) v = (P_ - v) % P_;
  e[i * A_] = v;
  return e;
}

LocalRing::Elem LocalRing::add(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t s = a[i] + b[i];
    r[i] = s >= P_ ? s - P_ : s;
  }
  return r;
}

LocalRing::Elem LocalRing::neg(const Elem& a) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] ? P_ - a[i] : 0;
  return r;
}

LocalRing::Elem LocalRing::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

LocalRing::Elem LocalRing::mul(const Elem& a, const Elem& b) const {
  const unsigned W = 2 * A_ - 1, H = 2 * R_ - 1;
  std::vector<u128> acc(H * W, 0);
  for (unsigned i1 = 0; i1 < R_; ++i1)
    for (unsigned j1 = 0; j1 < A_; ++j1) {
      std::uint64_t x = a[i1 * A_ + j1];
      if (!x) continue;
      for (unsigned i2 = 0; i2 < R_; ++i2)
        for (unsigned j2 = 0; j2 < A_; ++j2) {
          std::uint64_t y = b[i2 * A_ + j2];
          if (y) acc[(i1 + i2) * W + j1 + j2] += static_cast<u128>(x) * y;
        }
    }
  std::vector<std::uint64_t> r(H * W);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint64_t>(acc[i] % P_);
  // x^A = -sum F_t x^t
  for (unsigned i = 0; i < H; ++i)
    for (unsigned j = W; j-- > A_;) {
      std::uint64_t c = r[i * W + j];
      if (!c) continue;
      r[i * W + j] = 0;
      for (unsigned t = 0; t < A_; ++t) {
        std::uint64_t& dst = r[i * W + j - A_ + t];
        dst = static_cast<std::uint64_t>((dst + static_cast<u128>(P_ - c) * lifted_modulus_[t]) % P_);
      }
    }
  // pi^{p-1} = -p
  for (unsigned i = H; i-- > R_;)
    for (unsigned j = 0; j < A_; ++j) {
      std::uint64_t c = r[i * W + j];
      if (!c) continue;
      std::uint64_t pc = static_cast<std::uint64_t>(static_cast<u128>(c) * p_ % P_);
      std::uint64_t& dst = r[(i - R_) * W + j];
      dst = (dst + P_ - pc) % P_;
    }
  Elem out(R_ * A_);
  for (unsigned i = 0; i < R_; ++i)
    for (unsigned j = 0; j < A_; ++j) out[i * A_ + j] = r[i * W + j];
  return out;
}

LocalRing::Elem LocalRing::pow(const Elem& a, std::uint64_t e) const {
  Elem r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

LocalRing::Elem LocalRing::inv(const Elem& a) const {
  std::vector<std::uint32_t> res(A_);
  for (unsigned j = 0; j < A_; ++j) res[j] = static_cast<std::uint32_t>(a[j] % p_);
  FqElem r = F_.from_coeffs(res);
  require(r != F_.zero(), Errc::NotInvertible, "element is not a unit");
  auto rc = F_.coeffs(F_.inv(r));
  Elem y = zero();
  for (unsigned j = 0; j < A_; ++j) y[j] = rc[j];
  Elem two = from_int(2);
  for (int iter = 0; iter < 128; ++iter) {
    Elem next = mul(y, sub(two, mul(a, y)));
    if (next == y) break;
    y = next;
  }
  return y;
}

bool LocalRing::is_zero(const Elem& a) const {
  for (auto v : a)
    if (v) return false;
  return true;
}

std::optional<long> LocalRing::valuation(const Elem& a) const {
  std::optional<long> best;
  for (unsigned i = 0; i < R_; ++i)
    for (unsigned j = 0; j < A_; ++j) {
      std::uint64_t c = a[i * A_ + j];
      if (!c) continue;
      long v = 0;
      while (c % p_ == 0) {
        c /= p_;
        ++v;
      }
      long val = static_cast<long>(i) + static_cast<long>(R_) * v;
      if (!best || val < *best) best = val;
    }
  return best;
}

bool LocalRing::equal_mod(const Elem& a, const Elem& b, long M) const {
  require(M <= precision(), Errc::PrecisionExhausted, "comparison beyond working precision");
  auto v = valuation(sub(a, b));
  return !v || *v >= M;
}

FqElem LocalRing::unit_residue(const Elem& a, long s) const {
  require(s + 1 <= precision(), Errc::PrecisionExhausted, "residue beyond working precision");
  auto v = valuation(a);
  require(!v || *v >= s, Errc::InvalidArgument, "element has valuation below the requested shift");
  long i0 = s % R_, e = s / R_;
  std::uint64_t pe = 1;
  for (long t = 0; t < e; ++t) pe *= p_;
  std::vector<std::uint32_t> res(A_);
  for (unsigned j = 0; j < A_; ++j) {
    std::uint64_t c = a[i0 * A_ + j] / pe % p_;
    if (e % 2) c = (p_ - c) % p_;
    res[j] = static_cast<std::uint32_t>(c);
  }
  return F_.from_coeffs(res);
}

LocalRing::Elem LocalRing::teichmuller(FqElem r) const {
  Elem y = zero();
  auto c = F_.coeffs(r);
  for (unsigned j = 0; j < A_; ++j) y[j] = c[j];
  if (r == F_.zero()) return y;
  const std::uint64_t q = F_.order();
  for (unsigned iter = 0; iter <= N_ + 2; ++iter) {
    Elem next = pow(y, q);
    if (next == y) return y;
    y = next;
  }
  fail(Errc::PrecisionExhausted, "Teichmuller iteration did not stabilize");
}

LocalRing::Elem LocalRing::embed(const CycNum& c) const {
  require(c.p() == p_, Errc::PrimeMismatch, "cyclotomic element over a different prime");
  const auto& num = c.numerators();
  Elem acc = zero();
  for (std::size_t i = num.size(); i-- > 0;) acc = add(mul(acc, zeta_), from_integer(num[i]));
  return mul(acc, from_rational(Rational(Integer(1), c.denominator())));
}

bool LocalRing::in_base(const Elem& a) const {
  for (unsigned i = 0; i < R_; ++i)
    for (unsigned j = 1; j < A_; ++j)
      if (a[i * A_ + j]) return false;
  return true;
}

LocalRing::Elem LocalRing::to_ring(const Elem& a, const LocalRing& target) const {
  require(target.p_ == p_ && target.N_ == N_, Errc::PrimeMismatch, "rings differ in p or precision");
  require(in_base(a), Errc::IdentityViolation, "element does not lie in Z_p[pi]");
  Elem out = target.zero();
  for (unsigned i = 0; i < R_; ++i) out[i * target.A_] = a[i * A_];
  return out;
}

}  // namespace lnewton
