#include "lnewton/ffield.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "lnewton/error.hpp"

namespace lnewton {

namespace {

using Poly = std::vector<std::uint32_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime and a != 0
  std::uint64_t r = 1, b = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  std::size_t k = m.size() - 1;
  for (std::size_t i = r.size(); i-- > k;) {
    std::uint64_t c = r[i];
    if (!c) continue;
    for (std::size_t j = 0; j <= k; ++j) r[i - k + j] = (r[i - k + j] + (p - c) * m[j]) % p;
  }
  Poly out(std::min(r.size(), k));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint32_t>(r[i]);
  trim(out);
  return out;
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  std::size_t dm = m.size() - 1;
  std::uint32_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j)
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - c) * m[j]) % p);
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const Poly& m, std::uint32_t p) {
  std::size_t k = m.size() - 1;
  Poly x{0, 1};
  Poly h = poly_mod(x, m, p);
  for (std::size_t j = 1; j <= k / 2; ++j) {
    Poly base = h;
    Poly acc{1};
    std::uint64_t e = p;
    while (e) {
      if (e & 1) acc = poly_mulmod(acc, base, m, p);
      base = poly_mulmod(base, base, m, p);
      e >>= 1;
    }
    h = acc;
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    Poly g = poly_gcd(m, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr) {
    __int128 qt = r / nr;
    t -= qt * nt;
    std::swap(t, nt);
    r -= qt * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t sqrt_floor(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t m) {
  require(m >= 1, Errc::InvalidArgument, "modulus must be positive");
  if (m == 1) return 1;
  std::uint64_t x = q % m, ord = 1;
  require(std::gcd(x, m) == 1, Errc::InvalidArgument, "base not prime to modulus");
  while (x != 1) {
    x = mulmod(x, q % m, m);
    ++ord;
  }
  return ord;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t k, std::uint64_t max_order) : p_(p), k_(k) {
  require(is_prime(p), Errc::InvalidPrime, std::to_string(p) + " is not prime");
  require(k >= 1, Errc::InvalidArgument, "extension degree must be >= 1");
  q_ = 1;
  ppow_.push_back(1);
  for (std::uint32_t i = 0; i < k; ++i) {
    require(q_ <= max_order / p, Errc::SizeExceeded,
            "field order " + std::to_string(p) + "^" + std::to_string(k) + " exceeds budget");
    q_ *= p;
    ppow_.push_back(q_);
  }
  if (k == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint64_t t = 0; t < q_; ++t) {
      Poly m(k + 1);
      std::uint64_t s = t;
      for (std::uint32_t i = 0; i < k; ++i) {
        m[i] = static_cast<std::uint32_t>(s % p);
        s /= p;
      }
      m[k] = 1;
      if (m[0] == 0) continue;
      if (is_irreducible(m, p)) {
        modulus_ = m;
        break;
      }
    }
    require(!modulus_.empty(), Errc::InternalError, "no irreducible polynomial found");
  }
  basis_trace_.assign(k, 0);
  factors_ = factorize(q_ - 1);
  for (std::uint64_t i = 1; i < q_; ++i) {
    if (has_full_order(FqElem{i})) {
      generator_ = FqElem{i};
      break;
    }
  }
  if (q_ == 2) generator_ = FqElem{1};
  // trace of the basis powers x^i, used for the linear absolute trace
  for (std::uint32_t i = 0; i < k; ++i) {
    FqElem xi{ppow_[i]};
    FqElem acc = xi, t = zero();
    for (std::uint32_t j = 0; j < k; ++j) {
      t = add(t, acc);
      acc = pow(acc, p);
    }
    basis_trace_[i] = static_cast<std::uint32_t>(t.index);
  }
}

bool FieldCtx::has_full_order(FqElem x) const {
  if (x.index == 0) return false;
  for (auto [l, e] : factors_)
    if (pow(x, (q_ - 1) / l) == one()) return false;
  return true;
}

FqElem FieldCtx::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return FqElem{static_cast<std::uint64_t>(r)};
}

std::vector<std::uint32_t> FieldCtx::coeffs(FqElem x) const {
  std::vector<std::uint32_t> c(k_);
  std::uint64_t s = x.index;
  for (std::uint32_t i = 0; i < k_; ++i) {
    c[i] = static_cast<std::uint32_t>(s % p_);
    s /= p_;
  }
  return c;
}

FqElem FieldCtx::from_coeffs(const std::vector<std::uint32_t>& c) const {
  require(c.size() <= k_, Errc::InvalidArgument, "too many coefficients");
  std::uint64_t s = 0;
  for (std::size_t i = c.size(); i-- > 0;) s = s * p_ + (c[i] % p_);
  return FqElem{s};
}

FqElem FieldCtx::add(FqElem a, FqElem b) const {
  if (k_ == 1) return FqElem{(a.index + b.index) % p_};
  std::uint64_t s = 0, x = a.index, y = b.index;
  for (std::uint32_t i = 0; i < k_; ++i) {
    s += ((x % p_ + y % p_) % p_) * ppow_[i];
    x /= p_;
    y /= p_;
  }
  return FqElem{s};
}

FqElem FieldCtx::neg(FqElem a) const {
  if (k_ == 1) return FqElem{(p_ - a.index) % p_};
  std::uint64_t s = 0, x = a.index;
  for (std::uint32_t i = 0; i < k_; ++i) {
    s += ((p_ - x % p_) % p_) * ppow_[i];
    x /= p_;
  }
  return FqElem{s};
}

FqElem FieldCtx::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FieldCtx::mul(FqElem a, FqElem b) const {
  if (k_ == 1) return FqElem{a.index * b.index % p_};
  auto ca = coeffs(a), cb = coeffs(b);
  std::vector<std::uint64_t> r(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (!ca[i]) continue;
    for (std::uint32_t j = 0; j < k_; ++j) r[i + j] += std::uint64_t{ca[i]} * cb[j];
  }
  for (auto& v : r) v %= p_;
  for (std::size_t i = r.size(); i-- > k_;) {
    std::uint64_t c = r[i];
    if (!c) continue;
    for (std::uint32_t j = 0; j < k_; ++j) r[i - k_ + j] = (r[i - k_ + j] + (p_ - c) * modulus_[j]) % p_;
  }
  std::uint64_t s = 0;
  for (std::uint32_t i = k_; i-- > 0;) s = s * p_ + r[i];
  return FqElem{s};
}

FqElem FieldCtx::pow(FqElem a, std::uint64_t e) const {
  FqElem r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FqElem FieldCtx::inv(FqElem a) const {
  require(a.index != 0, Errc::ZeroArgument, "inverse of zero");
  return pow(a, q_ - 2);
}

FqElem FieldCtx::frobenius(FqElem x, unsigned j) const {
  j %= k_;
  for (unsigned i = 0; i < j; ++i) x = pow(x, p_);
  return x;
}

bool FieldCtx::in_subfield(FqElem x, unsigned s) const {
  require(s >= 1 && k_ % s == 0, Errc::InvalidSubfield,
          std::to_string(s) + " does not divide " + std::to_string(k_));
  return frobenius(x, s) == x;
}

FqElem FieldCtx::trace(FqElem x, unsigned s) const {
  require(s >= 1 && k_ % s == 0, Errc::InvalidSubfield,
          std::to_string(s) + " does not divide " + std::to_string(k_));
  FqElem acc = zero(), y = x;
  for (unsigned j = 0; j < k_ / s; ++j) {
    acc = add(acc, y);
    y = frobenius(y, s);
  }
  return acc;
}

std::uint32_t FieldCtx::abs_trace(FqElem x) const {
  if (k_ == 1) return static_cast<std::uint32_t>(x.index);
  std::uint64_t s = 0, v = x.index;
  for (std::uint32_t i = 0; i < k_; ++i) {
    s += (v % p_) * basis_trace_[i];
    v /= p_;
  }
  return static_cast<std::uint32_t>(s % p_);
}

std::uint64_t FieldCtx::discrete_log(FqElem x) const {
  require(x.index != 0, Errc::ZeroArgument, "discrete log of zero");
  const std::uint64_t n = q_ - 1;
  if (n == 1) return 0;
  // Pohlig-Hellman with baby-step giant-step on each prime
  std::uint64_t result = 0, modulus = 1;
  for (auto [l, e] : factors_) {
    std::uint64_t le = ipow(l, e);
    FqElem gamma = pow(generator_, n / l);  // order l
    std::uint64_t m = sqrt_floor(l) + 1;
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    FqElem cur = one();
    for (std::uint64_t j = 0; j < m; ++j) {
      baby.emplace(cur.index, j);
      cur = mul(cur, gamma);
    }
    FqElem giant = inv(pow(gamma, m));
    std::uint64_t xk = 0, lk = 1;
    for (unsigned t = 0; t < e; ++t) {
      FqElem h = mul(pow(inv(generator_), xk), x);
      h = pow(h, n / (lk * l));
      std::uint64_t digit = l;
      FqElem y = h;
      for (std::uint64_t i = 0; i <= m; ++i) {
        auto it = baby.find(y.index);
        if (it != baby.end()) {
          digit = (i * m + it->second) % l;
          break;
        }
        y = mul(y, giant);
      }
      require(digit < l, Errc::InternalError, "discrete log failed");
      xk += digit * lk;
      lk *= l;
    }
    // combine by CRT
    std::uint64_t r = xk % le;
    std::uint64_t diff = (r + le - result % le) % le;
    std::uint64_t t = mulmod(diff, inv_mod(modulus % le, le), le);
    result += modulus * t;
    modulus *= le;
  }
  return result % n;
}

std::uint64_t FieldCtx::log_of_prime_field(std::uint32_t a) const {
  require(a % p_ != 0, Errc::ZeroArgument, "log of zero");
  const std::uint64_t n = q_ - 1, c = n / (p_ - 1);
  // N(g) = g^c generates F_p*
  FqElem gp = pow(generator_, c);
  FqElem target = from_int(a);
  FqElem cur = one();
  for (std::uint64_t e = 0; e < p_ - 1; ++e) {
    if (cur == target) return e * c;
    cur = mul(cur, gp);
  }
  fail(Errc::InternalError, "prime field log failed");
}

std::vector<std::uint8_t> FieldCtx::trace_table(unsigned threads) const {
  require(p_ < 256, Errc::Unsupported, "trace tables need p < 256");
  const std::uint64_t n = q_ - 1;
  // the sequence Tr(g^e) satisfies the recurrence of the minimal polynomial of g
  std::vector<std::uint32_t> rec;  // t_e = sum_i rec[i] * t_{e-1-i}
  {
    std::vector<std::uint64_t> s(2 * k_);
    FqElem cur = one();
    for (auto& v : s) {
      v = abs_trace(cur);
      cur = mul(cur, generator_);
    }
    // Berlekamp-Massey over F_p
    std::vector<std::uint64_t> C{1}, B{1};
    std::size_t L = 0, m = 1;
    std::uint64_t b = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::uint64_t d = s[i];
      for (std::size_t j = 1; j <= L && j < C.size(); ++j) d = (d + C[j] * s[i - j]) % p_;
      if (d == 0) {
        ++m;
        continue;
      }
      std::uint64_t coef = d * inv_mod_p(static_cast<std::uint32_t>(b), p_) % p_;
      std::vector<std::uint64_t> T = C;
      if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
      for (std::size_t j = 0; j < B.size(); ++j) C[j + m] = (C[j + m] + (p_ - coef) * B[j]) % p_;
      if (2 * L <= i) {
        L = i + 1 - L;
        B = T;
        b = d;
        m = 1;
      } else {
        ++m;
      }
    }
    C.resize(L + 1, 0);
    rec.resize(L);
    for (std::size_t i = 1; i <= L; ++i) rec[i - 1] = static_cast<std::uint32_t>((p_ - C[i]) % p_);
  }
  const std::size_t L = rec.size();
  std::vector<std::uint8_t> T(n);
  auto fill = [&](std::uint64_t start, std::uint64_t stop) {
    if (start >= stop) return;
    FqElem cur = pow(generator_, start);
    std::uint64_t head = std::min<std::uint64_t>(stop, start + L);
    for (std::uint64_t e = start; e < head; ++e) {
      T[e] = static_cast<std::uint8_t>(abs_trace(cur));
      cur = mul(cur, generator_);
    }
    for (std::uint64_t e = head; e < stop; ++e) {
      std::uint32_t acc = 0;
      for (std::size_t i = 0; i < L; ++i) acc += rec[i] * T[e - 1 - i];
      T[e] = static_cast<std::uint8_t>(acc % p_);
    }
  };
  if (threads <= 1 || n < (1u << 16)) {
    fill(0, n);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(fill, t * chunk, std::min<std::uint64_t>(n, (t + 1) * chunk));
    for (auto& th : pool) th.join();
  }
  return T;
}

FieldCtx build_field(std::uint32_t p, std::uint32_t k, std::uint64_t max_order) {
  return FieldCtx(p, k, max_order);
}

}  // namespace lnewton
