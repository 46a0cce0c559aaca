#include "lnewton/slopes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "lnewton/digits.hpp"
#include "lnewton/error.hpp"
#include "lnewton/permutations.hpp"

namespace lnewton {

const char* slope_status_name(SlopeStatus s) {
  switch (s) {
    case SlopeStatus::Proved: return "proved";
    case SlopeStatus::Inconclusive: return "inconclusive";
    case SlopeStatus::BoundExceeded: return "bound-exceeded";
  }
  return "?";
}

namespace {

struct Shape {
  std::uint32_t p;
  long d;
  std::vector<long> deg;              // d_1 < ... < d_{m-1}
  std::vector<std::uint32_t> coeff;   // a_1 .. a_{m-1}
  std::uint32_t lead;                 // a_m
};

Shape shape_of(const LaurentPoly& f) {
  require(f.nvars() == 1 && f.is_polynomial(), Errc::InvalidArgument, "need a univariate polynomial");
  Shape s;
  s.p = f.p();
  s.d = f.degree();
  s.lead = 0;
  for (const auto& t : f.terms()) {
    if (t.exp[0] == 0) continue;
    if (t.exp[0] == s.d) {
      s.lead = t.coeff;
      continue;
    }
    s.deg.push_back(t.exp[0]);
    s.coeff.push_back(t.coeff);
  }
  std::vector<std::size_t> idx(s.deg.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return s.deg[a] < s.deg[b]; });
  Shape o = s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    o.deg[i] = s.deg[idx[i]];
    o.coeff[i] = s.coeff[idx[i]];
  }
  require(o.d >= 2, Errc::InvalidArgument, "degree must be at least 2");
  require(o.deg.empty() || o.deg.back() <= o.d - 2, Errc::RegimeError,
          "x^{d-1} term present; apply normalize_shift first");
  return o;
}

void check_regime(const Shape& s) {
  long sum = s.d + std::accumulate(s.deg.begin(), s.deg.end(), 0L);
  require(static_cast<long>(s.p) >= sum, Errc::RegimeError,
          "need p >= sum of exponents (" + std::to_string(sum) + "); use the oracle");
}

// calls fn(k) for each nonnegative k with sum (d - d_i) k_i = rhs, k_i <= p - 1, r - sum k in [0, p - 1]
template <class Fn>
void knapsack(const Shape& s, long r, long rhs, Fn&& fn) {
  const std::size_t m1 = s.deg.size();
  std::vector<long> k(m1, 0);
  auto rec = [&](auto&& self, std::size_t i, long rem, long used) -> void {
    if (i == m1) {
      long km = r - used;
      if (rem == 0 && km >= 0 && km <= static_cast<long>(s.p) - 1) fn(k, km);
      return;
    }
    const long w = s.d - s.deg[i];
    for (long x = 0; x <= static_cast<long>(s.p) - 1 && x * w <= rem && used + x <= r; ++x) {
      k[i] = x;
      self(self, i + 1, rem - x * w, used + x);
    }
    k[i] = 0;
  };
  rec(rec, 0, rhs, 0);
}

class FCache {
 public:
  explicit FCache(const Shape& s) : s_(s), fact_(s.p) {}

  // fixed: a one-column block, where a digit p - 1 would be the excluded numerator q - 1
  std::uint32_t get(long r, long u, long v, bool fixed = false) {
    auto key = std::make_tuple(r, u, v, fixed);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::uint64_t acc = 0;
    const long rhs = s_.d * r - u * static_cast<long>(s_.p) + v;
    if (r >= 0 && rhs >= 0) {
      const std::uint32_t p = s_.p;
      knapsack(s_, r, rhs, [&](const std::vector<long>& k, long km) {
        if (fixed && (km == static_cast<long>(p) - 1 ||
                      std::find(k.begin(), k.end(), static_cast<long>(p) - 1) != k.end()))
          return;
        std::uint64_t t = std::uint64_t{powmod(s_.lead, km, p)} * fact_.inv_fact(km) % p;
        for (std::size_t i = 0; i < k.size(); ++i)
          t = t * powmod(s_.coeff[i], k[i], p) % p * fact_.inv_fact(k[i]) % p;
        acc = (acc + t) % p;
      });
    }
    return memo_[key] = static_cast<std::uint32_t>(acc);
  }

 private:
  const Shape& s_;
  FactorialTable fact_;
  std::map<std::tuple<long, long, long, bool>, std::uint32_t> memo_;
};

// sets of s distinct nonnegative integers with sum <= bound
void for_each_u_set(unsigned s, long bound, const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> U;
  auto rec = [&](auto&& self, long next, long sum) -> void {
    if (U.size() == s) {
      fn(U);
      return;
    }
    const long left = static_cast<long>(s - U.size());
    // the smallest completion uses next, next + 1, ...
    for (long x = next; sum + left * x + left * (left - 1) / 2 <= bound; ++x) {
      U.push_back(x);
      self(self, x + 1, sum + x);
      U.pop_back();
    }
  };
  rec(rec, 0, 0);
}

std::uint32_t F_r_s_impl(const Shape& sh, FCache& F, long r, unsigned s, long bound) {
  const std::uint32_t p = sh.p;
  const auto perms = all_perms(s);
  std::uint64_t total = 0;
  for_each_u_set(s, bound, [&](const std::vector<long>& U) {
    // entries as truncated polynomials in x
    std::vector<std::vector<std::vector<std::uint32_t>>> M(s, std::vector<std::vector<std::uint32_t>>(s));
    for (unsigned i = 0; i < s; ++i)
      for (unsigned j = 0; j < s; ++j) {
        auto& e = M[i][j];
        e.assign(r + 1, 0);
        for (long x = 0; x <= r; ++x) e[x] = F.get(x, U[i], U[j], i == j);
      }
    for (const auto& sigma : perms) {
      std::vector<std::uint64_t> prod(r + 1, 0);
      prod[0] = 1;
      bool zero = false;
      for (unsigned i = 0; i < s && !zero; ++i) {
        const auto& e = M[i][sigma[i]];
        std::vector<std::uint64_t> nx(r + 1, 0);
        for (long a = 0; a <= r; ++a) {
          if (!prod[a]) continue;
          for (long b = 0; a + b <= r; ++b)
            if (e[b]) nx[a + b] = (nx[a + b] + prod[a] * e[b]) % p;
        }
        prod = std::move(nx);
        zero = std::all_of(prod.begin(), prod.end(), [](std::uint64_t x) { return x == 0; });
      }
      if (zero) continue;
      std::uint64_t c = prod[r];
      total = (total + (perm_sign(sigma) == 1 ? c : (p - c) % p)) % p;
    }
  });
  return static_cast<std::uint32_t>(total);
}

}  // namespace

ShiftResult normalize_shift(const LaurentPoly& f) {
  require(f.nvars() == 1 && f.is_polynomial(), Errc::InvalidArgument, "need a univariate polynomial");
  const std::uint32_t p = f.p();
  const int d = f.degree();
  require(d >= 1 && d % static_cast<int>(p) != 0, Errc::InvalidArgument, "degree must be prime to p");
  std::uint32_t lead = 0, sub = 0;
  for (const auto& t : f.terms()) {
    if (t.exp[0] == d) lead = t.coeff;
    if (t.exp[0] == d - 1) sub = t.coeff;
  }
  ShiftResult out;
  out.scale = invmod(lead, p);
  std::vector<std::pair<int, long long>> scaled;
  for (const auto& t : f.terms()) scaled.emplace_back(t.exp[0], std::uint64_t{t.coeff} * out.scale % p);
  LaurentPoly g = LaurentPoly::univariate(p, scaled);
  // b = -a_{d-1} / d after making f monic
  std::uint64_t a1 = std::uint64_t{sub} * out.scale % p;
  out.b = static_cast<std::uint32_t>((p - a1 * invmod(d % p, p) % p) % p);
  out.f = (out.b ? g.shift(out.b) : g).without_constant();
  return out;
}

std::vector<std::vector<std::uint32_t>> enumerate_C(const LaurentPoly& f, long r, long u, long v) {
  Shape sh = shape_of(f);
  std::vector<std::vector<std::uint32_t>> out;
  const long rhs = sh.d * r - u * static_cast<long>(sh.p) + v;
  if (r < 0 || rhs < 0) return out;
  knapsack(sh, r, rhs, [&](const std::vector<long>& k, long) {
    std::vector<std::uint32_t> h(sh.d - 2, 0);
    for (std::size_t i = 0; i < k.size(); ++i) h[sh.deg[i] - 1] = static_cast<std::uint32_t>(k[i]);
    out.push_back(std::move(h));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t F_of(const LaurentPoly& f, long r, long u, long v) {
  Shape sh = shape_of(f);
  FCache F(sh);
  return F.get(r, u, v);
}

std::uint32_t F_r_s(const LaurentPoly& f, long r, unsigned s, std::optional<long> u_sum_bound) {
  Shape sh = shape_of(f);
  FCache F(sh);
  long bound = u_sum_bound ? *u_sum_bound : sh.d * r / (static_cast<long>(sh.p) - 1);
  return F_r_s_impl(sh, F, r, s, bound);
}

SlopeReport lambda_s(const LaurentPoly& f, unsigned s, std::optional<long> r_cap) {
  Shape sh = shape_of(f);
  check_regime(sh);
  require(s >= 1, Errc::InvalidArgument, "s must be positive");
  require((static_cast<long>(s) - 2) * (static_cast<long>(s) - 1) < 2 * sh.d, Errc::RegimeError,
          "need (s - 2)(s - 1) < 2d");
  const long p1 = static_cast<long>(sh.p) - 1;
  // ord bound 1 + (s - 1)/d, in units of 1/(p - 1)
  const Rational limit = Rational(1) + make_rational(static_cast<long>(s) - 1, sh.d);
  const long r_min = static_cast<long>(ceil_of(make_rational(p1 * static_cast<long>(s) * (s - 1), 2 * sh.d)).get_si());
  SlopeReport rep;
  rep.s = s;
  FCache F(sh);
  for (long r = r_min;; ++r) {
    Rational lam = make_rational(r, p1);
    if (lam >= limit) {
      rep.R = r;
      rep.lambda = lam;
      rep.status = SlopeStatus::BoundExceeded;
      return rep;
    }
    if (r_cap && r > *r_cap) {
      rep.R = r;
      rep.lambda = lam;
      rep.status = SlopeStatus::Inconclusive;
      return rep;
    }
    std::uint32_t v = F_r_s_impl(sh, F, r, s, sh.d * r / p1);
    rep.trace.emplace_back(r, v);
    if (v != 0) {
      rep.R = r;
      rep.lambda = lam;
      rep.status = SlopeStatus::Proved;
      return rep;
    }
  }
}

SmallDegreePolygon full_np_small_d(const LaurentPoly& f, const OracleOptions& opt, bool allow_oracle) {
  SmallDegreePolygon out;
  out.normalized = normalize_shift(f);
  const LaurentPoly& g = out.normalized.f;
  const long d = g.degree();
  require(d >= 3 && d <= 6, Errc::RegimeError, "symmetry closes the polygon only for 3 <= d <= 6");
  require(opt.a == 1, Errc::Unsupported, "slopes method works over F_p");
  check_regime(shape_of(g));
  // points (s, ord c_s) of L^* = (1 - T) L and their mirrors under alpha -> 1 - alpha
  std::vector<NPVertex> pts{{Rational(0), Rational(0)}};
  const Rational half_height = make_rational(d - 1, 2);
  bool inconclusive = false;
  const bool monomial = g.terms().size() == 1;
  for (long s = 1; s <= (d + 1) / 2; ++s) {
    auto rep = lambda_s(g, static_cast<unsigned>(s));
    // lambda_s is ord c_s of L_0^*; L^* differs by terms of ord >= 1, so past 1 only ord c_s >= 1 is known,
    // which is on or above the chord for s <= 3
    if (rep.status == SlopeStatus::Proved && (rep.lambda < 1 || monomial)) {
      pts.push_back({Rational(s), rep.lambda});
      pts.push_back({Rational(d + 1 - s), rep.lambda - (s - 1) + half_height});
    } else if (rep.status == SlopeStatus::Inconclusive || (s - 1) * (d - 2) > 2 * d) {
      inconclusive = true;
    }
    // otherwise ord c_s >= 1 + (s - 1)/d puts the point on or above the chord y = (x - 1)/2
    out.reports.push_back(std::move(rep));
  }
  if (inconclusive) {
    require(allow_oracle, Errc::RegimeError, "a slope is inconclusive and the oracle fallback is disabled");
    out.used_oracle = true;
    out.polygon = oracle_newton_polygon(f, std::nullopt, opt).polygon;
    return out;
  }
  NewtonPolygon star = lower_hull(pts);
  std::vector<NPVertex> lv;
  for (const auto& v : star.vertices())
    if (v.x >= 1) lv.push_back({v.x - 1, v.y});
  require(!lv.empty() && lv.front().x == 0 && lv.front().y == 0, Errc::InternalError,
          "L^* polygon does not start with a unit slope-0 segment");
  out.polygon = NewtonPolygon(lv);
  require(out.polygon.width() == d - 1, Errc::InternalError, "polygon has the wrong width");
  return out;
}

}  // namespace lnewton
