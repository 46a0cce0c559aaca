#include "lnewton/oracle.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "lnewton/error.hpp"
#include "lnewton/ffield.hpp"
#include "lnewton/nondegeneracy.hpp"

namespace lnewton {

namespace {

constexpr std::uint64_t kHuge = std::numeric_limits<std::uint64_t>::max();

std::uint64_t field_order(std::uint32_t p, unsigned K) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < K; ++i) {
    if (q > FieldCtx::kDefaultMaxOrder / p) return kHuge;
    q *= p;
  }
  return q;
}

struct LogTerm {
  std::uint64_t log;
  std::uint64_t step;
};

struct Enumerator {
  FieldCtx F;
  std::vector<std::uint8_t> T;
  std::uint64_t N;
  unsigned K;
  unsigned threads;

  Enumerator(std::uint32_t p, unsigned K_, unsigned threads_)
      : F(p, K_), T(F.trace_table(threads_)), N(F.order() - 1), K(K_), threads(threads_) {}

  std::uint64_t norm_exp(long long e) const {
    long long n = static_cast<long long>(N);
    long long r = e % n;
    return static_cast<std::uint64_t>(r < 0 ? r + n : r);
  }

  /// Trace of a constant c in F_p viewed in F_{p^K}.
  std::uint32_t const_trace(std::uint32_t c) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) * K) % F.p());
  }

  /// Splits a univariate Laurent polynomial into logs and steps plus the constant trace.
  std::pair<std::vector<LogTerm>, std::uint32_t> prepare(const std::vector<std::pair<long long, std::uint32_t>>& terms) const {
    std::vector<LogTerm> lt;
    std::uint32_t c0 = 0;
    for (auto [e, c] : terms) {
      if (c % F.p() == 0) continue;
      if (e == 0) {
        c0 = (c0 + const_trace(c)) % F.p();
        continue;
      }
      lt.push_back({F.log_of_prime_field(c), norm_exp(e)});
    }
    return {lt, c0};
  }

  void accumulate(const std::vector<LogTerm>& terms, std::uint32_t c0, std::uint64_t start, std::uint64_t stop,
                  std::vector<std::int64_t>& hist) const {
    const std::uint32_t p = F.p();
    const std::size_t m = terms.size();
    std::vector<std::uint32_t> modtab(c0 + (m + 1) * p + 1);
    for (std::size_t i = 0; i < modtab.size(); ++i) modtab[i] = static_cast<std::uint32_t>(i % p);
    std::vector<std::uint64_t> idx(m), step(m);
    for (std::size_t j = 0; j < m; ++j) {
      idx[j] = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(terms[j].step) * start + terms[j].log) % N);
      step[j] = terms[j].step;
    }
    const std::uint8_t* t = T.data();
    const std::uint64_t n = N;
    if (m == 1) {
      std::uint64_t i0 = idx[0], s0 = step[0];
      for (std::uint64_t e = start; e < stop; ++e) {
        ++hist[modtab[c0 + t[i0]]];
        i0 += s0;
        if (i0 >= n) i0 -= n;
      }
      return;
    }
    if (m == 2) {
      std::uint64_t i0 = idx[0], s0 = step[0], i1 = idx[1], s1 = step[1];
      for (std::uint64_t e = start; e < stop; ++e) {
        ++hist[modtab[c0 + t[i0] + t[i1]]];
        i0 += s0;
        if (i0 >= n) i0 -= n;
        i1 += s1;
        if (i1 >= n) i1 -= n;
      }
      return;
    }
    for (std::uint64_t e = start; e < stop; ++e) {
      std::uint32_t acc = c0;
      for (std::size_t j = 0; j < m; ++j) {
        acc += t[idx[j]];
        idx[j] += step[j];
        if (idx[j] >= n) idx[j] -= n;
      }
      ++hist[modtab[acc]];
    }
  }

  /// Histogram of Tr g(x) over x in F^* for univariate g.
  std::vector<std::int64_t> torus_hist(const std::vector<std::pair<long long, std::uint32_t>>& terms) const {
    auto [lt, c0] = prepare(terms);
    const std::uint32_t p = F.p();
    std::vector<std::int64_t> hist(p, 0);
    if (threads <= 1 || N < (1u << 16)) {
      accumulate(lt, c0, 0, N, hist);
      return hist;
    }
    std::vector<std::vector<std::int64_t>> parts(threads, std::vector<std::int64_t>(p, 0));
    std::vector<std::thread> pool;
    std::uint64_t chunk = (N + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        accumulate(lt, c0, t * chunk, std::min(N, (t + 1) * chunk), parts[t]);
      });
    for (auto& th : pool) th.join();
    for (const auto& part : parts)
      for (std::uint32_t c = 0; c < p; ++c) hist[c] += part[c];
    return hist;
  }

  /// Histogram of Tr f(x, y) over the two-dimensional torus by direct enumeration.
  std::vector<std::int64_t> torus_hist_2var(const LaurentPoly& f) const {
    const std::uint32_t p = F.p();
    std::vector<LogTerm> base;
    std::vector<std::uint64_t> xstep;
    std::uint32_t c0 = 0;
    for (const auto& t : f.terms()) {
      if (t.exp[0] == 0 && t.exp[1] == 0) {
        c0 = (c0 + const_trace(t.coeff)) % p;
        continue;
      }
      base.push_back({F.log_of_prime_field(t.coeff), norm_exp(t.exp[1])});
      xstep.push_back(norm_exp(t.exp[0]));
    }
    std::vector<std::int64_t> hist(p, 0);
    auto run = [&](std::uint64_t i0, std::uint64_t i1, std::vector<std::int64_t>& h) {
      std::vector<LogTerm> cur = base;
      for (std::uint64_t i = i0; i < i1; ++i) {
        for (std::size_t j = 0; j < base.size(); ++j)
          cur[j].log = static_cast<std::uint64_t>(
              (static_cast<unsigned __int128>(xstep[j]) * i + base[j].log) % N);
        accumulate(cur, c0, 0, N, h);
      }
    };
    if (threads <= 1) {
      run(0, N, hist);
      return hist;
    }
    std::vector<std::vector<std::int64_t>> parts(threads, std::vector<std::int64_t>(p, 0));
    std::vector<std::thread> pool;
    std::uint64_t chunk = (N + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] { run(t * chunk, std::min(N, (t + 1) * chunk), parts[t]); });
    for (auto& th : pool) th.join();
    for (const auto& part : parts)
      for (std::uint32_t c = 0; c < p; ++c) hist[c] += part[c];
    return hist;
  }
};

std::vector<std::pair<long long, std::uint32_t>> univariate_terms(const LaurentPoly& f) {
  std::vector<std::pair<long long, std::uint32_t>> out;
  for (const auto& t : f.terms()) out.push_back({t.exp[0], t.coeff});
  return out;
}

std::uint32_t inv_mod_p(std::uint64_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

bool use_reduced(const LaurentPoly& f, unsigned k, const OracleOptions& opt) {
  if (f.nvars() != 2) return false;
  bool ok = quadratic_fiber_applicable(f);
  if (opt.fiber == FiberMode::Reduced) {
    require(ok, Errc::Unsupported, "quadratic fiber reduction does not apply to " + f.to_string());
    return true;
  }
  if (opt.fiber == FiberMode::Naive || !ok) return false;
  std::uint64_t Q = field_order(f.p(), opt.a * k);
  if (Q == kHuge) return true;
  unsigned __int128 naive = static_cast<unsigned __int128>(Q - 1) * (Q - 1);
  return naive > opt.budget;
}

CycNum star_sum(const Enumerator& E, const LaurentPoly& f, bool reduced) {
  const std::uint32_t p = f.p();
  if (f.nvars() == 1) return CycNum::from_counts(p, E.torus_hist(univariate_terms(f)));
  if (!reduced) return CycNum::from_counts(p, E.torus_hist_2var(f));
  // f = A(x) + B(x) y + c y^2
  std::vector<std::pair<long long, std::uint32_t>> A, B;
  std::uint32_t c = 0;
  for (const auto& t : f.terms()) {
    if (t.exp[1] == 0) A.push_back({t.exp[0], t.coeff});
    if (t.exp[1] == 1) B.push_back({t.exp[0], t.coeff});
    if (t.exp[1] == 2) c = t.coeff;
  }
  // R = A - B^2 / (4c)
  std::uint32_t inv4c = inv_mod_p(4ull * c % p, p);
  std::vector<std::pair<std::vector<int>, long long>> R;
  for (auto [e, a] : A) R.push_back({{static_cast<int>(e)}, a});
  for (auto [e1, b1] : B)
    for (auto [e2, b2] : B) {
      long long v = static_cast<long long>(static_cast<std::uint64_t>(b1) * b2 % p * inv4c % p);
      R.push_back({{static_cast<int>(e1 + e2)}, -v});
    }
  LaurentPoly Rp(p, 1, R);
  CycNum H1 = CycNum::from_counts(p, E.torus_hist(univariate_terms(Rp)));
  CycNum H2 = CycNum::from_counts(p, E.torus_hist(A));
  auto hq = E.torus_hist({{2, c}});
  hq[0] += 1;  // y = 0
  CycNum G2 = CycNum::from_counts(p, hq);
  return G2 * H1 - H2;
}

LaurentPoly restrict_to_zero(const LaurentPoly& f, unsigned zero_var) {
  std::vector<std::pair<std::vector<int>, long long>> out;
  for (const auto& t : f.terms()) {
    require(t.exp[zero_var] >= 0, Errc::InvalidArgument,
            "negative exponent in a coordinate set to zero");
    if (t.exp[zero_var] > 0) continue;
    std::vector<int> e;
    for (unsigned i = 0; i < f.nvars(); ++i)
      if (i != zero_var) e.push_back(t.exp[i]);
    out.push_back({e, t.coeff});
  }
  return LaurentPoly(f.p(), f.nvars() - 1, out);
}

}  // namespace

bool quadratic_fiber_applicable(const LaurentPoly& f) {
  if (f.nvars() != 2 || f.p() == 2) return false;
  int squares = 0;
  for (const auto& t : f.terms()) {
    if (t.exp[1] < 0 || t.exp[1] > 2) return false;
    if (t.exp[1] == 2) {
      if (t.exp[0] != 0) return false;
      ++squares;
    }
  }
  return squares == 1;
}

std::uint64_t enumeration_cost(const LaurentPoly& f, unsigned k, const OracleOptions& opt) {
  std::uint64_t Q = field_order(f.p(), opt.a * k);
  if (Q == kHuge) return kHuge;
  if (f.nvars() == 1) return Q - 1;
  require(f.nvars() == 2, Errc::Unsupported, "oracle supports n <= 2");
  if (use_reduced(f, k, opt)) return 4 * (Q - 1);
  unsigned __int128 c = static_cast<unsigned __int128>(Q - 1) * (Q - 1);
  return c > kHuge ? kHuge : static_cast<std::uint64_t>(c);
}

CycNum exp_sum_star(const LaurentPoly& f, unsigned k, const OracleOptions& opt) {
  require(k >= 1, Errc::InvalidArgument, "k must be positive");
  require(f.nvars() <= 2, Errc::Unsupported, "oracle supports n <= 2");
  require(f.p() < 256, Errc::Unsupported, "oracle needs p < 256");
  std::uint64_t cost = enumeration_cost(f, k, opt);
  require(cost <= opt.budget, Errc::SizeExceeded,
          "S_" + std::to_string(k) + " needs " + (cost == kHuge ? std::string("too many") : std::to_string(cost)) +
              " points, budget " + std::to_string(opt.budget));
  Enumerator E(f.p(), opt.a * k, opt.threads);
  return star_sum(E, f, use_reduced(f, k, opt));
}

CycNum exp_sum_full(const LaurentPoly& f, unsigned k, const OracleOptions& opt) {
  require(f.nvars() <= 2, Errc::Unsupported, "oracle supports n <= 2");
  std::uint64_t cost = enumeration_cost(f, k, opt);
  require(cost <= opt.budget, Errc::SizeExceeded, "full sum exceeds budget");
  const std::uint32_t p = f.p();
  const unsigned K = opt.a * k;
  Enumerator E(p, K, opt.threads);
  CycNum total = star_sum(E, f, use_reduced(f, k, opt));
  auto origin_value = [&](const LaurentPoly& g) {
    return CycNum::zeta_power(p, static_cast<long long>(g.constant_term()) * K);
  };
  if (f.nvars() == 1) {
    require(f.is_polynomial(), Errc::InvalidArgument, "full sum needs nonnegative exponents");
    return total + origin_value(f);
  }
  for (unsigned z = 0; z < 2; ++z) {
    LaurentPoly g = restrict_to_zero(f, z);
    total += star_sum(E, g, false);
  }
  require(f.is_polynomial(), Errc::InvalidArgument, "full sum needs nonnegative exponents");
  return total + origin_value(f);
}

bool believed_nondegenerate(const LaurentPoly& f) {
  if (f.empty()) return false;
  if (f.nvars() <= 2) {
    std::uint64_t pts = f.nvars() == 1 ? f.p() : std::uint64_t{f.p()} * f.p();
    if (pts > 50'000'000) return true;
    return !degeneracy_witness_search(f, 1).has_value();
  }
  return true;
}

unsigned default_degree_cap(const LaurentPoly& f, const OracleOptions& opt, bool affine) {
  long bound = affine ? f.degree() - 1 : f.normalized_volume();
  bound = std::max<long>(bound, 1);
  unsigned D = static_cast<unsigned>(bound + 2);
  while (static_cast<long>(D) > bound && enumeration_cost(f, D, opt) > opt.budget) --D;
  require(enumeration_cost(f, D, opt) <= opt.budget, Errc::SizeExceeded,
          "degree bound " + std::to_string(bound) + " needs more points than the budget allows");
  return D;
}

LFunctionResult lfunction_star(const LaurentPoly& f, std::optional<unsigned> D, const OracleOptions& opt) {
  require(!f.empty(), Errc::EmptyInput, "zero polynomial");
  unsigned cap = D ? *D : default_degree_cap(f, opt, false);
  const std::uint32_t p = f.p();
  std::vector<CycNum> S(cap + 1, CycNum(p));
  for (unsigned k = 1; k <= cap; ++k) S[k] = exp_sum_star(f, k, opt);
  LFunctionResult r;
  r.series = series_exp_power_sums(S, cap);
  if (f.nvars() % 2 == 0) r.series = r.series.inverse();
  r.degree_bound = f.normalized_volume();
  r.checked_beyond_bound = static_cast<long>(cap) > r.degree_bound;
  for (std::size_t j = r.degree_bound + 1; j <= cap; ++j)
    if (!r.series[j].is_zero()) r.vanishing_violations.push_back(j);
  if (!r.vanishing_violations.empty() && believed_nondegenerate(f))
    fail(Errc::DegreeAnomaly, "L* of " + f.to_string() + " has a nonzero coefficient beyond degree " +
                                  std::to_string(r.degree_bound));
  return r;
}

LFunctionResult lfunction_affine(const LaurentPoly& f, std::optional<unsigned> D, const OracleOptions& opt) {
  require(f.nvars() == 1 && f.is_polynomial(), Errc::Unsupported, "L(f, T) needs a univariate polynomial");
  require(f.degree() >= 1, Errc::InvalidArgument, "degree must be positive");
  unsigned cap = D ? *D : default_degree_cap(f, opt, true);
  const std::uint32_t p = f.p();
  std::vector<CycNum> S(cap + 1, CycNum(p));
  for (unsigned k = 1; k <= cap; ++k) S[k] = exp_sum_full(f, k, opt);
  LFunctionResult r;
  r.series = series_exp_power_sums(S, cap);
  r.degree_bound = f.degree() - 1;
  r.checked_beyond_bound = static_cast<long>(cap) > r.degree_bound;
  for (std::size_t j = r.degree_bound + 1; j <= cap; ++j)
    if (!r.series[j].is_zero()) r.vanishing_violations.push_back(j);
  if (!r.vanishing_violations.empty() && is_nondegenerate_1var(f))
    fail(Errc::DegreeAnomaly, "L of " + f.to_string() + " has a nonzero coefficient beyond degree " +
                                  std::to_string(r.degree_bound));
  return r;
}

CycSeries l0_star(const LaurentPoly& f, unsigned D, const OracleOptions& opt) {
  const std::uint32_t p = f.p();
  long m = 0;
  for (const auto& t : f.terms())
    if (std::any_of(t.exp.begin(), t.exp.end(), [](int e) { return e != 0; })) ++m;
  long j = m - static_cast<long>(f.nvars());
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, opt.a);
  std::vector<CycNum> S(D + 1, CycNum(p));
  Integer qk = 1;
  for (unsigned k = 1; k <= D; ++k) {
    qk *= q;
    Integer base = 1 - qk, powv = 1;
    for (long i = 0; i < std::abs(j); ++i) powv *= base;
    Rational factor = j >= 0 ? Rational(powv) : Rational(Integer(1), powv);
    factor.canonicalize();
    S[k] = exp_sum_star(f, k, opt) * factor;
  }
  CycSeries L = series_exp_power_sums(S, D);
  if (f.nvars() % 2 == 0) L = L.inverse();
  return L;
}

CycSeries l0_star_from_lstar(const CycSeries& lstar_signed, long m_minus_n, const Integer& q) {
  require(m_minus_n >= 0, Errc::Unsupported, "product identity needs m >= n");
  CycSeries out = CycSeries::one(lstar_signed.p(), lstar_signed.degree_cap());
  Integer binom = 1, qi = 1;
  for (long i = 0; i <= m_minus_n; ++i) {
    long e = binom.get_si() * (i % 2 ? -1 : 1);
    out = out * lstar_signed.scale(Rational(qi)).pow(e);
    binom = binom * (m_minus_n - i) / (i + 1);
    qi *= q;
  }
  return out;
}

CycSeries strip_trivial_factor(const CycSeries& poly, std::size_t degree) {
  require(degree >= 1 && degree <= poly.degree_cap(), Errc::InvalidArgument, "degree outside the series");
  for (std::size_t i = degree + 1; i <= poly.degree_cap(); ++i)
    require(poly[i].is_zero(), Errc::NotDivisible, "coefficients beyond the stated degree");
  CycSeries out(poly.p(), poly.degree_cap() - 1);
  CycNum acc(poly.p());
  for (std::size_t i = 0; i < degree; ++i) {
    acc += poly[i];
    out[i] = acc;
  }
  acc += poly[degree];
  require(acc.is_zero(), Errc::NotDivisible, "polynomial does not vanish at T = 1");
  return out;
}

std::vector<std::optional<Rational>> coefficient_ords(const CycSeries& s, std::size_t upto) {
  require(upto <= s.degree_cap(), Errc::InvalidArgument, "series truncated below requested degree");
  std::vector<std::optional<Rational>> out;
  for (std::size_t i = 0; i <= upto; ++i) {
    if (s[i].is_zero())
      out.push_back(std::nullopt);
    else
      out.push_back(ord_p(s[i]));
  }
  return out;
}

OraclePolygon oracle_newton_polygon(const LaurentPoly& f, std::optional<unsigned> D, const OracleOptions& opt) {
  OraclePolygon r;
  r.affine = f.nvars() == 1 && f.is_polynomial();
  r.lfunction = r.affine ? lfunction_affine(f, D, opt) : lfunction_star(f, D, opt);
  std::size_t upto = std::min<std::size_t>(r.lfunction.degree_bound, r.lfunction.series.degree_cap());
  r.polygon = newton_polygon(coefficient_ords(r.lfunction.series, upto)).scaled(Rational(1, opt.a));
  return r;
}

}  // namespace lnewton
