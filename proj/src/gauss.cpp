#include "lnewton/gauss.hpp"

#include <algorithm>

#include "lnewton/congruence.hpp"
#include "lnewton/error.hpp"
#include "lnewton/ffield.hpp"

namespace lnewton {

GaussSumTable::GaussSumTable(const LocalRing& L, unsigned s) : L_(L), s_(s) {
  const FieldCtx& F = L.residue_field();
  const unsigned A = L.unramified_degree();
  require(s >= 1 && A % s == 0, Errc::InvalidSubfield, "subfield degree must divide the residue degree");
  qs_ = ipow(L.p(), s);
  const std::uint64_t c = (F.order() - 1) / (qs_ - 1);
  FqElem gamma = F.pow(F.generator(), c);
  tr_.resize(qs_ - 1);
  FqElem y = F.one();
  for (std::uint64_t e = 0; e + 1 < qs_; ++e) {
    FqElem t = F.zero();
    for (unsigned j = 0; j < s; ++j) t = F.add(t, F.frobenius(y, j));
    tr_[e] = static_cast<std::uint8_t>(F.coeffs(t)[0]);
    y = F.mul(y, gamma);
  }
  LocalRing::Elem w = L.pow(L.teichmuller(F.generator()), c);
  gpow_.resize(qs_ - 1);
  gpow_[0] = L.one();
  for (std::uint64_t e = 1; e + 1 < qs_; ++e) gpow_[e] = L.mul(gpow_[e - 1], w);
  zpow_.resize(L.p());
  zpow_[0] = L.one();
  for (std::uint32_t i = 1; i < L.p(); ++i) zpow_[i] = L.mul(zpow_[i - 1], L.zeta());
}

const LocalRing::Elem& GaussSumTable::G(std::uint64_t k) {
  const std::uint64_t N = qs_ - 1;
  k %= N;
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;
  std::vector<LocalRing::Elem> bucket(L_.p(), L_.zero());
  const std::uint64_t step = (N - k) % N;  // exponent of chi(gamma)^{-k}
  std::uint64_t idx = 0;
  for (std::uint64_t e = 0; e < N; ++e) {
    auto& b = bucket[tr_[e]];
    b = L_.add(b, gpow_[idx]);
    idx += step;
    if (idx >= N) idx -= N;
  }
  LocalRing::Elem g = L_.zero();
  for (std::uint32_t c = 0; c < L_.p(); ++c)
    if (!L_.is_zero(bucket[c])) g = L_.add(g, L_.mul(zpow_[c], bucket[c]));
  return cache_.emplace(k, L_.neg(g)).first->second;
}

unsigned digit_sigma(std::uint64_t k, std::uint32_t p) {
  unsigned s = 0;
  for (; k; k /= p) s += static_cast<unsigned>(k % p);
  return s;
}

std::uint32_t padic_gamma_mod_p(std::uint32_t p, const Rational& x) {
  require(padic_val(Integer(x.get_den()), p) == 0, Errc::InvalidArgument, "denominator divisible by p");
  std::uint64_t r = mod_reduce(x, p);
  if (r == 0) return 1;
  std::uint64_t f = 1;
  for (std::uint64_t i = 1; i < r; ++i) f = f * i % p;
  return static_cast<std::uint32_t>(r % 2 ? (p - f) % p : f);
}

CheckReport gross_koblitz_check(std::uint32_t p, unsigned a, long M) {
  CheckReport rep;
  rep.name = "gross-koblitz p=" + std::to_string(p) + " a=" + std::to_string(a);
  const std::uint64_t q = ipow(p, a);
  M = std::max<long>(M, static_cast<long>(a) * (p - 1) + 2);
  LocalRing L(p, a, M);
  GaussSumTable T(L, a);
  const FieldCtx& F = L.residue_field();
  for (std::uint64_t k = 0; k + 1 < q; ++k) {
    ++rep.cases;
    const auto& g = T.G(k);
    const unsigned sigma = digit_sigma(k, p);
    auto v = L.valuation(g);
    if (!v || *v != static_cast<long>(sigma)) {
      rep.failures.push_back("k=" + std::to_string(k) + ": ord " + (v ? std::to_string(*v) : "inf") +
                             " != sigma " + std::to_string(sigma));
      continue;
    }
    std::uint64_t prod = 1;
    std::uint64_t pj = 1;
    for (unsigned j = 0; j < a; ++j) {
      Rational x(Integer(pj * k % (q - 1)), Integer(q - 1));
      prod = prod * padic_gamma_mod_p(p, x) % p;
      pj *= p;
    }
    if (L.unit_residue(g, sigma) != F.from_int(static_cast<long long>(prod)))
      rep.failures.push_back("k=" + std::to_string(k) + ": unit part mismatch");
  }
  return rep;
}

CheckReport hasse_davenport_check(std::uint32_t p, unsigned a, unsigned d, unsigned k, long M) {
  CheckReport rep;
  rep.name = "hasse-davenport p=" + std::to_string(p) + " a=" + std::to_string(a) + " d=" + std::to_string(d) +
             " k=" + std::to_string(k);
  LocalRing L(p, a * d * k, M);
  GaussSumTable small(L, a * d), big(L, a * d * k);
  const std::uint64_t n1 = small.field_order() - 1, n2 = big.field_order() - 1;
  for (std::uint64_t j = 0; j < n1; ++j) {
    ++rep.cases;
    if (!L.equal_mod(big.G(j * (n2 / n1)), L.pow(small.G(j), k), M))
      rep.failures.push_back("r=" + std::to_string(j) + "/" + std::to_string(n1));
  }
  return rep;
}

CheckReport interpolation_check(std::uint32_t p, unsigned a, long M) {
  CheckReport rep;
  rep.name = "interpolation p=" + std::to_string(p) + " a=" + std::to_string(a);
  LocalRing L(p, a, M);
  GaussSumTable T(L, a);
  const FieldCtx& F = L.residue_field();
  const std::uint64_t q = F.order();
  auto scale = L.from_rational(make_rational(1, 1 - static_cast<long>(q)));
  FqElem x = F.one();
  for (std::uint64_t e = 0; e + 1 < q; ++e) {
    ++rep.cases;
    LocalRing::Elem s = L.zero();
    for (std::uint64_t k = 0; k + 1 < q; ++k)
      s = L.add(s, L.mul(T.G(k), T.chi_generator_power(e * k % (q - 1))));
    s = L.mul(s, scale);
    if (!L.equal_mod(s, L.pow(L.zeta(), F.abs_trace(x)), M))
      rep.failures.push_back("a=g^" + std::to_string(e));
    x = F.mul(x, F.generator());
  }
  return rep;
}

namespace {

std::vector<std::uint64_t> coefficient_logs(const LaurentPoly& f, const FieldCtx& F) {
  std::vector<std::uint64_t> out;
  for (const auto& t : f.terms()) {
    if (std::all_of(t.exp.begin(), t.exp.end(), [](int e) { return e == 0; })) continue;
    out.push_back(F.log_of_prime_field(t.coeff));
  }
  return out;
}

// prod_i chi(a_i)^{k_i} G_{k_i} in the ring of T
LocalRing::Elem orbit_value(const LocalRing& L, GaussSumTable& T, const std::vector<std::uint64_t>& logs,
                            std::span<const std::uint64_t> k) {
  const std::uint64_t N = T.field_order() - 1;
  LocalRing::Elem x = L.one();
  for (std::size_t i = 0; i < logs.size(); ++i) {
    std::uint64_t e = static_cast<std::uint64_t>(static_cast<unsigned __int128>(logs[i]) * k[i] % N);
    x = L.mul(x, L.mul(T.chi_generator_power(e), T.G(k[i])));
  }
  return x;
}

}  // namespace

LocalValue exp_sum_via_gauss(const LaurentPoly& f, unsigned k, unsigned a, long M) {
  const unsigned n = f.nvars();
  IntMatrix V = exponent_matrix(f);
  const std::size_t m = V[0].size();
  require(m >= 1, Errc::InvalidArgument, "f has no nonconstant terms");
  LocalValue out{LocalRing(f.p(), a * k, M), {}};
  const LocalRing& L = out.ring;
  GaussSumTable T(L, a * k);
  auto logs = coefficient_logs(f, L.residue_field());
  const std::uint64_t q = ipow(f.p(), a);
  SolutionSet H = enumerate_H(V, q, k);
  LocalRing::Elem s = L.zero();
  for (std::size_t i = 0; i < H.size(); ++i) s = L.add(s, orbit_value(L, T, logs, H[i]));
  const long long Q = static_cast<long long>(T.field_order());
  if (m >= n)
    s = L.mul(s, L.pow(L.from_rational(make_rational(1, 1 - Q)), m - n));
  else
    s = L.mul(s, L.pow(L.from_int(1 - Q), n - m));
  if (n % 2) s = L.neg(s);
  const std::uint64_t c0 = f.constant_term();
  s = L.mul(s, L.pow(L.zeta(), static_cast<std::uint64_t>(a) * k * c0 % f.p()));
  out.value = std::move(s);
  return out;
}

LocalSeries theorem_product(const LaurentPoly& f, unsigned D, unsigned d_max, unsigned h_max, long M,
                            long val_cutoff) {
  const std::uint32_t p = f.p();
  const unsigned n = f.nvars();
  IntMatrix V = exponent_matrix(f);
  const std::size_t m = V[0].size();
  require(m >= n, Errc::InvalidArgument, "need at least n nonconstant terms");
  require(d_max >= D, Errc::InsufficientTruncation, "levels above d_max affect coefficients up to D");
  LocalSeries out{LocalRing(p, 1, M), {}};
  const LocalRing& B = out.ring;
  require(val_cutoff <= B.precision(), Errc::PrecisionExhausted, "cutoff beyond working precision");
  if (m > n)
    require(static_cast<long>(p - 1) * (h_max + 1) >= val_cutoff, Errc::InsufficientTruncation,
            "omitted h-factors reach below the cutoff");
  std::vector<LocalRing::Elem> c(D + 1, B.zero());
  c[0] = B.one();
  for (unsigned d = 1; d <= D; ++d) {
    SolutionSet S = sp_qd(V, p, d);
    if (S.size() == 0) continue;
    LocalRing Ld(p, d, M);
    GaussSumTable T(Ld, d);
    auto logs = coefficient_logs(f, Ld.residue_field());
    for (const Orbit& o : orbit_decompose(S, p)) {
      LocalRing::Elem X = Ld.to_ring(orbit_value(Ld, T, logs, o.rep), B);
      for (unsigned h = 0; h <= (m > n ? h_max : 0); ++h) {
        Integer E = 1;
        if (m > n) mpz_bin_uiui(E.get_mpz_t(), h + m - n - 1, m - n - 1);
        // y = -p^{dh} X; multiply by sum_j C(E, j) y^j T^{dj}
        LocalRing::Elem y = B.neg(B.mul(B.pow(B.from_int(p), static_cast<std::uint64_t>(d) * h), X));
        if (B.is_zero(y)) continue;
        std::vector<LocalRing::Elem> fac(D / d + 1);
        LocalRing::Elem yj = B.one();
        Integer binom = 1;
        for (unsigned j = 0; j <= D / d; ++j) {
          fac[j] = B.mul(yj, B.from_integer(binom));
          yj = B.mul(yj, y);
          binom = binom * (E - j) / (j + 1);
        }
        for (unsigned s = D + 1; s-- > 0;)
          for (unsigned j = 1; j * d <= s; ++j) c[s] = B.add(c[s], B.mul(c[s - j * d], fac[j]));
      }
    }
  }
  const std::uint32_t c0 = f.constant_term();
  if (c0) {
    LocalRing::Elem z = B.pow(B.zeta(), c0), zs = B.one();
    for (unsigned s = 0; s <= D; ++s) {
      c[s] = B.mul(c[s], zs);
      zs = B.mul(zs, z);
    }
  }
  out.coeffs = std::move(c);
  return out;
}

LocalSeries wan_diagonal_lfunction(const LaurentPoly& f, unsigned D, long M) {
  IntMatrix V = exponent_matrix(f);
  const unsigned n = f.nvars();
  bool diagonal = V[0].size() == n;
  if (diagonal) {
    auto sf = smith_form(V);
    diagonal = sf.diagonal.size() == n;
  }
  require(diagonal, Errc::NotDiagonal, "f must have n nonconstant terms spanning an n-dimensional polytope");
  return theorem_product(f, D, D, 0, M, M);
}

bool series_match(const LocalSeries& s, const CycSeries& oracle, std::size_t upto, long M) {
  require(upto < s.coeffs.size() && upto <= oracle.degree_cap(), Errc::InvalidArgument, "series too short");
  for (std::size_t i = 0; i <= upto; ++i)
    if (!s.ring.equal_mod(s.coeffs[i], s.ring.embed(oracle[i]), M)) return false;
  return true;
}

}  // namespace lnewton
