#include "lnewton/congruence.hpp"

#include <algorithm>
#include <numeric>

#include "lnewton/error.hpp"
#include "lnewton/ffield.hpp"

namespace lnewton {

namespace {

std::uint64_t level_modulus(std::uint64_t q, unsigned d) {
  require(q >= 2 && d >= 1, Errc::InvalidArgument, "need q >= 2 and d >= 1");
  unsigned __int128 Q = 1;
  for (unsigned i = 0; i < d; ++i) {
    Q *= q;
    require(Q <= (static_cast<unsigned __int128>(1) << 62), Errc::SizeExceeded, "q^d too large");
  }
  return static_cast<std::uint64_t>(Q) - 1;
}

bool lex_less(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<unsigned> divisors(unsigned d) {
  std::vector<unsigned> out;
  for (unsigned e = 1; e <= d; ++e)
    if (d % e == 0) out.push_back(e);
  return out;
}

}  // namespace

IntMatrix exponent_matrix(const LaurentPoly& f) {
  const unsigned n = f.nvars();
  IntMatrix V(n);
  for (const auto& t : f.terms()) {
    if (std::all_of(t.exp.begin(), t.exp.end(), [](int e) { return e == 0; })) continue;
    for (unsigned i = 0; i < n; ++i) V[i].push_back(t.exp[i]);
  }
  return V;
}

std::size_t SolutionSet::find(std::span<const std::uint64_t> k) const {
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (lex_less((*this)[mid], k))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && std::equal(k.begin(), k.end(), (*this)[lo].begin())) return lo;
  return size();
}

void SolutionSet::sort() {
  std::vector<std::size_t> idx(size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [this](std::size_t a, std::size_t b) { return lex_less((*this)[a], (*this)[b]); });
  std::vector<std::uint64_t> out;
  out.reserve(flat_.size());
  for (std::size_t i : idx) {
    auto v = (*this)[i];
    out.insert(out.end(), v.begin(), v.end());
  }
  flat_ = std::move(out);
}

SmithForm smith_form(const IntMatrix& V) {
  const std::size_t n = V.size();
  require(n >= 1, Errc::InvalidArgument, "empty matrix");
  const std::size_t m = V[0].size();
  IntMatrix A = V;
  IntMatrix W(m, std::vector<long long>(m, 0));
  for (std::size_t i = 0; i < m; ++i) W[i][i] = 1;
  auto col_op = [&](std::size_t dst, std::size_t src, long long c) {  // col_dst -= c col_src
    for (std::size_t i = 0; i < n; ++i) A[i][dst] -= c * A[i][src];
    for (std::size_t i = 0; i < m; ++i) W[i][dst] -= c * W[i][src];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n; ++i) std::swap(A[i][a], A[i][b]);
    for (std::size_t i = 0; i < m; ++i) std::swap(W[i][a], W[i][b]);
  };
  SmithForm out;
  for (std::size_t t = 0; t < std::min(n, m); ++t) {
    for (;;) {
      std::size_t bi = n, bj = m;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < m; ++j)
          if (A[i][j] != 0 && (bi == n || std::llabs(A[i][j]) < std::llabs(A[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == n) {
        out.W = W;
        return out;
      }
      std::swap(A[t], A[bi]);
      col_swap(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        long long c = A[i][t] / A[t][t];
        for (std::size_t j = t; j < m; ++j) A[i][j] -= c * A[t][j];
        if (A[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        col_op(j, t, A[t][j] / A[t][t]);
        if (A[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < m; ++j)
          if (A[i][j] % A[t][t] != 0) {
            for (std::size_t jj = t; jj < m; ++jj) A[t][jj] += A[i][jj];
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.diagonal.push_back(std::llabs(A[t][t]));
  }
  out.W = W;
  return out;
}

std::uint64_t count_H(const IntMatrix& V, std::uint64_t q, unsigned d) {
  const std::uint64_t N = level_modulus(q, d);
  auto sf = smith_form(V);
  const std::size_t m = V[0].size();
  unsigned __int128 c = 1;
  for (long long di : sf.diagonal) c *= std::gcd(static_cast<std::uint64_t>(di), N);
  for (std::size_t i = sf.diagonal.size(); i < m; ++i) c *= N;
  if (c > (static_cast<unsigned __int128>(1) << 63)) return std::uint64_t{1} << 63;
  return static_cast<std::uint64_t>(c);
}

SolutionSet enumerate_H(const IntMatrix& V, std::uint64_t q, unsigned d, std::uint64_t budget) {
  const std::uint64_t N = level_modulus(q, d);
  const std::size_t m = V[0].size();
  std::uint64_t total = count_H(V, q, d);
  require(total <= budget, Errc::SizeExceeded,
          "H(q, d) has " + std::to_string(total) + " elements, budget " + std::to_string(budget));
  auto sf = smith_form(V);
  const std::size_t r = sf.diagonal.size();
  // y_i ranges over multiples of N / gcd(d_i, N) for i < r and over [0, N) otherwise
  std::vector<std::uint64_t> step(m, 1), count(m, N);
  for (std::size_t i = 0; i < r; ++i) {
    std::uint64_t g = std::gcd(static_cast<std::uint64_t>(sf.diagonal[i]), N);
    step[i] = N / g;
    count[i] = g;
  }
  std::vector<std::vector<std::uint64_t>> Wm(m, std::vector<std::uint64_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      long long w = sf.W[i][j] % static_cast<long long>(N);
      Wm[i][j] = static_cast<std::uint64_t>(w < 0 ? w + static_cast<long long>(N) : w);
    }
  SolutionSet out(static_cast<unsigned>(m), N);
  std::vector<std::uint64_t> t(m, 0), k(m);
  for (std::uint64_t it = 0; it < total; ++it) {
    for (std::size_t i = 0; i < m; ++i) {
      unsigned __int128 acc = 0;
      for (std::size_t j = 0; j < m; ++j) acc += static_cast<unsigned __int128>(Wm[i][j]) * (t[j] * step[j] % N);
      k[i] = static_cast<std::uint64_t>(acc % N);
    }
    out.push_back(k);
    for (std::size_t j = 0; j < m; ++j) {
      if (++t[j] < count[j]) break;
      t[j] = 0;
    }
  }
  out.sort();
  return out;
}

unsigned exact_period(std::span<const std::uint64_t> k, std::uint64_t N, std::uint64_t q, unsigned d) {
  for (unsigned e : divisors(d)) {
    std::uint64_t Ne = level_modulus(q, e);
    std::uint64_t f = N / Ne;
    if (std::all_of(k.begin(), k.end(), [f](std::uint64_t v) { return v % f == 0; })) return e;
  }
  return d;
}

SolutionSet sp_qd(const IntMatrix& V, std::uint64_t q, unsigned d, std::uint64_t budget) {
  SolutionSet H = enumerate_H(V, q, d, budget);
  SolutionSet out(H.width(), H.denominator());
  for (std::size_t i = 0; i < H.size(); ++i)
    if (exact_period(H[i], H.denominator(), q, d) == d) out.push_back(H[i]);
  return out;  // already sorted
}

std::vector<Orbit> orbit_decompose(const SolutionSet& S, std::uint64_t q) {
  const std::uint64_t N = S.denominator();
  const unsigned m = S.width();
  std::vector<char> seen(S.size(), 0);
  std::vector<Orbit> out;
  std::vector<std::uint64_t> cur(m);
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (seen[i]) continue;
    Orbit o;
    o.rep.assign(S[i].begin(), S[i].end());
    std::size_t j = i;
    unsigned len = 0;
    do {
      seen[j] = 1;
      ++len;
      auto v = S[j];
      for (unsigned t = 0; t < m; ++t)
        cur[t] = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v[t]) * q % N);
      j = S.find(cur);
      require(j != S.size(), Errc::NotClosed, "solution set is not closed under multiplication by q");
    } while (j != i);
    o.level = len;
    out.push_back(std::move(o));
  }
  return out;
}

int mobius(std::uint64_t n) {
  int mu = 1;
  for (auto [pr, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

CountCheck count_check(const IntMatrix& V, std::uint64_t q, unsigned d) {
  CountCheck c;
  c.actual = sp_qd(V, q, d).size();
  long long mob = 0, cyc = 0;
  c.cyclic_applicable = true;
  for (unsigned e : divisors(d)) {
    int mu = mobius(d / e);
    std::uint64_t h = count_H(V, q, e);
    std::uint64_t full = level_modulus(q, e);
    mob += mu * static_cast<long long>(h);
    cyc += mu * static_cast<long long>(full);
    if (h != full) c.cyclic_applicable = false;
  }
  c.mobius = static_cast<std::uint64_t>(mob);
  c.cyclic = static_cast<std::uint64_t>(cyc);
  return c;
}

unsigned period_of(const std::vector<Rational>& r, std::uint64_t q) {
  Integer L = 1;
  for (const auto& x : r) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.get_den_mpz_t());
  require(L.fits_ulong_p(), Errc::SizeExceeded, "denominator too large");
  std::uint64_t l = L.get_ui();
  require(std::gcd(l, q) == 1, Errc::InvalidArgument, "denominators must be prime to q");
  return static_cast<unsigned>(multiplicative_order(q, l));
}

}  // namespace lnewton
