#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lnewton/congruence.hpp"
#include "lnewton/digits.hpp"
#include "lnewton/error.hpp"
#include "lnewton/ffield.hpp"
#include "lnewton/newton_polygon.hpp"
#include "lnewton/oracle.hpp"
#include "lnewton/permutations.hpp"
#include "lnewton/slopes.hpp"
#include "lnewton/tables.hpp"

namespace props {

using namespace lnewton;

struct Tally {
  std::map<std::string, std::uint64_t> checks;
  std::map<std::string, std::uint64_t> violations;
  std::vector<std::string> messages;
  unsigned instances = 0;

  void check(const std::string& name, bool ok, const std::string& what = "") {
    ++checks[name];
    if (!ok) {
      ++violations[name];
      if (messages.size() < 50) messages.push_back(name + ": " + what);
    }
  }
  std::uint64_t total_violations() const {
    std::uint64_t v = 0;
    for (const auto& [k, n] : violations) v += n;
    return v;
  }
  std::string summary() const {
    std::ostringstream o;
    for (const auto& [k, n] : checks) {
      auto it = violations.find(k);
      o << k << ": " << n << " checks, " << (it == violations.end() ? 0 : it->second) << " violations\n";
    }
    for (const auto& m : messages) o << "  " << m << "\n";
    return o.str();
  }
};

inline LaurentPoly random_poly(std::mt19937& rng, std::uint32_t p, int d) {
  std::vector<std::pair<int, long long>> t;
  t.push_back({d, 1 + static_cast<long long>(rng() % (p - 1))});
  for (int i = 1; i < d; ++i)
    if (rng() % 2) t.push_back({i, 1 + static_cast<long long>(rng() % (p - 1))});
  t.push_back({0, static_cast<long long>(rng() % p)});
  return LaurentPoly::univariate(p, t);
}

inline std::vector<long long> degrees_of(const LaurentPoly& f) {
  std::vector<long long> out;
  for (const auto& t : f.terms())
    if (t.exp[0] != 0) out.push_back(t.exp[0]);
  return out;
}

inline long degree_sum(const LaurentPoly& f) {
  long s = 0;
  for (auto d : degrees_of(f)) s += d;
  return s;
}

inline std::string name_of(const LaurentPoly& f) { return f.to_string() + " p=" + std::to_string(f.p()); }

// carry condition <=> V k = 0 mod p^s - 1 for k_i in [0, p^s - 2]
inline void carry_equivalence(Tally& T, const LaurentPoly& f, std::mt19937& rng) {
  const std::uint32_t p = f.p();
  const auto deg = degrees_of(f);
  const std::size_t m = deg.size();
  for (unsigned s = 1; s <= 3; ++s) {
    const std::uint64_t N = ipow(p, s) - 1;
    auto one = [&](const std::vector<std::uint64_t>& k) {
      std::uint64_t lhs = 0;
      for (std::size_t i = 0; i < m; ++i) lhs = (lhs + static_cast<std::uint64_t>(deg[i]) * k[i]) % N;
      Block b = block_from_numerators(k, p, s, s);
      T.check("carry condition <=> congruence", carry_check(b, deg, p) == (lhs == 0), name_of(f));
    };
    double total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= static_cast<double>(N);
    std::vector<std::uint64_t> k(m, 0);
    if (total <= 20000) {
      while (true) {
        one(k);
        std::size_t i = 0;
        while (i < m && ++k[i] == N) k[i++] = 0;
        if (i == m) break;
      }
    } else {
      for (int t = 0; t < 2000; ++t) {
        for (auto& x : k) x = rng() % N;
        one(k);
      }
      // every solution of the congruence passes
      IntMatrix V = exponent_matrix(f);
      if (std::pow(static_cast<double>(N), static_cast<double>(m - 1)) <= 20000) {
        auto H = enumerate_H(V, p, s);
        for (std::size_t j = 0; j < H.size(); ++j) {
          auto row = H[j];
          one(std::vector<std::uint64_t>(row.begin(), row.end()));
        }
      }
    }
  }
}

inline void parity(Tally& T, std::mt19937& rng, unsigned n) {
  Labels f(n);
  for (auto& x : f) x = static_cast<long long>(rng() % 3);
  auto Gf = fiber_group(f);
  const auto Sn = all_perms(n);
  std::vector<Perm> coset;
  const Perm& tau = Sn[rng() % Sn.size()];
  for (const auto& s : Gf) coset.push_back(perm_compose(s, tau));
  for (const std::vector<Perm>* G : {&Sn, static_cast<const std::vector<Perm>*>(&Gf),
                                     static_cast<const std::vector<Perm>*>(&coset)}) {
    auto r = parity_cancellation_check(*G, f);
    T.check("parity of non-simple permutations", r.hypothesis && r.even_non_simple == r.odd_non_simple,
            "n=" + std::to_string(n));
  }
}

inline void one_instance(Tally& T, std::mt19937& rng) {
  static const std::uint32_t primes[] = {5, 7, 11, 13};
  const std::uint32_t p = primes[rng() % 4];
  int d;
  do d = 3 + static_cast<int>(rng() % 4);
  while (d % static_cast<int>(p) == 0);
  const LaurentPoly f = random_poly(rng, p, d);
  const std::string nm = name_of(f);
  ++T.instances;

  auto np = oracle_newton_polygon(f, d).polygon;
  auto sl = np.slopes();
  std::vector<Rational> mirrored;
  for (const auto& x : sl) mirrored.push_back(1 - x);
  std::sort(mirrored.begin(), mirrored.end());
  T.check("symmetry", mirrored == sl, nm);
  Rational sum = 0;
  for (const auto& x : sl) sum += x;
  T.check("slope sum (d-1)/2", sum == make_rational(d - 1, 2) && sl.size() == static_cast<std::size_t>(d - 1), nm);

  const long long b = 1 + static_cast<long long>(rng() % (p - 1));
  T.check("shift invariance", oracle_newton_polygon(f.shift(b), d).polygon == np, nm + " b=" + std::to_string(b));
  const long long c = 1 + static_cast<long long>(rng() % (p - 1));
  T.check("constant shift invariance", oracle_newton_polygon(f.plus_constant(c), d).polygon == np, nm);

  auto star = lfunction_star(f, d).series;
  bool integral = true;
  for (std::size_t i = 0; i <= star.degree_cap(); ++i) integral = integral && star[i].is_integral();
  T.check("L* integrality", integral, nm);
  auto star_ords = coefficient_ords(star, d);

  // slopes module on the normalized polynomial
  const auto g = normalize_shift(f).f;
  std::map<unsigned, Rational> lambdas;
  if (static_cast<long>(p) >= degree_sum(g)) {
    const unsigned top = (static_cast<unsigned>(d) + 1) / 2;
    auto g_l0 = coefficient_ords(l0_star(g, top), top);
    const bool monomial = g.terms().size() == 1;
    Rational prev = -1;
    for (unsigned s = 1; 2 * s <= static_cast<unsigned>(d) + 1; ++s) {
      auto r = lambda_s(g, s);
      if (r.status != SlopeStatus::Proved) continue;
      lambdas[s] = r.lambda;
      T.check("proved lambda_s = oracle L0* ord c_s", g_l0[s] && *g_l0[s] == r.lambda, nm + " s=" + std::to_string(s));
      if (r.lambda < 1 || monomial)
        T.check("proved lambda_s = oracle L* ord c_s", star_ords[s] && *star_ords[s] == r.lambda,
                nm + " s=" + std::to_string(s));
      else
        T.check("L* ord c_s >= 1 past lambda_s = 1", !star_ords[s] || *star_ords[s] >= 1, nm);
      T.check("lambda_s nondecreasing", r.lambda >= prev, nm);
      prev = r.lambda;
      if (p % d == 1)
        T.check("minimal r for p = 1 mod d", r.R == static_cast<long>(s * (s - 1) / 2 * (p - 1) / d), nm);
    }
    try {
      auto sm = full_np_small_d(f, {}, false);
      T.check("slopes polygon = oracle polygon", sm.polygon == np, nm);
    } catch (const Error& e) {
      T.check("slopes polygon = oracle polygon", e.code() == Errc::RegimeError, nm + " " + e.what());
    }
    carry_equivalence(T, g, rng);
  }

  // tables on the normalized polynomial, where the orbit count stays small
  const std::size_t m = degrees_of(g).size();
  unsigned s_max = 0;
  for (unsigned s = 3; s >= 1 && !s_max; --s)
    if (std::pow(static_cast<double>(ipow(p, s)), static_cast<double>(m - 1)) <= 2e5) s_max = s;
  if (s_max >= 1 && m >= 1) {
    auto orbits = collect_orbits(g, 1, s_max);
    auto l0 = coefficient_ords(l0_star(g, s_max), s_max);
    const bool carries = static_cast<long>(p) >= degree_sum(g);
    const auto deg = degrees_of(g);
    for (unsigned s = 1; s <= s_max; ++s) {
      auto r = min_weight_ord(orbits, p, 1, s, static_cast<std::uint64_t>(m) * (p - 1) * s);
      if (r.status == TableStatus::Definitive) {
        T.check("tables ord = oracle L0* ord", l0[s] && *l0[s] == r.ord_p, nm + " s=" + std::to_string(s));
        if (lambdas.count(s)) T.check("tables ord = lambda_s", lambdas[s] == r.ord_p, nm + " s=" + std::to_string(s));
      } else {
        T.check("cancellation lower bound", !l0[s] || *l0[s] >= r.lower_bound, nm + " s=" + std::to_string(s));
      }
      if (!carries) continue;
      const std::uint64_t hi = s <= 2 ? std::uint64_t(-1) / 2 : 2 * (p - 1);
      for_each_table(orbits, s, 0, hi, [&](const std::vector<std::size_t>& idx, std::uint64_t w) {
        long long usum = 0;
        for (std::size_t i : idx)
          for (const auto& cu : column_uv(orbits[i].block, deg, p)) usum += cu.u;
        T.check("valuation >= sum u / d", Rational(static_cast<long>(w)) / (p - 1) >= make_rational(usum, d), nm);
      });
    }
  }
  parity(T, rng, 2 + T.instances % 5);
}

inline Tally run(unsigned instances, unsigned seed) {
  Tally T;
  std::mt19937 rng(seed);
  for (unsigned i = 0; i < instances; ++i) one_instance(T, rng);
  return T;
}

}  // namespace props
