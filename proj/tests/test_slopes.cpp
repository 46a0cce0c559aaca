#include "doctest.h"
#include "lnewton/digits.hpp"
#include "lnewton/error.hpp"
#include "lnewton/oracle.hpp"
#include "lnewton/slopes.hpp"
#include "lnewton/tables.hpp"

#include <set>

using namespace lnewton;

namespace {

std::uint32_t inv_fact(long n, std::uint32_t p) { return FactorialTable(p).inv_fact(n); }

using HSet = std::set<std::vector<std::uint32_t>>;

HSet as_set(const std::vector<std::vector<std::uint32_t>>& v) { return HSet(v.begin(), v.end()); }

std::vector<Rational> frac_slopes(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Rational> out;
  for (auto [n, d] : xs) out.push_back(make_rational(n, d));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("normalize_shift") {
  // 3 a_1 = a_2^2 gives x^3 plus a constant
  auto f = LaurentPoly::univariate(11, {{3, 1}, {2, 3}, {1, 3}});
  auto s = normalize_shift(f);
  CHECK(s.f.terms().size() == 1);
  CHECK(s.f.degree() == 3);
  CHECK(s.b == 10);
  auto g = LaurentPoly::univariate(7, {{4, 1}, {1, 1}});
  CHECK(normalize_shift(g).b == 0);
  CHECK(normalize_shift(g).f.to_string() == g.to_string());
  auto h = normalize_shift(LaurentPoly::univariate(7, {{4, 1}, {3, 4}, {1, 1}})).f;
  CHECK(h.degree() == 4);
  for (const auto& t : h.terms()) CHECK(t.exp[0] != 3);
  // leading coefficient scaled away
  auto k = normalize_shift(LaurentPoly::univariate(7, {{3, 2}, {1, 2}}));
  CHECK(k.f.to_string() == LaurentPoly::univariate(7, {{3, 1}, {1, 1}}).to_string());
}

TEST_CASE("C for the cubic and sextic families") {
  for (std::uint32_t p : {5u, 11u, 17u, 23u}) {
    auto f = LaurentPoly::univariate(p, {{3, 1}, {1, 2}});
    CHECK(as_set(enumerate_C(f, (p + 1) / 3, 1, 1)) == HSet{{1}});
  }
  auto g = LaurentPoly::univariate(41, {{6, 1}, {4, 1}, {3, 1}, {2, 1}, {1, 1}});
  const long r0 = 7;
  CHECK(as_set(enumerate_C(g, r0, 1, 1)) == HSet{{0, 0, 0, 1}});
  CHECK(as_set(enumerate_C(g, 1 + r0, 1, 1)) == HSet{{0, 0, 0, 4}, {0, 1, 0, 2}, {0, 2, 0, 0}, {1, 0, 1, 0}, {0, 0, 2, 1}});
  CHECK(as_set(enumerate_C(g, 2 * r0, 2, 2)) == HSet{{0, 0, 0, 2}, {0, 1, 0, 0}});
  CHECK(as_set(enumerate_C(g, r0, 1, 2)) == HSet{{0, 0, 1, 0}});
  CHECK(enumerate_C(g, 1 + r0, 1, 2).size() == 5);
  CHECK(enumerate_C(g, 2 + r0, 1, 2).size() == 14);
  CHECK(enumerate_C(g, 3 + r0, 1, 2).size() == 29);
  CHECK(as_set(enumerate_C(g, 2 * r0, 2, 1)) == HSet{{0, 0, 1, 0}});
  // at p = 23 the top-term count drops [0,0,0,7] from C(2 + (p+1)/6; 1, 1)
  auto g23 = LaurentPoly::univariate(23, {{6, 1}, {4, 1}, {3, 1}, {2, 1}, {1, 1}});
  auto big = as_set(enumerate_C(g, 2 + r0, 1, 1));
  auto small = as_set(enumerate_C(g23, 6, 1, 1));
  CHECK(big.count({0, 0, 0, 7}));
  big.erase({0, 0, 0, 7});
  CHECK(big == small);
  auto big3 = as_set(enumerate_C(g, 3 + r0, 1, 1));
  // [0,1,2,5] also has more than r = 7 entries
  for (auto h : HSet{{0, 0, 0, 10}, {0, 1, 0, 8}, {0, 2, 0, 6}, {1, 0, 1, 6}, {0, 0, 2, 7}, {0, 0, 4, 4}, {0, 1, 2, 5}}) {
    CHECK(big3.count(h));
    big3.erase(h);
  }
  CHECK(big3 == as_set(enumerate_C(g23, 7, 1, 1)));
  CHECK(big == HSet{{2, 0, 0, 2}, {0, 1, 0, 5}, {2, 1, 0, 0}, {0, 2, 0, 3}, {0, 3, 0, 1}, {1, 0, 1, 3}, {1, 1, 1, 1},
                    {0, 0, 2, 4}, {0, 1, 2, 2}, {0, 2, 2, 0}, {1, 0, 3, 0}, {0, 0, 4, 1}});
  CHECK(as_set(enumerate_C(g, 3 + r0, 1, 1)).size() == 28);
  CHECK(enumerate_C(g, 0, 1, 1).empty());
  CHECK_THROWS_AS(enumerate_C(LaurentPoly::univariate(7, {{3, 1}, {2, 1}}), 2, 1, 1), Error);
}

TEST_CASE("F values") {
  for (std::uint32_t p : {5u, 11u, 17u}) {
    for (std::uint32_t a1 : {1u, 2u, 3u}) {
      auto f = LaurentPoly::univariate(p, {{3, 1}, {1, a1}});
      const long r = (p + 1) / 3;
      std::uint32_t want = a1 * inv_fact((p - 2) / 3, p) % p;
      CHECK(F_of(f, r, 1, 1) == want);
      CHECK(F_r_s(f, r, 2) == want);
    }
  }
  for (std::uint32_t p : {7u, 11u, 19u}) {
    auto f = LaurentPoly::univariate(p, {{4, 1}, {2, 3}, {1, 1}});
    CHECK(F_of(f, (p + 1) / 4, 1, 1) == 3 * inv_fact((p - 3) / 4, p) % p);
  }
  auto f = LaurentPoly::univariate(11, {{3, 1}, {1, 1}});
  CHECK(F_of(f, 2, 5, 5) == 0);
  CHECK(F_r_s(f, 0, 1) == 1);
}

TEST_CASE("F for x^3 + a_2 x^2 + a_1 x after the shift") {
  // the shifted F_r^2 equals (3 a_1 - a_2^2) / (3 ((p-2)/3)!)
  for (std::uint32_t p : {11u, 17u}) {
    for (auto [a2, a1] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 1}, {2, 5}, {3, 3}, {4, 1}}) {
      auto f = LaurentPoly::univariate(p, {{3, 1}, {2, a2}, {1, a1}});
      auto g = normalize_shift(f).f;
      const long r = (p + 1) / 3;
      long num = ((3 * static_cast<long>(a1) - static_cast<long>(a2 * a2)) % static_cast<long>(p) + p) % p;
      std::uint64_t want = num * std::uint64_t{invmod(3, p)} % p * inv_fact((p - 2) / 3, p) % p;
      CHECK(F_r_s(g, r, 2) == want);
    }
  }
}

TEST_CASE("lambda_s") {
  for (std::uint32_t p : {7u, 11u, 19u}) {
    auto f = LaurentPoly::univariate(p, {{4, 1}, {2, 1}, {1, 1}});
    auto r = lambda_s(f, 2);
    CHECK(r.status == SlopeStatus::Proved);
    CHECK(r.lambda == make_rational(p + 1, 4 * (p - 1)));
    auto g = LaurentPoly::univariate(p, {{4, 1}, {1, 1}});
    CHECK(lambda_s(g, 2).lambda == make_rational(p + 5, 4 * (p - 1)));
  }
  // p = 1 mod d: first nonzero F at r = sum_{u<s} u (p-1)/d
  for (std::uint32_t p : {7u, 13u}) {
    auto f = LaurentPoly::univariate(p, {{3, 1}, {1, 1}});
    for (unsigned s = 1; s <= 2; ++s) {
      auto r = lambda_s(f, s);
      CHECK(r.status == SlopeStatus::Proved);
      CHECK(r.R == static_cast<long>(s * (s - 1) / 2 * (p - 1) / 3));
    }
  }
  auto f = LaurentPoly::univariate(7, {{4, 1}, {2, 1}, {1, 1}});
  CHECK_THROWS_AS(lambda_s(LaurentPoly::univariate(5, {{4, 1}, {2, 1}, {1, 1}}), 2), Error);
  CHECK_THROWS_AS(lambda_s(LaurentPoly::univariate(13, {{3, 1}, {1, 1}}), 4), Error);
  auto capped = lambda_s(LaurentPoly::univariate(11, {{3, 1}, {1, 1}}), 2, 2);
  CHECK(capped.status == SlopeStatus::Inconclusive);
}

TEST_CASE("lambda_s agrees with the oracle and the tables") {
  struct Case {
    std::uint32_t p;
    std::vector<std::pair<int, long long>> f;
  };
  std::vector<Case> cases{{7, {{3, 1}, {1, 1}}}, {11, {{3, 1}, {1, 2}}}, {7, {{4, 1}, {2, 1}, {1, 1}}},
                          {11, {{4, 1}, {1, 1}}}, {13, {{4, 1}, {2, 2}, {1, 1}}}, {11, {{5, 1}, {2, 1}, {1, 1}}}};
  for (const auto& c : cases) {
    auto f = LaurentPoly::univariate(c.p, c.f);
    auto L = lfunction_star(f, std::nullopt).series;
    const unsigned smax = 3;
    auto ords = coefficient_ords(L, smax);
    auto orbits = collect_orbits(f, 1, smax);
    for (unsigned s = 1; s <= smax; ++s) {
      if ((s - 2) * (s - 1) >= 2u * f.degree()) continue;
      auto r = lambda_s(f, s);
      INFO(f.to_string(), " p=", c.p, " s=", s);
      if (r.status != SlopeStatus::Proved) continue;
      CHECK(ords[s] == r.lambda);
      auto t = min_weight_ord(orbits, c.p, 1, s, 10 * c.p);
      if (t.status == TableStatus::Definitive) CHECK(t.ord_p == r.lambda);
    }
  }
}

TEST_CASE("small degree polygons") {
  for (std::uint32_t p : {5u, 11u, 17u})
    for (std::uint32_t a1 : {1u, 2u}) {
      auto f = LaurentPoly::univariate(p, {{3, 1}, {1, a1}});
      auto np = full_np_small_d(f, {}, false);
      CHECK_FALSE(np.used_oracle);
      Rational w = make_rational(p + 1, 3 * (p - 1));
      CHECK(np.polygon.slopes() == std::vector<Rational>{w, 1 - w});
    }
  auto r72 = full_np_small_d(LaurentPoly::univariate(11, {{3, 1}, {2, 3}, {1, 3}}), {}, false);
  CHECK(r72.polygon.slopes() == frac_slopes({{1, 2}, {1, 2}}));
  // x^6 + a_3 x^3
  auto xi = full_np_small_d(LaurentPoly::univariate(11, {{6, 1}, {3, 1}}), {}, false);
  CHECK(xi.polygon.slopes() == frac_slopes({{3, 10}, {3, 10}, {1, 2}, {7, 10}, {7, 10}}));
  auto v = full_np_small_d(LaurentPoly::univariate(17, {{6, 1}, {4, 3}, {2, 3}}), {}, false);
  CHECK(v.polygon.slopes() == frac_slopes({{3, 16}, {1, 2}, {1, 2}, {1, 2}, {13, 16}}));
  auto x = full_np_small_d(LaurentPoly::univariate(17, {{6, 1}, {1, 1}}), {}, false);
  CHECK(x.polygon.slopes() == frac_slopes({{3, 8}, {7, 16}, {1, 2}, {9, 16}, {5, 8}}));
  CHECK_THROWS_AS(full_np_small_d(LaurentPoly::univariate(5, {{4, 1}, {2, 1}, {1, 1}})), Error);
  CHECK_THROWS_AS(full_np_small_d(LaurentPoly::univariate(17, {{7, 1}, {1, 1}})), Error);
}
