#include "doctest.h"
#include "lnewton/error.hpp"
#include "lnewton/ffield.hpp"
#include "lnewton/oracle.hpp"

using namespace lnewton;

namespace {

// Direct evaluation with field arithmetic, no log or trace tables.
CycNum direct_sum(const LaurentPoly& f, unsigned K, bool star) {
  FieldCtx F(f.p(), K);
  const std::uint32_t p = f.p();
  std::vector<std::int64_t> hist(p, 0);
  const unsigned n = f.nvars();
  std::uint64_t q = F.order();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= q;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<FqElem> x(n);
    std::uint64_t r = idx;
    bool skip = false;
    for (unsigned i = 0; i < n; ++i) {
      x[i] = FqElem{r % q};
      r /= q;
      if (star && x[i] == F.zero()) skip = true;
    }
    if (skip) continue;
    FqElem v = F.zero();
    for (const auto& t : f.terms()) {
      FqElem m = F.from_int(t.coeff);
      for (unsigned i = 0; i < n; ++i) {
        int e = t.exp[i];
        if (e == 0) continue;
        FqElem base = e > 0 ? x[i] : F.inv(x[i]);
        m = F.mul(m, F.pow(base, static_cast<std::uint64_t>(std::abs(e))));
      }
      v = F.add(v, m);
    }
    ++hist[F.abs_trace(v)];
  }
  return CycNum::from_counts(p, hist);
}

}  // namespace

TEST_CASE("exponential sums agree with direct evaluation") {
  std::vector<LaurentPoly> fs{
      LaurentPoly::univariate(5, {{3, 1}, {1, 2}}),
      LaurentPoly::univariate(7, {{4, 1}, {2, 3}, {1, 1}, {0, 2}}),
      LaurentPoly::univariate(5, {{2, 1}, {-1, 3}}),
      LaurentPoly::univariate(3, {{4, 1}, {1, 1}}),
      LaurentPoly(5, 2, {{{3, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}),
      LaurentPoly(3, 2, {{{1, 0}, 1}, {{0, 1}, 2}, {{-1, -1}, 1}}),
  };
  for (const auto& f : fs) {
    unsigned kmax = f.nvars() == 1 ? 3 : 2;
    for (unsigned k = 1; k <= kmax; ++k) {
      CHECK(exp_sum_star(f, k) == direct_sum(f, k, true));
      if (f.is_polynomial()) CHECK(exp_sum_full(f, k) == direct_sum(f, k, false));
    }
  }
}

TEST_CASE("ground field extension reads as a larger k") {
  auto f = LaurentPoly::univariate(3, {{4, 1}, {1, 2}});
  OracleOptions opt;
  opt.a = 2;
  CHECK(exp_sum_star(f, 2, opt) == exp_sum_star(f, 4));
  CHECK(exp_sum_star(f, 1, opt) == direct_sum(f, 2, true));
}

TEST_CASE("quadratic Gauss sum squares to +-p") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    auto f = LaurentPoly::univariate(p, {{2, 1}});
    CycNum g = exp_sum_full(f, 1);
    long sign = (p % 4 == 1) ? 1 : -1;
    CHECK(g * g == CycNum(p, Rational(sign * static_cast<long>(p))));
  }
}

TEST_CASE("quadratic fiber reduction matches the double sum") {
  std::vector<LaurentPoly> fs{
      LaurentPoly(11, 2, {{{3, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}),
      LaurentPoly(7, 2, {{{2, 0}, 3}, {{1, 1}, 2}, {{-1, 1}, 1}, {{0, 2}, 5}, {{0, 0}, 1}}),
      LaurentPoly(5, 2, {{{4, 0}, 1}, {{2, 1}, 3}, {{0, 2}, 2}, {{0, 1}, 1}}),
  };
  for (const auto& f : fs) {
    REQUIRE(quadratic_fiber_applicable(f));
    for (unsigned k = 1; k <= 2; ++k) {
      OracleOptions naive, reduced;
      naive.fiber = FiberMode::Naive;
      reduced.fiber = FiberMode::Reduced;
      CHECK(exp_sum_star(f, k, naive) == exp_sum_star(f, k, reduced));
    }
  }
  CHECK_FALSE(quadratic_fiber_applicable(LaurentPoly(5, 2, {{{1, 2}, 1}, {{1, 0}, 1}})));
}

TEST_CASE("L-function of x is 1 - T on the torus") {
  auto f = LaurentPoly::univariate(7, {{1, 1}});
  auto r = lfunction_star(f, 3);
  CHECK(r.series[0] == CycNum(7, Rational(1)));
  CHECK(r.series[1] == CycNum(7, Rational(-1)));
  CHECK(r.series[2].is_zero());
  CHECK(r.degree_bound == 1);
}

TEST_CASE("L* factors as (1 - T) L for univariate polynomials") {
  for (std::uint32_t p : {5u, 7u}) {
    auto f = LaurentPoly::univariate(p, {{3, 1}, {1, 1}});
    auto star = lfunction_star(f, 5);
    auto aff = lfunction_affine(f, 4);
    CHECK(star.vanishing_violations.empty());
    CHECK(aff.vanishing_violations.empty());
    auto stripped = strip_trivial_factor(star.series, 3);
    for (std::size_t i = 0; i <= 3; ++i) CHECK(stripped[i] == aff.series[i]);
  }
}

TEST_CASE("strip_trivial_factor") {
  CycSeries s(5, 3);
  s[0] = CycNum(5, Rational(1));
  s[1] = CycNum(5, Rational(-4));
  s[2] = CycNum(5, Rational(3));
  auto r = strip_trivial_factor(s, 2);
  CHECK(r[0] == CycNum(5, Rational(1)));
  CHECK(r[1] == CycNum(5, Rational(-3)));
  CHECK(r[2].is_zero());
  s[2] = CycNum(5, Rational(2));
  CHECK_THROWS_AS(strip_trivial_factor(s, 2), Error);
}

TEST_CASE("the two routes to L0* agree") {
  auto f = LaurentPoly::univariate(5, {{3, 1}, {1, 2}});
  auto direct = l0_star(f, 4);
  auto lstar = lfunction_star(f, 4).series;
  auto viaprod = l0_star_from_lstar(lstar, 1, Integer(5));
  CHECK(direct == viaprod);
  auto g = LaurentPoly(5, 2, {{{3, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  auto d2 = l0_star(g, 3);
  auto l2 = lfunction_star(g, 3).series;
  CHECK(d2 == l0_star_from_lstar(l2, 1, Integer(5)));
}

TEST_CASE("slopes of x^3 + x") {
  for (std::uint32_t p : {5u, 11u}) {
    auto f = LaurentPoly::univariate(p, {{3, 1}, {1, 1}});
    auto r = oracle_newton_polygon(f);
    Rational s1(p + 1, 3 * (p - 1));
    s1.canonicalize();
    CHECK(r.polygon.slopes() == std::vector<Rational>{s1, 1 - s1});
  }
  auto f7 = LaurentPoly::univariate(7, {{3, 1}, {1, 1}});
  CHECK(oracle_newton_polygon(f7).polygon.slopes() == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
}

TEST_CASE("degree bound and budget") {
  auto f = LaurentPoly::univariate(5, {{4, 1}, {1, 1}});
  OracleOptions opt;
  opt.budget = 200;
  CHECK(default_degree_cap(f, opt, true) == 3);
  opt.budget = 100;
  CHECK_THROWS_AS(default_degree_cap(f, opt, true), Error);
  CHECK(enumeration_cost(f, 2, {}) == 24);
}
