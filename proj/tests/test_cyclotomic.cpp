#include "doctest.h"
#include "lnewton/cyclotomic.hpp"
#include "lnewton/error.hpp"
#include "lnewton/newton_polygon.hpp"

using namespace lnewton;

TEST_CASE("basis reduction of zeta powers") {
  const std::uint32_t p = 5;
  CycNum sum(p);
  for (int c = 0; c < 5; ++c) sum += CycNum::zeta_power(p, c);
  CHECK(sum.is_zero());
  CycNum z = CycNum::zeta_power(p, 1);
  CycNum acc(p, Rational(1));
  for (int i = 0; i < 5; ++i) acc *= z;
  CHECK(acc == CycNum(p, Rational(1)));
  CHECK(CycNum::zeta_power(p, -1) == CycNum::zeta_power(p, 4));
}

TEST_CASE("lambda valuation of known elements") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    CycNum lambda = CycNum::zeta_power(p, 1) - CycNum(p, Rational(1));
    CHECK(lambda_valuation(lambda).value() == 1);
    CycNum pp(p, Rational(static_cast<long>(p)));
    CHECK(lambda_valuation(pp).value() == static_cast<long>(p - 1));
    CHECK(ord_p(pp) == 1);
    CycNum l3 = lambda * lambda * lambda;
    CHECK(lambda_valuation(l3).value() == 3);
    CHECK(lambda_valuation(l3 * pp).value() == 3 + static_cast<long>(p - 1));
    CHECK(lambda_valuation(CycNum(p)).is_infinite());
    CHECK(lambda_valuation(CycNum::zeta_power(p, 2)).value() == 0);
  }
}

TEST_CASE("lambda valuation errors") {
  CycNum half(5, Rational(1, 2));
  CHECK_THROWS_AS(lambda_valuation(half), Error);
  CycNum big(5, Rational(625));
  CHECK_THROWS_AS(lambda_valuation(big, 3), Error);
}

TEST_CASE("valuation is additive on random products") {
  const std::uint32_t p = 7;
  unsigned seed = 12345;
  auto rnd = [&seed] {
    seed = seed * 1103515245u + 12345u;
    return static_cast<long>((seed >> 16) % 41) - 20;
  };
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Integer> a(p - 1), b(p - 1);
    for (auto& v : a) v = rnd();
    for (auto& v : b) v = rnd();
    CycNum x = CycNum::from_coeffs(p, a), y = CycNum::from_coeffs(p, b);
    if (x.is_zero() || y.is_zero()) continue;
    CHECK(lambda_valuation(x * y).value() == lambda_valuation(x).value() + lambda_valuation(y).value());
  }
}

TEST_CASE("series exp and power sums are inverse") {
  const std::uint32_t p = 5;
  std::vector<CycNum> S(5, CycNum(p));
  for (int k = 1; k < 5; ++k) S[k] = CycNum::zeta_power(p, k) * Rational(k + 1) - CycNum(p, Rational(3));
  auto L = series_exp_power_sums(S, 4);
  auto back = series_power_sums(L);
  for (int k = 1; k < 5; ++k) CHECK(back[k] == S[k]);
  auto prod = L * L.inverse();
  CHECK(prod == CycSeries::one(p, 4));
  CHECK(L.pow(3) * L.pow(-2) == L);
}

TEST_CASE("exp of the power sums of (1 - aT) is 1 - aT") {
  const std::uint32_t p = 3;
  std::vector<CycNum> S(4, CycNum(p));
  for (int k = 1; k < 4; ++k) S[k] = CycNum(p, Rational(-1));  // S_k = -1 gives 1 - T
  auto L = series_exp_power_sums(S, 3);
  CHECK(L[0] == CycNum(p, Rational(1)));
  CHECK(L[1] == CycNum(p, Rational(-1)));
  CHECK(L[2].is_zero());
  CHECK(L[3].is_zero());
}

TEST_CASE("Newton polygon basics") {
  std::vector<std::optional<Rational>> ords{Rational(0), Rational(1, 2), std::nullopt, Rational(3, 2)};
  auto np = newton_polygon(ords);
  auto s = np.slopes();
  REQUIRE(s.size() == 3);
  CHECK(s[0] == Rational(1, 2));
  CHECK(s[1] == Rational(1, 2));
  CHECK(s[2] == Rational(1, 2));
  CHECK(np.vertices().size() == 2);
  CHECK(polygon_from_slopes({Rational(3, 4), Rational(1, 4)}).slopes() ==
        std::vector<Rational>{Rational(1, 4), Rational(3, 4)});
}
