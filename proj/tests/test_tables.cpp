#include "doctest.h"
#include "lnewton/congruence.hpp"
#include "lnewton/digits.hpp"
#include "lnewton/error.hpp"
#include "lnewton/ffield.hpp"
#include "lnewton/gauss.hpp"
#include "lnewton/oracle.hpp"
#include "lnewton/tables.hpp"

using namespace lnewton;

TEST_CASE("digit sums and fractional parts") {
  CHECK(digit_sigma(0, 5) == 0);
  CHECK(digit_sigma(5, 5) == 1);
  CHECK(digit_sigma(13, 5) == 5);
  CHECK(frac_part(make_rational(-1, 3)) == make_rational(2, 3));
  CHECK(frac_part(Rational(2)) == 0);
  CHECK(frac_part(make_rational(7, 6)) == make_rational(1, 6));
}

TEST_CASE("blocks and numerators") {
  auto b = block_from_numerators({13, 4}, 5, 2, 2);
  CHECK(b.digits[0] == std::vector<std::uint32_t>{3, 2});
  CHECK(b.weight() == 9);
  CHECK(block_numerators(b, 5) == std::vector<std::uint64_t>{13, 4});
  CHECK_THROWS_AS(block_from_numerators({25}, 5, 2, 2), Error);
}

TEST_CASE("carry check") {
  std::vector<long long> deg{3, 1};
  Block zero = block_from_numerators({0, 0}, 11, 1, 1);
  CHECK(carry_check(zero, deg, 11));
  CHECK(column_uv(zero, deg, 11)[0] == ColumnUV{0, 0});
  // single column: passes iff sum d_i k_i = 0 mod p - 1
  for (std::uint64_t k1 = 0; k1 < 11; ++k1)
    for (std::uint64_t k2 = 0; k2 < 11; ++k2) {
      Block b = block_from_numerators({k1, k2}, 11, 1, 1);
      CHECK(carry_check(b, deg, 11) == ((3 * k1 + k2) % 10 == 0));
    }
  // two columns with u[0] != v[1]: column sums 3 and 13
  Block bad;
  bad.level = 2;
  bad.digits = {{1, 4}, {0, 1}};
  auto uv = column_uv(bad, deg, 11);
  REQUIRE(uv[0].u != uv[1].v);
  CHECK_FALSE(carry_check(bad, deg, 11));
  CHECK_THROWS_AS(carry_check(zero, {7, 4}, 7), Error);
}

TEST_CASE("carry condition is equivalent to the congruence") {
  struct Case {
    std::vector<long long> deg;
    std::uint32_t p;
    unsigned s;
  };
  for (const auto& c : std::vector<Case>{{{3, 1}, 5, 1}, {{3, 1}, 5, 2}, {{3, 1}, 7, 2}, {{4, 2, 1}, 7, 2}, {{3, 1}, 5, 3}}) {
    const std::uint64_t N = ipow(c.p, c.s) - 1;
    const std::size_t m = c.deg.size();
    std::vector<std::uint64_t> k(m, 0);
    std::uint64_t checked = 0;
    while (true) {
      std::uint64_t lhs = 0;
      for (std::size_t i = 0; i < m; ++i) lhs = (lhs + c.deg[i] * k[i]) % N;
      Block b = block_from_numerators(k, c.p, c.s, c.s);
      REQUIRE(carry_check(b, c.deg, c.p) == (lhs == 0));
      ++checked;
      std::size_t i = 0;
      while (i < m && ++k[i] == N) k[i++] = 0;
      if (i == m) break;
    }
    CHECK(checked == ipow(N, m));
  }
}

TEST_CASE("unit parts") {
  DigitTable empty;
  CHECK(unit_part(empty, {1, 2}, 5) == 1);
  CHECK(table_valuation(empty, 5) == 0);
  Block b = block_from_numerators({1, 0}, 5, 1, 1);
  // -a_1 / 1!
  CHECK(block_unit(b, {3, 2}, 5) == 2);
  DigitTable t{{b}};
  CHECK(table_valuation(t, 5) == make_rational(1, 4));
  CHECK(table_valuation(t, 5, 2) == make_rational(1, 8));
}

TEST_CASE("x^7 + a x^4 over F_5") {
  for (std::uint32_t a = 1; a < 5; ++a) {
    auto f = LaurentPoly::univariate(5, {{7, 1}, {4, a}});
    auto orbits = collect_orbits(f, 1, 4);
    auto c2 = min_weight_ord(orbits, 5, 1, 2, 40);
    auto c3 = min_weight_ord(orbits, 5, 1, 3, 40);
    auto c4 = min_weight_ord(orbits, 5, 1, 4, 40);
    CHECK(c2.status == TableStatus::Definitive);
    CHECK(c2.ord_p == make_rational(1, 4));
    CHECK(c2.levels.at(0).weight == 1);
    CHECK(c3.status == TableStatus::Definitive);
    CHECK(c3.ord_p == make_rational(3, 4));
    REQUIRE(c4.status == TableStatus::Definitive);
    CHECK(c4.ord_p == make_rational(3, 2));
    CHECK(c4.levels.at(0).count == 4);
    // (1/12) a^2 (a^4 + 7) mod 5
    std::uint64_t expect = std::uint64_t{invmod(12, 5)} * a * a % 5 * ((a * a * a * a + 7) % 5) % 5;
    CHECK(c4.levels[0].unit_sum == expect);
    // oracle
    auto L = lfunction_star(f, 7).series;
    auto ords = coefficient_ords(L, 4);
    CHECK(ords[2] == c2.ord_p);
    CHECK(ords[3] == c3.ord_p);
    CHECK(ords[4] == c4.ord_p);
  }
}

TEST_CASE("two-variable tables") {
  auto f = LaurentPoly(11, 2, {{{3, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  auto orbits = collect_orbits(f, 1, 4);
  struct Want {
    unsigned s;
    Rational ord;
  };
  for (const auto& w : std::vector<Want>{{2, make_rational(1, 2)},
                                         {3, Rational(1)},
                                         {4, make_rational(3, 2)}}) {
    auto r = min_weight_ord(orbits, 11, 1, w.s, 80);
    INFO("s=", w.s);
    CHECK(r.status == TableStatus::Definitive);
    CHECK(r.ord_q == w.ord);
  }
  auto L0 = l0_star(f, 4);
  auto ords = coefficient_ords(L0, 4);
  CHECK(ords[2] == make_rational(1, 2));
  CHECK(ords[3] == Rational(1));
  CHECK(ords[4] == make_rational(3, 2));
}

TEST_CASE("valuation lower bound from the carries") {
  // weight >= (1/d) sum of u over the columns, i.e. weight / (p - 1) >= sum u / d scaled
  for (auto [fx, p] : std::vector<std::pair<std::vector<std::pair<int, long long>>, std::uint32_t>>{
           {{{3, 1}, {1, 1}}, 5}, {{{4, 1}, {2, 1}, {1, 1}}, 7}, {{{4, 1}, {1, 3}}, 11}}) {
    auto f = LaurentPoly::univariate(p, fx);
    std::vector<long long> deg;
    for (const auto& t : f.terms()) deg.push_back(t.exp[0]);
    const long d = f.degree();
    auto orbits = collect_orbits(f, 1, 3);
    for (unsigned s = 1; s <= 3; ++s)
      for_each_table(orbits, s, 0, 1000, [&](const std::vector<std::size_t>& idx, std::uint64_t w) {
        long long usum = 0;
        for (std::size_t i : idx) {
          REQUIRE(carry_check(orbits[i].block, deg, p));
          for (const auto& c : column_uv(orbits[i].block, deg, p)) usum += c.u;
        }
        CHECK(Rational(static_cast<long>(w)) / (p - 1) >= make_rational(usum, d));
      });
  }
}

TEST_CASE("cancellation is reported") {
  // c_1 of x^3 + x: the only level-1 orbit is 0, weight 0
  auto f = LaurentPoly::univariate(7, {{3, 1}, {1, 1}});
  auto r = min_weight_ord(f, 1, 1, 10);
  CHECK(r.status == TableStatus::Definitive);
  CHECK(r.ord_p == 0);
  auto none = min_weight_ord(f, 1, 2, 0);
  CHECK(none.status == TableStatus::Inconclusive);
  CHECK(none.lower_bound == make_rational(1, 6));
}
