#include "doctest.h"
#include "lnewton/congruence.hpp"
#include "lnewton/document.hpp"
#include "lnewton/error.hpp"
#include "lnewton/runner.hpp"

using namespace lnewton;

TEST_CASE("parse_poly") {
  auto a = parse_poly("x^3+2x", 7);
  CHECK(a.f == LaurentPoly::univariate(7, {{3, 1}, {1, 2}}));
  CHECK(a.warnings.empty());
  CHECK(exponent_matrix(a.f) == IntMatrix{{3, 1}});

  auto b = parse_poly("x^3+x*y+y^2", 11);
  CHECK(b.f == LaurentPoly(11, 2, {{{3, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));

  auto c = parse_poly("x^3+7x", 7);
  CHECK(c.f == LaurentPoly::univariate(7, {{3, 1}}));
  REQUIRE(c.warnings.size() == 1);
  CHECK(c.warnings[0].find("7x") != std::string::npos);

  CHECK(parse_poly(" - 3 * x ^ 2 + x^2 + 5", 7).f == LaurentPoly::univariate(7, {{2, 5}, {0, 5}}));
  CHECK(parse_poly("x^-1 + y^(-2) + x*y", 5).f == LaurentPoly(5, 2, {{{-1, 0}, 1}, {{0, -2}, 1}, {{1, 1}, 1}}));
  CHECK(parse_poly("2*3x^2", 7).f == LaurentPoly::univariate(7, {{2, 6}}));
  CHECK(parse_poly("x^2 + 6x^2 + x", 7).warnings.empty());
}

TEST_CASE("parse errors carry positions") {
  for (auto [text, pos] : std::vector<std::pair<std::string, std::string>>{
           {"x^3+*x", "position 4"}, {"x^", "position 2"}, {"", "position 0"}, {"x^3 x", ""}, {"x+z", "position 2"}}) {
    try {
      parse_poly(text, 7);
      if (text == "x^3 x") continue;  // juxtaposition is a product
      FAIL("no error for " << text);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::SyntaxError);
      CHECK(std::string(e.what()).find(pos) != std::string::npos);
    }
  }
  CHECK_THROWS_AS(parse_poly("7x", 7), Error);
}

TEST_CASE("canonical text round trip") {
  for (const char* t : {"x^3+2x", "x^3+x*y+y^2", "3x^-2+y+4", "x^6+3x^4+3x^3+6x^2+2x"}) {
    auto f = parse_poly(t, 11).f;
    CHECK(parse_poly(f.to_string(), 11).f == f);
  }
}

TEST_CASE("document round trip") {
  for (auto [cmd, f, p] : std::vector<std::tuple<std::string, std::string, std::uint32_t>>{
           {"oracle", "x^7+x^4", 5}, {"slopes", "x^3+x", 11}, {"tables", "x^3+x*y+y^2", 11},
           {"auto", "x^4+x", 7}, {"oracle", "x^3+*x", 7}, {"gauss-check", "", 5}, {"congruence", "x^3+x", 7}}) {
    JobSpec job;
    job.command = cmd;
    job.f = f;
    job.p = p;
    job.s_max = 3;
    auto r = run(job);
    auto text = to_json(r.doc);
    auto back = document_from_json(text);
    CHECK(back == r.doc);
    CHECK(to_json(back) == text);
    CHECK(text.find("schema_version") != std::string::npos);
    CHECK(to_csv(back) == to_csv(r.doc));
  }
}

TEST_CASE("rationals are never floats") {
  PolygonDocument d;
  d.status = "proved";
  d.set_polygon(polygon_from_slopes({make_rational(1, 4), make_rational(3, 4)}));
  auto text = to_json(d);
  CHECK(text.find("\"num\": \"3\"") != std::string::npos);
  CHECK(text.find("0.25") == std::string::npos);
  CHECK(to_csv(d).find("slope,3/4,1") != std::string::npos);
  CHECK(rational_from_json(rational_json(make_rational(-7, 3))) == make_rational(-7, 3));
  CHECK_THROWS_AS(document_from_json("{"), Error);
  CHECK_THROWS_AS(document_from_json("{\"schema_version\": 99}"), Error);
}

TEST_CASE("run dispatch and exit codes") {
  JobSpec job;
  job.command = "slopes";
  job.f = "x^3+x";
  job.p = 11;
  auto r = run(job);
  CHECK(r.exit_code == 0);
  CHECK(r.doc.polygon().slopes() == std::vector<Rational>{make_rational(2, 5), make_rational(3, 5)});

  job.command = "oracle";
  job.f = "x^7+x^4";
  job.p = 5;
  r = run(job);
  CHECK(r.exit_code == 0);
  CHECK(r.doc.polygon().slopes().size() == 6);

  job.command = "auto";
  job.f = "x^4+x";
  job.p = 7;
  r = run(job);
  CHECK(r.exit_code == 0);
  CHECK(r.doc.method == "auto:slopes+oracle");
  CHECK(r.doc.polygon().slopes() == std::vector<Rational>(3, make_rational(1, 2)));

  // outside the slopes regime auto goes to the oracle
  job.f = "x^4+x^2+x";
  job.p = 5;
  r = run(job);
  CHECK(r.exit_code == 0);
  CHECK(r.doc.method == "auto:oracle");

  job.command = "slopes";
  r = run(job);
  CHECK(r.exit_code == 1);
  CHECK(r.doc.error_code == "RegimeError");

  job.p = 9;
  CHECK(run(job).exit_code == 1);

  job.command = "tables";
  job.f = "x^3+x";
  job.p = 7;
  job.s_max = 2;
  r = run(job);
  CHECK(r.exit_code == 0);
}

TEST_CASE("unknown suite") {
  CHECK_THROWS_AS(reproduce("nope"), Error);
  CHECK_THROWS_AS(reproduce("sextic:iv"), Error);
  CHECK(reproduce("cubic-shift").ok());
}
