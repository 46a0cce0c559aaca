#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "lnewton/congruence.hpp"
#include "lnewton/digits.hpp"
#include "lnewton/error.hpp"
#include "lnewton/ffield.hpp"
#include "lnewton/gauss.hpp"
#include "lnewton/permutations.hpp"
#include "lnewton/runner.hpp"
#include "lnewton/slopes.hpp"
#include "lnewton/tables.hpp"

namespace lnewton {

bool SuiteReport::ok() const {
  if (cases.empty()) return false;
  for (const auto& c : cases)
    if (!c.pass) return false;
  return true;
}

double SuiteReport::seconds() const {
  double s = 0;
  for (const auto& c : cases) s += c.seconds;
  return s;
}

double SuiteReport::max_case_seconds() const {
  double s = 0;
  for (const auto& c : cases) s = std::max(s, c.seconds);
  return s;
}

std::string format_report(const SuiteReport& r) {
  std::ostringstream o;
  for (const auto& c : r.cases) {
    o << (c.pass ? "PASS " : "FAIL ") << r.id << " " << c.name;
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2fs)", c.seconds);
    o << buf;
    if (!c.detail.empty()) o << ": " << c.detail;
    o << "\n";
  }
  return o.str();
}

namespace {

using Coeffs = std::vector<std::pair<int, long long>>;

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Rational q(long n, long d) { return make_rational(n, d); }

// runs fn, catching library errors as failures
void add_case(SuiteReport& rep, const std::string& name, const std::function<bool(std::string&)>& fn) {
  SuiteCase c;
  c.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    c.pass = fn(c.detail);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep.cases.push_back(std::move(c));
}

std::string show(const std::vector<Rational>& v) { return slopes_to_string(v); }

// oracle and slopes module against an expected slope multiset
void polygon_case(SuiteReport& rep, const std::string& name, const LaurentPoly& f, const std::vector<Rational>& want,
                  const OracleOptions& opt) {
  add_case(rep, name + " oracle", [&](std::string& detail) {
    auto got = oracle_newton_polygon(f, std::nullopt, opt).polygon.slopes();
    detail = show(got);
    return got == sorted(want);
  });
  add_case(rep, name + " slopes", [&](std::string& detail) {
    auto np = full_np_small_d(f, opt, false);
    auto got = np.polygon.slopes();
    detail = show(got);
    return got == sorted(want);
  });
}

std::vector<Rational> with_complements(const std::vector<Rational>& low, bool middle) {
  std::vector<Rational> out = low;
  for (const auto& x : low) out.push_back(1 - x);
  if (middle) out.push_back(q(1, 2));
  return sorted(out);
}

SuiteReport cubic(const OracleOptions& opt) {
  SuiteReport rep{"cubic", {}};
  for (std::uint32_t p : {5u, 11u, 17u})
    for (long a1 : {1L, 2L}) {
      auto f = LaurentPoly::univariate(p, {{3, 1}, {1, a1}});
      const Rational w = q(p + 1, 3 * (p - 1));
      const std::string name = f.to_string() + " p=" + std::to_string(p);
      polygon_case(rep, name, f, with_complements({w}, false), opt);
      add_case(rep, name + " lambda_2", [&](std::string& detail) {
        auto r = lambda_s(f, 2);
        detail = to_string(r.lambda) + " " + slope_status_name(r.status);
        return r.status == SlopeStatus::Proved && r.lambda == w;
      });
    }
  return rep;
}

SuiteReport quartic(const OracleOptions& opt) {
  SuiteReport rep{"quartic", {}};
  for (std::uint32_t p : {7u, 11u, 19u}) {
    auto f = LaurentPoly::univariate(p, {{4, 1}, {2, 1}, {1, 1}});
    polygon_case(rep, f.to_string() + " p=" + std::to_string(p), f, with_complements({q(p + 1, 4 * (p - 1))}, true),
                 opt);
    auto g = LaurentPoly::univariate(p, {{4, 1}, {1, 1}});
    polygon_case(rep, g.to_string() + " p=" + std::to_string(p), g, with_complements({q(p + 5, 4 * (p - 1))}, true),
                 opt);
  }
  return rep;
}

struct SexticCase {
  std::string id;
  Coeffs f;
  std::vector<std::uint32_t> primes;
  std::function<std::vector<Rational>(long)> low;  // omega_1, omega_2
};

std::vector<SexticCase> sextic_cases() {
  return {
      {"i", {{6, 1}, {4, 1}, {1, 1}}, {11, 17, 23}, [](long p) { return std::vector{q(p + 1, 6 * (p - 1)), q(p + 1, 3 * (p - 1))}; }},
      {"ii", {{6, 1}, {4, 3}, {3, 3}, {2, 6}, {1, 2}}, {17}, [](long p) { return std::vector{q(p + 1, 6 * (p - 1)), q(p + 4, 3 * (p - 1))}; }},
      {"v", {{6, 1}, {4, 3}, {2, 3}}, {17, 23}, [](long p) { return std::vector{q(p + 1, 6 * (p - 1)), q(1, 2)}; }},
      {"vi", {{6, 1}, {3, 1}, {1, 1}}, {11, 17, 23}, [](long p) { return std::vector{q(p + 7, 6 * (p - 1)), q(p - 2, 3 * (p - 1))}; }},
      {"vii", {{6, 1}, {2, 1}, {1, 1}}, {11, 17, 23}, [](long p) { return std::vector{q(p + 7, 6 * (p - 1)), q(p + 1, 3 * (p - 1))}; }},
      {"x", {{6, 1}, {1, 1}}, {11, 17, 23}, [](long p) { return std::vector{q(p + 19, 6 * (p - 1)), q(p + 4, 3 * (p - 1))}; }},
      {"xi", {{6, 1}, {3, 1}}, {11, 17, 23}, [](long p) { return std::vector{q(p + 1, 4 * (p - 1)), q(p + 1, 4 * (p - 1))}; }},
  };
}

SuiteReport sextic(const std::string& which, const OracleOptions& opt) {
  SuiteReport rep{which.empty() ? "sextic" : "sextic:" + which, {}};
  for (const auto& c : sextic_cases()) {
    if (!which.empty() && c.id != which) continue;
    for (std::uint32_t p : c.primes) {
      auto f = LaurentPoly::univariate(p, c.f);
      polygon_case(rep, "(" + c.id + ") " + f.to_string() + " p=" + std::to_string(p), f,
                   with_complements(c.low(p), true), opt);
    }
  }
  if (rep.cases.empty()) fail(Errc::UnknownSuite, "no sextic case " + which);
  return rep;
}

SuiteReport cubic_shift(const OracleOptions& opt) {
  SuiteReport rep{"cubic-shift", {}};
  auto f = LaurentPoly::univariate(11, {{3, 1}, {2, 3}, {1, 3}});
  const std::vector<Rational> want{q(1, 2), q(1, 2)};
  add_case(rep, f.to_string() + " p=11 oracle", [&](std::string& detail) {
    auto got = oracle_newton_polygon(f, std::nullopt, opt).polygon.slopes();
    detail = show(got);
    return got == want;
  });
  add_case(rep, f.to_string() + " p=11 shift to diagonal", [&](std::string& detail) {
    auto g = normalize_shift(f).f;
    detail = "shifted " + g.to_string();
    if (g.terms().size() != 1) return false;
    // L^* of the diagonal polynomial from Gauss sums, then drop the (1 - T) factor
    const long M = 4 * 10;
    auto w = wan_diagonal_lfunction(g, 3, M);
    if (!series_match(w, lfunction_star(g, 3, opt).series, 3, M)) return false;
    std::vector<NPVertex> pts;
    for (std::size_t s = 0; s < w.coeffs.size(); ++s)
      if (auto v = w.ring.valuation(w.coeffs[s])) pts.push_back({Rational(static_cast<long>(s)), q(*v, 10)});
    auto star = lower_hull(pts);
    std::vector<NPVertex> lv;
    for (const auto& v : star.vertices())
      if (v.x >= 1) lv.push_back({v.x - 1, v.y});
    auto got = NewtonPolygon(lv).slopes();
    detail += " slopes " + show(got);
    return got == want;
  });
  add_case(rep, f.to_string() + " p=11 slopes", [&](std::string& detail) {
    auto got = full_np_small_d(f, opt, false).polygon.slopes();
    detail = show(got);
    return got == want;
  });
  return rep;
}

SuiteReport septic_example(const OracleOptions& opt) {
  SuiteReport rep{"septic-example", {}};
  for (long a = 1; a <= 4; ++a) {
    auto f = LaurentPoly::univariate(5, {{7, 1}, {4, a}});
    const std::string name = f.to_string() + " p=5";
    add_case(rep, name + " tables", [&](std::string& detail) {
      auto orbits = collect_orbits(f, 1, 4);
      bool ok = true;
      const std::vector<Rational> want{q(1, 4), q(3, 4), q(3, 2)};
      for (unsigned s = 2; s <= 4; ++s) {
        auto r = min_weight_ord(orbits, 5, 1, s, 4 * 2 * 4);
        detail += "c" + std::to_string(s) + "=" + to_string(r.ord_p) + " ";
        ok = ok && r.status == TableStatus::Definitive && r.ord_p == want[s - 2];
        if (s == 4 && !r.levels.empty()) {
          std::uint64_t a4 = static_cast<std::uint64_t>(a * a * a * a);
          std::uint64_t expect = std::uint64_t{invmod(12, 5)} * (a * a) % 5 * ((a4 + 7) % 5) % 5;
          detail += "unit sum " + std::to_string(r.levels[0].unit_sum) + " over " +
                    std::to_string(r.levels[0].count) + " tables";
          ok = ok && r.levels[0].unit_sum == expect;
        }
      }
      return ok;
    });
    add_case(rep, name + " oracle", [&](std::string& detail) {
      auto got = oracle_newton_polygon(f, std::nullopt, opt).polygon.slopes();
      detail = show(got);
      return got == std::vector<Rational>{q(1, 4), q(1, 2), q(1, 2), q(1, 2), q(1, 2), q(3, 4)};
    });
  }
  return rep;
}

SuiteReport two_variable(const OracleOptions& opt) {
  SuiteReport rep{"two-variable", {}};
  auto f = LaurentPoly(11, 2, {{{3, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  const std::vector<Rational> want{0, 0, q(1, 2), Rational(1), q(3, 2), q(7, 3) + q(2, 30), q(7, 2) + q(1, 10)};
  add_case(rep, "fiber reduction vs double sum k<=2", [&](std::string& detail) {
    OracleOptions naive = opt, reduced = opt;
    naive.fiber = FiberMode::Naive;
    reduced.fiber = FiberMode::Reduced;
    bool ok = quadratic_fiber_applicable(f);
    for (unsigned k = 1; k <= 2; ++k) ok = ok && exp_sum_star(f, k, naive) == exp_sum_star(f, k, reduced);
    detail = ok ? "S_1, S_2 agree" : "mismatch";
    return ok;
  });
  std::vector<std::optional<Rational>> oracle;
  add_case(rep, "oracle L0* to degree 6", [&](std::string& detail) {
    oracle = coefficient_ords(l0_star(f, 6, opt), 6);
    for (std::size_t s = 0; s < oracle.size(); ++s)
      detail += "c" + std::to_string(s) + "=" + (oracle[s] ? to_string(*oracle[s]) : "0") + " ";
    return true;
  });
  auto orbits = collect_orbits(f, 1, 6);
  for (unsigned s = 2; s <= 6; ++s) {
    MinWeightResult r;
    add_case(rep, "c" + std::to_string(s) + " tables", [&](std::string& detail) {
      r = min_weight_ord(orbits, 11, 1, s, 3 * 10 * s);
      detail = to_string(r.ord_q) + " " + table_status_name(r.status) + ", expected " + to_string(want[s]);
      return r.status == TableStatus::Definitive && r.ord_q == want[s];
    });
    add_case(rep, "c" + std::to_string(s) + " oracle", [&](std::string& detail) {
      if (oracle.size() <= s || !oracle[s]) return false;
      detail = to_string(*oracle[s]) + ", expected " + to_string(want[s]);
      if (r.status == TableStatus::Definitive && r.ord_q != *oracle[s]) detail += ", tables disagree";
      return *oracle[s] == want[s];
    });
  }
  return rep;
}

SuiteReport gross_koblitz_suite() {
  SuiteReport rep{"gross-koblitz", {}};
  for (auto [p, a] : std::vector<std::pair<std::uint32_t, unsigned>>{{5, 1}, {7, 1}, {3, 2}, {11, 1}}) {
    add_case(rep, "q=" + std::to_string(ipow(p, a)), [&](std::string& detail) {
      auto r = gross_koblitz_check(p, a, 4 * static_cast<long>(p - 1));
      detail = std::to_string(r.cases) + " values of k" + (r.ok() ? "" : ", first failure " + r.failures.front());
      return r.ok() && r.cases == ipow(p, a) - 1;
    });
  }
  return rep;
}

SuiteReport hasse_davenport_suite() {
  SuiteReport rep{"hasse-davenport", {}};
  for (std::uint32_t p : {5u, 7u})
    for (unsigned k : {2u, 3u})
      add_case(rep, "q=" + std::to_string(p) + " k=" + std::to_string(k), [&](std::string& detail) {
        auto r = hasse_davenport_check(p, 1, 1, k, 3 * static_cast<long>(p - 1));
        detail = std::to_string(r.cases) + " values of r";
        return r.ok();
      });
  return rep;
}

SuiteReport gauss_product(const OracleOptions& opt) {
  SuiteReport rep{"gauss-product", {}};
  for (std::uint32_t p : {5u, 7u}) {
    auto f = LaurentPoly::univariate(p, {{3, 1}, {1, 1}});
    const long M = 3 * static_cast<long>(p - 1);
    add_case(rep, "S_k via Gauss sums p=" + std::to_string(p), [&](std::string& detail) {
      bool ok = true;
      for (unsigned k = 1; k <= 3; ++k) {
        auto g = exp_sum_via_gauss(f, k, 1, M);
        ok = ok && g.ring.equal_mod(g.value, g.ring.embed(exp_sum_star(f, k, opt)), M);
      }
      detail = "k <= 3 mod pi^" + std::to_string(M);
      return ok;
    });
    add_case(rep, "truncated product p=" + std::to_string(p), [&](std::string& detail) {
      const long cutoff = 2 * static_cast<long>(p - 1);
      auto t = theorem_product(f, 3, 3, 1, M, cutoff);
      detail = "c_0..c_3 mod pi^" + std::to_string(cutoff);
      return series_match(t, lfunction_star(f, 3, opt).series, 3, cutoff);
    });
  }
  add_case(rep, "diagonal x^3 p=7", [&](std::string& detail) {
    auto f = LaurentPoly::univariate(7, {{3, 1}});
    detail = "D=4 mod pi^24";
    return series_match(wan_diagonal_lfunction(f, 4, 24), lfunction_star(f, 4, opt).series, 4, 24);
  });
  return rep;
}

SuiteReport l0_star_suite(const OracleOptions& opt) {
  SuiteReport rep{"l0-star", {}};
  auto f = LaurentPoly::univariate(11, {{3, 1}, {1, 1}});
  const unsigned D = 5;
  CycSeries direct, via;
  add_case(rep, "x^3+x p=11 two constructions", [&](std::string& detail) {
    direct = l0_star(f, D, opt);
    via = l0_star_from_lstar(lfunction_star(f, D, opt).series, 1, Integer(11));
    detail = "truncated at T^" + std::to_string(D);
    return direct == via;
  });
  add_case(rep, "x^3+x p=11 slopes below 1", [&](std::string& detail) {
    auto lp = newton_polygon(coefficient_ords(lfunction_star(f, 3, opt).series, 3));
    auto l0 = newton_polygon(coefficient_ords(direct, D));
    std::vector<Rational> a, b;
    for (const auto& s : lp.slopes())
      if (s < 1) a.push_back(s);
    for (const auto& s : l0.slopes())
      if (s < 1) b.push_back(s);
    detail = "L* " + show(a) + ", L0* " + show(b);
    return a == b;
  });
  return rep;
}

SuiteReport parity_suite() {
  SuiteReport rep{"parity", {}};
  std::mt19937 rng(7);
  for (unsigned n = 2; n <= 6; ++n)
    add_case(rep, "n=" + std::to_string(n), [&](std::string& detail) {
      bool ok = true;
      std::uint64_t checked = 0;
      for (int trial = 0; trial < 5; ++trial) {
        Labels f(n);
        for (auto& x : f) x = static_cast<long long>(rng() % 3);
        auto Gf = fiber_group(f);
        const auto Sn = all_perms(n);
        std::vector<Perm> coset;
        const Perm& tau = Sn[rng() % Sn.size()];
        for (const auto& s : Gf) coset.push_back(perm_compose(s, tau));
        for (const std::vector<Perm>* G : {&Sn, static_cast<const std::vector<Perm>*>(&Gf), static_cast<const std::vector<Perm>*>(&coset)}) {
          auto r = parity_cancellation_check(*G, f);
          ok = ok && r.hypothesis && r.ok();
          ++checked;
        }
        for (const auto& a : Sn) ok = ok && is_f_simple(a, f) == is_f_simple_bruteforce(a, f);
      }
      detail = std::to_string(checked) + " subsets";
      return ok;
    });
  return rep;
}

}  // namespace

std::vector<std::string> suite_ids() {
  std::vector<std::string> ids{"cubic", "quartic", "sextic"};
  for (const auto& c : sextic_cases()) ids.push_back("sextic:" + c.id);
  for (const char* s : {"cubic-shift", "septic-example", "two-variable", "gross-koblitz", "hasse-davenport",
                        "gauss-product", "l0-star", "parity"})
    ids.push_back(s);
  return ids;
}

SuiteReport reproduce(const std::string& id, const OracleOptions& opt) {
  if (id == "cubic") return cubic(opt);
  if (id == "quartic") return quartic(opt);
  if (id == "sextic") return sextic("", opt);
  if (id.rfind("sextic:", 0) == 0) return sextic(id.substr(7), opt);
  if (id == "cubic-shift") return cubic_shift(opt);
  if (id == "septic-example") return septic_example(opt);
  if (id == "two-variable") return two_variable(opt);
  if (id == "gross-koblitz") return gross_koblitz_suite();
  if (id == "hasse-davenport") return hasse_davenport_suite();
  if (id == "gauss-product") return gauss_product(opt);
  if (id == "l0-star") return l0_star_suite(opt);
  if (id == "parity") return parity_suite();
  fail(Errc::UnknownSuite, "unknown suite '" + id + "'");
}

}  // namespace lnewton
