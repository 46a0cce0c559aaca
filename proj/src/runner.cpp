#include "lnewton/runner.hpp"

#include <chrono>

#include "lnewton/congruence.hpp"
#include "lnewton/error.hpp"
#include "lnewton/ffield.hpp"
#include "lnewton/gauss.hpp"
#include "lnewton/slopes.hpp"
#include "lnewton/tables.hpp"

namespace lnewton {

namespace {

using json = nlohmann::ordered_json;

json coefficient_json(const CycSeries& s, std::size_t upto, unsigned a) {
  json out = json::array();
  auto ords = coefficient_ords(s, upto);
  for (std::size_t i = 0; i < ords.size(); ++i) {
    json c{{"s", i}};
    c["ord_q"] = ords[i] ? rational_json(*ords[i] / Rational(a)) : json(nullptr);
    out.push_back(c);
  }
  return out;
}

void run_oracle(const LaurentPoly& f, const OracleOptions& opt, PolygonDocument& d) {
  auto r = oracle_newton_polygon(f, std::nullopt, opt);
  d.set_polygon(r.polygon);
  d.status = r.lfunction.vanishing_violations.empty() ? "proved" : "inconclusive";
  d.flags.push_back(r.affine ? "polygon-of-L" : "polygon-of-L-star");
  if (r.lfunction.checked_beyond_bound) d.flags.push_back("vanishing-checked");
  if (!r.lfunction.vanishing_violations.empty()) d.flags.push_back("degree-bound-violated");
  if (!believed_nondegenerate(f)) d.flags.push_back("possibly-degenerate");
  d.certificates["oracle"] = json{{"degree_bound", r.lfunction.degree_bound},
                                  {"coefficients", coefficient_json(r.lfunction.series,
                                                                    r.lfunction.series.degree_cap(), opt.a)}};
}

json slope_reports_json(const SmallDegreePolygon& s) {
  json reps = json::array();
  for (const auto& r : s.reports) {
    json trace = json::array();
    for (const auto& [x, v] : r.trace) trace.push_back(json::array({x, v}));
    reps.push_back(json{{"s", r.s},
                        {"R", r.R},
                        {"lambda", rational_json(r.lambda)},
                        {"status", slope_status_name(r.status)},
                        {"trace", trace}});
  }
  return json{{"normalized_f", s.normalized.f.to_string()},
              {"shift", s.normalized.b},
              {"scale", s.normalized.scale},
              {"lambda", reps}};
}

void run_slopes(const LaurentPoly& f, const OracleOptions& opt, PolygonDocument& d) {
  auto s = full_np_small_d(f, opt, false);
  d.set_polygon(s.polygon);
  d.status = "proved";
  d.flags.push_back("polygon-of-L");
  d.certificates["slopes"] = slope_reports_json(s);
}

void run_tables(const LaurentPoly& f, const JobSpec& job, PolygonDocument& d) {
  const std::uint32_t p = f.p();
  auto orbits = collect_orbits(f, job.a, job.s_max, job.budget);
  // no table can weigh more than this, so the search below is exhaustive
  const std::uint64_t cap = std::uint64_t{f.terms().size()} * (p - 1) * job.a * job.s_max;
  std::vector<NPVertex> pts{{Rational(0), Rational(0)}};
  bool all = true;
  json coeffs = json::array();
  for (unsigned s = 1; s <= job.s_max; ++s) {
    auto r = min_weight_ord(orbits, p, job.a, s, cap, 4, 16);
    json c{{"s", s}, {"status", table_status_name(r.status)}};
    if (r.status == TableStatus::Definitive) {
      pts.push_back({Rational(s), r.ord_q});
      c["ord_q"] = rational_json(r.ord_q);
      c["ord_p"] = rational_json(r.ord_p);
    } else {
      all = false;
      c["lower_bound_ord_p"] = rational_json(r.lower_bound);
      if (r.status == TableStatus::Cancellation && r.ord_p != 0) c["candidate_ord_p"] = rational_json(r.ord_p);
    }
    json levels = json::array();
    for (const auto& L : r.levels) {
      json tabs = json::array();
      for (const auto& t : L.tables) {
        json blocks = json::array();
        for (const auto& b : t.blocks) blocks.push_back(json{{"level", b.level}, {"digits", b.digits}});
        tabs.push_back(blocks);
      }
      levels.push_back(json{{"weight", L.weight}, {"count", L.count}, {"unit_sum", L.unit_sum}, {"tables", tabs}});
    }
    c["levels"] = levels;
    coeffs.push_back(c);
  }
  d.set_polygon(lower_hull(pts));
  d.status = all ? "proved" : "inconclusive";
  d.flags.push_back("coefficients-0.." + std::to_string(job.s_max));
  d.flags.push_back(f.terms().size() > f.nvars() ? "series-L0-star" : "series-L-star");
  d.certificates["tables"] = coeffs;
}

bool slopes_applicable(const LaurentPoly& f, unsigned a) {
  if (a != 1 || f.nvars() != 1 || !f.is_polynomial()) return false;
  const int d = f.degree();
  if (d < 3 || d > 6 || d % static_cast<int>(f.p()) == 0) return false;
  long sum = 0;
  const auto g = normalize_shift(f);
  for (const auto& t : g.f.terms()) sum += t.exp[0];
  return static_cast<long>(f.p()) >= sum;
}

void run_auto(const LaurentPoly& f, const JobSpec& job, const OracleOptions& opt, PolygonDocument& d) {
  if (slopes_applicable(f, job.a)) {
    std::optional<SmallDegreePolygon> s;
    try {
      s = full_np_small_d(f, opt, false);
    } catch (const Error& e) {
      if (e.code() != Errc::RegimeError) throw;
      d.flags.push_back("slopes-inconclusive");
    }
    if (s) {
      d.certificates["slopes"] = slope_reports_json(*s);
      d.set_polygon(s->polygon);
      d.method = "auto:slopes";
      d.status = "proved";
      d.flags.push_back("polygon-of-L");
      const unsigned D = f.degree() - 1;
      if (enumeration_cost(f, D, opt) <= opt.budget) {
        auto o = oracle_newton_polygon(f, D, opt);
        require(o.polygon.slopes() == s->polygon.slopes(), Errc::IdentityViolation,
                "slopes " + slopes_to_string(s->polygon.slopes()) + " but oracle " +
                    slopes_to_string(o.polygon.slopes()));
        d.method = "auto:slopes+oracle";
        d.flags.push_back("agreement-checked");
      }
      return;
    }
  }
  run_oracle(f, opt, d);
  d.method = "auto:oracle";
}

void run_gauss_check(const JobSpec& job, PolygonDocument& d) {
  const long M = job.precision > 0 ? job.precision : 4 * static_cast<long>(job.p - 1);
  std::vector<CheckReport> reps{gross_koblitz_check(job.p, job.a, M), interpolation_check(job.p, job.a, M)};
  for (unsigned k : {2u, 3u}) reps.push_back(hasse_davenport_check(job.p, job.a, 1, k, M));
  json out = json::array();
  bool ok = true;
  for (const auto& r : reps) {
    ok = ok && r.ok();
    out.push_back(json{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}});
  }
  d.certificates["checks"] = out;
  d.certificates["precision"] = M;
  require(ok, Errc::IdentityViolation, "a Gauss sum identity failed; see certificates");
  d.status = "proved";
}

void run_congruence(const LaurentPoly& f, const JobSpec& job, PolygonDocument& d) {
  const std::uint64_t q = ipow(job.p, job.a);
  IntMatrix V = exponent_matrix(f);
  json levels = json::array();
  bool ok = true;
  for (unsigned lvl = 1; lvl <= job.s_max; ++lvl) {
    auto S = sp_qd(V, q, lvl, job.budget);
    auto orbits = orbit_decompose(S, q);
    auto c = count_check(V, q, lvl);
    ok = ok && c.ok();
    json reps = json::array();
    for (std::size_t i = 0; i < orbits.size() && i < 32; ++i) reps.push_back(orbits[i].rep);
    levels.push_back(json{{"level", lvl},
                          {"H", count_H(V, q, lvl)},
                          {"S", c.actual},
                          {"mobius", c.mobius},
                          {"orbits", orbits.size()},
                          {"representatives", reps}});
  }
  d.certificates["levels"] = levels;
  require(ok, Errc::IdentityViolation, "counting formula failed; see certificates");
  d.status = "proved";
}

}  // namespace

RunResult run(const JobSpec& job) {
  RunResult res;
  PolygonDocument& d = res.doc;
  d.command = job.command;
  d.method = job.command;
  d.p = job.p;
  d.a = job.a;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    require(is_prime(job.p), Errc::InvalidPrime, "p = " + std::to_string(job.p) + " is not prime");
    require(job.a >= 1, Errc::InvalidArgument, "a must be positive");
    OracleOptions opt;
    opt.a = job.a;
    opt.budget = job.budget;
    opt.threads = job.threads;
    if (job.command == "gauss-check") {
      run_gauss_check(job, d);
    } else {
      auto parsed = parse_poly(job.f, job.p);
      d.f = parsed.f.to_string();
      d.warnings = parsed.warnings;
      const LaurentPoly& f = parsed.f;
      if (job.command == "oracle")
        run_oracle(f, opt, d);
      else if (job.command == "slopes")
        run_slopes(f, opt, d);
      else if (job.command == "tables")
        run_tables(f, job, d);
      else if (job.command == "auto")
        run_auto(f, job, opt, d);
      else if (job.command == "congruence")
        run_congruence(f, job, d);
      else
        fail(Errc::InvalidArgument, "unknown command " + job.command);
    }
  } catch (const Error& e) {
    d.status = "error";
    d.error_code = errc_name(e.code());
    d.error_message = e.what();
  } catch (const std::exception& e) {
    d.status = "error";
    d.error_code = errc_name(Errc::InternalError);
    d.error_message = e.what();
  }
  d.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  res.exit_code = d.status == "proved" ? 0 : d.status == "inconclusive" ? 2 : 1;
  return res;
}

}  // namespace lnewton
