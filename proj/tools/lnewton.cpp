#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "lnewton/error.hpp"
#include "lnewton/runner.hpp"

using namespace lnewton;

namespace {

struct Common {
  std::uint32_t p = 0;
  unsigned a = 1;
  long precision = 0;
  std::uint64_t budget = 600'000'000;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* sub, Common& c, bool needs_p) {
  auto* p = sub->add_option("--p", c.p, "prime")->envname("LNEWTON_P");
  if (needs_p) p->required();
  sub->add_option("--a", c.a, "ground field F_q with q = p^a")->envname("LNEWTON_A")->capture_default_str();
  sub->add_option("--precision", c.precision, "pi-adic precision (gauss-check)")->envname("LNEWTON_PRECISION");
  sub->add_option("--budget", c.budget, "max points per exponential sum")->envname("LNEWTON_BUDGET")->capture_default_str();
  sub->add_option("--threads", c.threads, "worker threads")->envname("LNEWTON_THREADS")->capture_default_str();
  sub->add_option("--format", c.format, "json or csv")
      ->envname("LNEWTON_FORMAT")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", c.out, "write the document here instead of stdout")->envname("LNEWTON_OUT");
}

int emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "cannot write " << out << "\n";
    return 1;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton polygons of L-functions of exponential sums"};
  app.require_subcommand(1);
  Common c;
  std::string f;
  unsigned s_max = 4;
  std::vector<std::string> suites;

  const std::pair<const char*, const char*> cmds[] = {
      {"oracle", "Newton polygon by point counting"},
      {"slopes", "polygon of a univariate polynomial of degree 3..6 from lambda_s"},
      {"tables", "ord c_s from least-weight digit tables"},
      {"auto", "slopes when applicable, checked against the oracle"},
      {"congruence", "solution sets of the exponent congruence and their q-orbits"},
  };
  for (const auto& [name, help] : cmds) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, c, true);
    sub->add_option("f", f, "polynomial, e.g. \"x^3+2x\" or \"x^3+x*y+y^2\"")->required();
    if (std::string(name) == "tables" || std::string(name) == "congruence")
      sub->add_option("--s-max", s_max, "largest coefficient index or level")->capture_default_str();
  }
  auto* gc = app.add_subcommand("gauss-check", "Gross-Koblitz, Hasse-Davenport and interpolation checks");
  add_common(gc, c, true);
  auto* rp = app.add_subcommand("reproduce", "pinned reproduction suites");
  add_common(rp, c, false);
  rp->add_option("suite", suites, "suite ids, 'all' or 'list'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  CLI::App* sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();

  if (cmd == "reproduce") {
    if (suites.size() == 1 && suites[0] == "list") {
      for (const auto& id : suite_ids()) std::cout << id << "\n";
      return 0;
    }
    if (suites.size() == 1 && suites[0] == "all") {
      suites.clear();
      for (const auto& id : suite_ids())
        if (id.rfind("sextic:", 0) != 0) suites.push_back(id);
    }
    OracleOptions opt;
    opt.budget = c.budget;
    opt.threads = c.threads;
    bool ok = true;
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    std::string text;
    for (const auto& id : suites) {
      try {
        auto r = reproduce(id, opt);
        ok = ok && r.ok();
        text += format_report(r);
        nlohmann::ordered_json cases = nlohmann::ordered_json::array();
        for (const auto& cs : r.cases)
          cases.push_back({{"name", cs.name}, {"pass", cs.pass}, {"detail", cs.detail}, {"seconds", cs.seconds}});
        j.push_back({{"suite", id}, {"pass", r.ok()}, {"cases", cases}});
      } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
      }
    }
    if (emit(c.format == "json" ? j.dump(2) + "\n" : text, c.out)) return 1;
    return ok ? 0 : 1;
  }

  JobSpec job;
  job.command = cmd;
  job.f = f;
  job.p = c.p;
  job.a = c.a;
  job.precision = c.precision;
  job.budget = c.budget;
  job.threads = c.threads;
  job.s_max = s_max;
  auto res = run(job);
  for (const auto& w : res.doc.warnings) std::cerr << "warning: " << w << "\n";
  if (!res.doc.error_code.empty()) std::cerr << "error: " << res.doc.error_message << "\n";
  if (emit(c.format == "json" ? to_json(res.doc) : to_csv(res.doc), c.out)) return 1;
  return res.exit_code;
}
