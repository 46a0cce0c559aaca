#include "lnewton/document.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "lnewton/error.hpp"

namespace lnewton {

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::uint32_t p) : s_(text), p_(p) {}

  ParsedPoly run() {
    std::vector<std::pair<std::vector<int>, Integer>> raw;
    skip();
    if (pos_ == s_.size()) error("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        error("expected + or -");
      }
      std::size_t start = pos_;
      auto [exp, c] = term();
      raw.push_back({exp, c * sign});
      terms_text_.push_back(s_.substr(start, pos_ - start));
      first = false;
      skip();
    }
    const unsigned n = uses_y_ ? 2 : 1;
    ParsedPoly out;
    std::vector<std::pair<std::vector<int>, long long>> terms;
    std::map<std::vector<int>, Integer> merged;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      std::vector<int> e(raw[i].first.begin(), raw[i].first.begin() + n);
      Integer r = raw[i].second % p_;
      if (r < 0) r += p_;
      if (r == 0) out.warnings.push_back("term '" + terms_text_[i] + "' vanishes mod " + std::to_string(p_));
      merged[e] += r;
    }
    for (auto& [e, c] : merged) {
      Integer r = c % p_;
      if (r == 0) continue;
      terms.push_back({e, r.get_si()});
    }
    out.f = LaurentPoly(p_, n, terms);
    if (out.f.empty()) error("polynomial is zero mod " + std::to_string(p_));
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::SyntaxError, "at position " + std::to_string(pos_) + ": " + msg);
  }

  Integer integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) error("expected a number");
    return Integer(s_.substr(start, pos_ - start));
  }

  int exponent() {
    skip();
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
      skip();
    }
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
      skip();
    }
    Integer e = integer();
    if (e > 10000) error("exponent too large");
    skip();
    if (paren) {
      if (peek() != ')') error("expected )");
      ++pos_;
    }
    return sign * static_cast<int>(e.get_si());
  }

  std::pair<std::vector<int>, Integer> term() {
    std::vector<int> exp(2, 0);
    Integer c = 1;
    bool any = false;
    while (true) {
      skip();
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= integer();
      } else if (ch == 'x' || ch == 'y') {
        ++pos_;
        const int v = ch == 'x' ? 0 : 1;
        if (v == 1) uses_y_ = true;
        int e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          e = exponent();
        }
        exp[v] += e;
      } else {
        if (!any) error(ch ? std::string("unexpected '") + ch + "'" : "unexpected end of input");
        break;
      }
      any = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (!peek()) error("dangling *");
      }
    }
    return {exp, c};
  }

  const std::string& s_;
  std::uint32_t p_;
  std::size_t pos_ = 0;
  bool uses_y_ = false;
  std::vector<std::string> terms_text_;
};

using json = nlohmann::ordered_json;

}  // namespace

ParsedPoly parse_poly(const std::string& text, std::uint32_t p) {
  require(p >= 2, Errc::InvalidPrime, "p must be given");
  return Parser(text, p).run();
}

void PolygonDocument::set_polygon(const NewtonPolygon& np) {
  vertices.clear();
  slopes.clear();
  for (const auto& v : np.vertices()) vertices.push_back({v.x, v.y});
  for (const auto& s : np.segments()) {
    require(s.length.get_den() == 1, Errc::InternalError, "non-integral segment length");
    slopes.push_back({s.slope, s.length.get_num().get_si()});
  }
}

NewtonPolygon PolygonDocument::polygon() const {
  std::vector<NPVertex> v;
  for (const auto& [x, y] : vertices) v.push_back({x, y});
  return NewtonPolygon(v);
}

json rational_json(const Rational& r) {
  return json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Rational rational_from_json(const json& j) {
  Rational r(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
  require(r.get_den() != 0, Errc::SyntaxError, "zero denominator");
  r.canonicalize();
  return r;
}

std::string to_json(const PolygonDocument& d) {
  json j;
  j["schema_version"] = d.schema_version;
  j["command"] = d.command;
  j["f"] = d.f;
  j["p"] = d.p;
  j["a"] = d.a;
  j["method"] = d.method;
  j["status"] = d.status;
  j["normalization"] = d.normalization;
  j["runtime_ms"] = d.runtime_ms;
  j["flags"] = d.flags;
  j["warnings"] = d.warnings;
  json v = json::array();
  for (const auto& [x, y] : d.vertices) v.push_back(json{{"x", rational_json(x)}, {"y", rational_json(y)}});
  j["vertices"] = v;
  json s = json::array();
  for (const auto& [x, m] : d.slopes) s.push_back(json{{"slope", rational_json(x)}, {"multiplicity", m}});
  j["slopes"] = s;
  j["certificates"] = d.certificates;
  if (!d.error_code.empty()) j["error"] = json{{"code", d.error_code}, {"message", d.error_message}};
  return j.dump(2) + "\n";
}

PolygonDocument document_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::SyntaxError, e.what());
  }
  PolygonDocument d;
  try {
    d.schema_version = j.at("schema_version").get<int>();
    require(d.schema_version == kSchemaVersion, Errc::Unsupported,
            "schema_version " + std::to_string(d.schema_version));
    d.command = j.at("command").get<std::string>();
    d.f = j.at("f").get<std::string>();
    d.p = j.at("p").get<std::uint32_t>();
    d.a = j.at("a").get<unsigned>();
    d.method = j.at("method").get<std::string>();
    d.status = j.at("status").get<std::string>();
    d.normalization = j.at("normalization").get<std::string>();
    d.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
    d.flags = j.at("flags").get<std::vector<std::string>>();
    d.warnings = j.at("warnings").get<std::vector<std::string>>();
    for (const auto& v : j.at("vertices")) d.vertices.push_back({rational_from_json(v.at("x")), rational_from_json(v.at("y"))});
    for (const auto& s : j.at("slopes"))
      d.slopes.push_back({rational_from_json(s.at("slope")), s.at("multiplicity").get<long>()});
    d.certificates = j.at("certificates");
    if (j.contains("error")) {
      d.error_code = j["error"].at("code").get<std::string>();
      d.error_message = j["error"].at("message").get<std::string>();
    }
  } catch (const json::exception& e) {
    fail(Errc::SyntaxError, e.what());
  }
  return d;
}

std::string to_csv(const PolygonDocument& d) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream o;
  o << "kind,key,value\n";
  o << "meta,schema_version," << d.schema_version << "\n";
  o << "meta,command," << d.command << "\n";
  o << "meta,f," << quote(d.f) << "\n";
  o << "meta,p," << d.p << "\n";
  o << "meta,a," << d.a << "\n";
  o << "meta,method," << d.method << "\n";
  o << "meta,status," << d.status << "\n";
  o << "meta,normalization," << d.normalization << "\n";
  o << "meta,runtime_ms," << d.runtime_ms << "\n";
  for (const auto& f : d.flags) o << "flag,," << quote(f) << "\n";
  for (const auto& w : d.warnings) o << "warning,," << quote(w) << "\n";
  for (const auto& [x, y] : d.vertices) o << "vertex," << to_fraction(x) << "," << to_fraction(y) << "\n";
  for (const auto& [s, m] : d.slopes) o << "slope," << to_fraction(s) << "," << m << "\n";
  if (!d.error_code.empty()) o << "error," << d.error_code << "," << quote(d.error_message) << "\n";
  return o.str();
}

}  // namespace lnewton
