#include "lnewton/laurent.hpp"

#include <algorithm>
#include <map>

#include "lnewton/error.hpp"

namespace lnewton {

LaurentPoly::LaurentPoly(std::uint32_t p, unsigned nvars,
                         const std::vector<std::pair<std::vector<int>, long long>>& terms)
    : p_(p), n_(nvars) {
  require(p >= 2, Errc::InvalidPrime, "characteristic must be prime");
  require(nvars >= 1, Errc::InvalidArgument, "need at least one variable");
  std::map<std::vector<int>, long long, std::greater<>> acc;
  for (const auto& [e, c] : terms) {
    require(e.size() == nvars, Errc::InvalidArgument, "exponent vector has wrong length");
    long long r = c % static_cast<long long>(p);
    if (r < 0) r += p;
    acc[e] = (acc[e] + r) % p;
  }
  for (const auto& [e, c] : acc)
    if (c != 0) terms_.push_back(Term{e, static_cast<std::uint32_t>(c)});
}

LaurentPoly LaurentPoly::univariate(std::uint32_t p, const std::vector<std::pair<int, long long>>& terms) {
  std::vector<std::pair<std::vector<int>, long long>> t;
  for (auto [e, c] : terms) t.push_back({{e}, c});
  return LaurentPoly(p, 1, t);
}

std::uint32_t LaurentPoly::constant_term() const {
  for (const auto& t : terms_)
    if (std::all_of(t.exp.begin(), t.exp.end(), [](int e) { return e == 0; })) return t.coeff;
  return 0;
}

LaurentPoly LaurentPoly::without_constant() const {
  LaurentPoly out = *this;
  std::erase_if(out.terms_, [](const Term& t) {
    return std::all_of(t.exp.begin(), t.exp.end(), [](int e) { return e == 0; });
  });
  return out;
}

LaurentPoly LaurentPoly::plus_constant(long long c) const {
  std::vector<std::pair<std::vector<int>, long long>> t;
  for (const auto& term : terms_) t.push_back({term.exp, term.coeff});
  t.push_back({std::vector<int>(n_, 0), c});
  return LaurentPoly(p_, n_, t);
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& t : terms_)
    for (int e : t.exp)
      if (e < 0) return false;
  return true;
}

int LaurentPoly::degree() const {
  require(n_ == 1, Errc::Unsupported, "degree is defined for univariate input");
  require(!terms_.empty(), Errc::EmptyInput, "zero polynomial");
  return terms_.front().exp[0];
}

std::vector<std::pair<long, long>> convex_hull(std::vector<std::pair<long, long>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](auto o, auto a, auto b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<long, long>> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& pt : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pt) <= 0) --k;
    h[k++] = pt;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

long LaurentPoly::normalized_volume() const {
  if (n_ == 1) {
    long lo = 0, hi = 0;
    for (const auto& t : terms_) {
      lo = std::min<long>(lo, t.exp[0]);
      hi = std::max<long>(hi, t.exp[0]);
    }
    return hi - lo;
  }
  require(n_ == 2, Errc::Unsupported, "volume implemented for n <= 2");
  std::vector<std::pair<long, long>> pts{{0, 0}};
  for (const auto& t : terms_) pts.emplace_back(t.exp[0], t.exp[1]);
  auto h = convex_hull(pts);
  if (h.size() < 3) return 0;
  long twice_area = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& a = h[i];
    const auto& b = h[(i + 1) % h.size()];
    twice_area += a.first * b.second - a.second * b.first;
  }
  return std::abs(twice_area);
}

LaurentPoly LaurentPoly::shift(long long b) const {
  require(n_ == 1 && is_polynomial(), Errc::Unsupported, "shift needs a univariate polynomial");
  const long long p = p_;
  long long bb = ((b % p) + p) % p;
  int d = terms_.empty() ? 0 : degree();
  std::vector<long long> out(d + 1, 0);
  // binomials mod p by Pascal's rule
  std::vector<std::vector<long long>> C(d + 1);
  for (int i = 0; i <= d; ++i) {
    C[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) C[i][j] = (C[i - 1][j - 1] + C[i - 1][j]) % p;
  }
  for (const auto& t : terms_) {
    int e = t.exp[0];
    long long bp = 1;
    for (int j = e; j >= 0; --j) {
      out[j] = (out[j] + static_cast<long long>(t.coeff) * C[e][j] % p * bp) % p;
      bp = bp * bb % p;
    }
  }
  std::vector<std::pair<int, long long>> t;
  for (int j = 0; j <= d; ++j) t.push_back({j, out[j]});
  return univariate(p_, t);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  auto var = [this](unsigned i) {
    if (n_ <= 3) return std::string(1, "xyz"[i]);
    return "x" + std::to_string(i + 1);
  };
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += "+";
    std::string mono;
    for (unsigned i = 0; i < n_; ++i) {
      if (t.exp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var(i);
      if (t.exp[i] != 1) mono += "^" + std::to_string(t.exp[i]);
    }
    if (mono.empty())
      out += std::to_string(t.coeff);
    else if (t.coeff == 1)
      out += mono;
    else
      out += std::to_string(t.coeff) + "*" + mono;
  }
  return out;
}

}  // namespace lnewton
