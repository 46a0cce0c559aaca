#include "lnewton/nondegeneracy.hpp"

#include <algorithm>

#include "lnewton/error.hpp"

namespace lnewton {

bool is_nondegenerate_1var(const LaurentPoly& f) {
  require(f.nvars() == 1 && f.is_polynomial(), Errc::Unsupported, "univariate polynomial expected");
  int d = f.degree();
  require(d >= 1, Errc::InvalidArgument, "degree must be positive");
  return d % static_cast<int>(f.p()) != 0;
}

namespace {

std::vector<std::vector<Term>> faces_without_origin(const LaurentPoly& f) {
  std::vector<std::vector<Term>> faces;
  auto pick = [&](auto on_face) {
    std::vector<Term> out;
    for (const auto& t : f.terms())
      if (on_face(t)) out.push_back(t);
    if (!out.empty()) faces.push_back(out);
  };
  if (f.nvars() == 1) {
    int lo = 0, hi = 0;
    for (const auto& t : f.terms()) {
      lo = std::min(lo, t.exp[0]);
      hi = std::max(hi, t.exp[0]);
    }
    if (hi != 0) pick([&](const Term& t) { return t.exp[0] == hi; });
    if (lo != 0) pick([&](const Term& t) { return t.exp[0] == lo; });
    return faces;
  }
  require(f.nvars() == 2, Errc::Unsupported, "face search implemented for n <= 2");
  std::vector<std::pair<long, long>> pts{{0, 0}};
  for (const auto& t : f.terms()) pts.emplace_back(t.exp[0], t.exp[1]);
  auto h = convex_hull(pts);
  for (const auto& v : h) {
    if (v == std::pair<long, long>{0, 0}) continue;
    pick([&](const Term& t) { return t.exp[0] == v.first && t.exp[1] == v.second; });
  }
  if (h.size() < 3) return faces;
  auto on_segment = [](std::pair<long, long> a, std::pair<long, long> b, long x, long y) {
    long cr = (b.first - a.first) * (y - a.second) - (b.second - a.second) * (x - a.first);
    if (cr != 0) return false;
    return std::min(a.first, b.first) <= x && x <= std::max(a.first, b.first) &&
           std::min(a.second, b.second) <= y && y <= std::max(a.second, b.second);
  };
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto a = h[i], b = h[(i + 1) % h.size()];
    if (on_segment(a, b, 0, 0)) continue;
    pick([&](const Term& t) { return on_segment(a, b, t.exp[0], t.exp[1]); });
  }
  return faces;
}

}  // namespace

std::optional<DegeneracyWitness> degeneracy_witness_search(const LaurentPoly& f, unsigned e_max) {
  const unsigned n = f.nvars();
  const std::uint32_t p = f.p();
  auto faces = faces_without_origin(f);
  for (unsigned e = 1; e <= e_max; ++e) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    std::uint64_t points = 1;
    for (unsigned i = 0; i < n; ++i) points *= (q - 1);
    require(points <= 50'000'000, Errc::SizeExceeded, "torus too large for witness search");
    FieldCtx F(p, e);
    std::vector<FqElem> antilog(q - 1);
    FqElem cur = F.one();
    for (auto& a : antilog) {
      a = cur;
      cur = F.mul(cur, F.generator());
    }
    const long long N = static_cast<long long>(q - 1);
    for (const auto& face : faces) {
      // partial derivatives as (log coefficient, exponent) lists
      std::vector<std::vector<std::pair<long long, std::vector<int>>>> partials(n);
      for (unsigned i = 0; i < n; ++i) {
        for (const auto& t : face) {
          long long c = (static_cast<long long>(t.coeff) * (((t.exp[i] % (long long)p) + p) % p)) % p;
          if (c == 0) continue;
          auto ex = t.exp;
          ex[i] -= 1;
          partials[i].push_back({static_cast<long long>(F.log_of_prime_field(static_cast<std::uint32_t>(c))), ex});
        }
      }
      std::vector<std::uint64_t> idx(n, 0);
      for (std::uint64_t pt = 0; pt < points; ++pt) {
        std::uint64_t r = pt;
        for (unsigned i = 0; i < n; ++i) {
          idx[i] = r % (q - 1);
          r /= (q - 1);
        }
        bool all_zero = true;
        for (unsigned i = 0; i < n && all_zero; ++i) {
          FqElem s = F.zero();
          for (const auto& [lc, ex] : partials[i]) {
            long long l = lc;
            for (unsigned j = 0; j < n; ++j) l += static_cast<long long>(ex[j]) * static_cast<long long>(idx[j]);
            l %= N;
            if (l < 0) l += N;
            s = F.add(s, antilog[l]);
          }
          all_zero = (s == F.zero());
        }
        if (all_zero) {
          DegeneracyWitness w{face, e, {}};
          for (unsigned i = 0; i < n; ++i) w.point.push_back(antilog[idx[i]]);
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace lnewton
