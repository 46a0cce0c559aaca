#include "lnewton/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lnewton/error.hpp"

namespace lnewton {

Perm perm_identity(unsigned n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<unsigned>(i);
  return r;
}

std::vector<std::vector<unsigned>> perm_cycles(const Perm& a) {
  std::vector<char> seen(a.size(), 0);
  std::vector<std::vector<unsigned>> out;
  for (unsigned i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    std::vector<unsigned> c;
    for (unsigned j = i; !seen[j]; j = a[j]) {
      seen[j] = 1;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

int perm_sign(const Perm& a) {
  std::size_t even_cycles = 0;
  for (const auto& c : perm_cycles(a))
    if (c.size() % 2 == 0) ++even_cycles;
  return even_cycles % 2 ? -1 : 1;
}

std::vector<Perm> all_perms(unsigned n) {
  require(n <= 10, Errc::SizeExceeded, "too many permutations");
  std::vector<Perm> out;
  Perm p = perm_identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Perm> fiber_group(const Labels& f) {
  const unsigned n = static_cast<unsigned>(f.size());
  std::vector<Perm> out;
  for (auto& p : all_perms(n)) {
    bool ok = true;
    for (unsigned i = 0; i < n && ok; ++i) ok = f[p[i]] == f[i];
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

bool is_f_simple_bruteforce(const Perm& a, const Labels& f) {
  require(f.size() <= 9, Errc::SizeExceeded, "brute-force centralizer limited to n <= 9");
  const Perm id = perm_identity(static_cast<unsigned>(a.size()));
  for (const auto& s : fiber_group(f))
    if (s != id && perm_compose(s, a) == perm_compose(a, s)) return false;
  return true;
}

namespace {

std::vector<long long> min_rotation(std::vector<long long> x) {
  std::vector<long long> best = x;
  for (std::size_t r = 1; r < x.size(); ++r) {
    std::rotate(x.begin(), x.begin() + 1, x.end());
    best = std::min(best, x);
  }
  return best;
}

}  // namespace

bool is_f_simple(const Perm& a, const Labels& f) {
  std::set<std::vector<long long>> kernels;
  for (const auto& c : perm_cycles(a)) {
    std::vector<long long> lab;
    for (unsigned i : c) lab.push_back(f[i]);
    const std::size_t m = lab.size();
    for (std::size_t d = 1; d < m; ++d) {
      if (m % d) continue;
      bool periodic = true;
      for (std::size_t i = d; i < m && periodic; ++i) periodic = lab[i] == lab[i - d];
      if (periodic) return false;
    }
    if (!kernels.insert(min_rotation(lab)).second) return false;
  }
  return true;
}

ParityReport parity_cancellation_check(const std::vector<Perm>& G, const Labels& f) {
  ParityReport r;
  const auto Gf = fiber_group(f);
  std::set<Perm> Gs(G.begin(), G.end());
  r.hypothesis = true;
  for (const auto& s : Gf) {
    for (const auto& g : G)
      if (!Gs.count(perm_compose(s, g))) {
        r.hypothesis = false;
        break;
      }
    if (!r.hypothesis) break;
  }
  std::uint64_t even = 0, odd = 0;
  std::vector<Perm> simple;
  for (const auto& g : Gs) {
    const bool e = perm_sign(g) == 1;
    (e ? even : odd)++;
    if (is_f_simple(g, f))
      simple.push_back(g);
    else
      (e ? r.even_non_simple : r.odd_non_simple)++;
  }
  r.conjugation_hypothesis = r.hypothesis && even == odd;
  for (const auto& a : simple) {
    if (!r.conjugation_hypothesis) break;
    for (const auto& s : Gf)
      if (!Gs.count(perm_compose(perm_compose(s, a), perm_inverse(s)))) {
        r.conjugation_hypothesis = false;
        break;
      }
  }
  if (r.conjugation_hypothesis) {
    std::set<Perm> done;
    for (const auto& a : simple) {
      if (done.count(a)) continue;
      for (const auto& s : Gf) done.insert(perm_compose(perm_compose(s, a), perm_inverse(s)));
      (perm_sign(a) == 1 ? r.even_classes : r.odd_classes)++;
    }
  }
  return r;
}

std::vector<Perm> carry_compatible_perms(const std::vector<long long>& u, const std::vector<long long>& v) {
  require(u.size() == v.size(), Errc::InvalidArgument, "u and v differ in length");
  std::vector<Perm> out;
  for (auto& b : all_perms(static_cast<unsigned>(u.size()))) {
    bool ok = true;
    for (std::size_t w = 0; w < u.size() && ok; ++w) ok = v[b[w]] == u[w];
    if (ok) out.push_back(std::move(b));
  }
  return out;
}

}  // namespace lnewton
