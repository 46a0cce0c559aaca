#pragma once

#include <cstdint>
#include <vector>

namespace lnewton {

/// One-line form on {0, ..., n-1}.
using Perm = std::vector<unsigned>;
/// Labels f(0), ..., f(n-1).
using Labels = std::vector<long long>;

Perm perm_identity(unsigned n);
Perm perm_compose(const Perm& a, const Perm& b);  ///< (a b)(i) = a(b(i))
Perm perm_inverse(const Perm& a);
int perm_sign(const Perm& a);
std::vector<std::vector<unsigned>> perm_cycles(const Perm& a);
std::vector<Perm> all_perms(unsigned n);

/// G_f: permutations preserving the labels.
std::vector<Perm> fiber_group(const Labels& f);

/// Centralizer of a in G_f is trivial, by enumerating G_f (n <= 9).
bool is_f_simple_bruteforce(const Perm& a, const Labels& f);
/// Same predicate from the cycle structure: no cycle's label sequence has a proper period and
/// no two cycles carry rotations of the same label sequence.
bool is_f_simple(const Perm& a, const Labels& f);

struct ParityReport {
  bool hypothesis = false;  ///< sigma G = G for all sigma in G_f
  std::uint64_t even_non_simple = 0;
  std::uint64_t odd_non_simple = 0;
  bool conjugation_hypothesis = false;  ///< also closed under conjugation of f-simple elements, and balanced
  std::uint64_t even_classes = 0;
  std::uint64_t odd_classes = 0;
  bool ok() const {
    return hypothesis && even_non_simple == odd_non_simple && (!conjugation_hypothesis || even_classes == odd_classes);
  }
};

/// Parity balance of non-f-simple permutations in G and of G_f-conjugacy classes of f-simple ones.
ParityReport parity_cancellation_check(const std::vector<Perm>& G, const Labels& f);

/// {b : v(b(w)) = u(w) for all w}, the permutations of columns compatible with the carry condition.
std::vector<Perm> carry_compatible_perms(const std::vector<long long>& u, const std::vector<long long>& v);

}  // namespace lnewton
