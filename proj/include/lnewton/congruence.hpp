#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lnewton/laurent.hpp"
#include "lnewton/rational.hpp"

namespace lnewton {

/// n x m integer matrix; column i is the exponent vector V_i.
using IntMatrix = std::vector<std::vector<long long>>;

/// Exponent matrix of the nonconstant terms of f, in term order.
IntMatrix exponent_matrix(const LaurentPoly& f);

/// Solutions r in [0,1)^m stored as numerators k = (q^d - 1) r, sorted lexicographically.
class SolutionSet {
 public:
  SolutionSet(unsigned m, std::uint64_t N) : m_(m), N_(N) {}

  unsigned width() const { return m_; }
  std::uint64_t denominator() const { return N_; }
  std::size_t size() const { return m_ == 0 ? 0 : flat_.size() / m_; }
  std::span<const std::uint64_t> operator[](std::size_t i) const { return {flat_.data() + i * m_, m_}; }
  /// Index of k, or size() if absent.
  std::size_t find(std::span<const std::uint64_t> k) const;
  bool contains(std::span<const std::uint64_t> k) const { return find(k) != size(); }

  void push_back(std::span<const std::uint64_t> k) { flat_.insert(flat_.end(), k.begin(), k.end()); }
  void sort();

 private:
  unsigned m_;
  std::uint64_t N_;
  std::vector<std::uint64_t> flat_;
};

struct SmithForm {
  std::vector<long long> diagonal;  ///< nonzero invariant factors
  IntMatrix W;                      ///< unimodular m x m with U V W = diag
};

SmithForm smith_form(const IntMatrix& V);

/// |H(q, d)| = prod gcd(d_i, N) * N^{m - rank}.
std::uint64_t count_H(const IntMatrix& V, std::uint64_t q, unsigned d);

/// H(q, d): all k in [0, N)^m with V k = 0 mod N, N = q^d - 1.
SolutionSet enumerate_H(const IntMatrix& V, std::uint64_t q, unsigned d,
                        std::uint64_t budget = 50'000'000);

/// S(q, d): elements of H(q, d) whose exact period is d.
SolutionSet sp_qd(const IntMatrix& V, std::uint64_t q, unsigned d, std::uint64_t budget = 50'000'000);

/// Smallest d' dividing d with (q^{d'} - 1) k / N integral.
unsigned exact_period(std::span<const std::uint64_t> k, std::uint64_t N, std::uint64_t q, unsigned d);

struct Orbit {
  std::vector<std::uint64_t> rep;  ///< lexicographically smallest member
  unsigned level = 0;              ///< orbit size
};

/// Orbits of r -> q r mod Z^m; throws NotClosed if the set is not stable.
std::vector<Orbit> orbit_decompose(const SolutionSet& S, std::uint64_t q);

struct CountCheck {
  std::uint64_t actual = 0;     ///< |S(q, d)|
  std::uint64_t mobius = 0;     ///< sum_{e | d} mu(d/e) |H(q, e)|
  std::uint64_t cyclic = 0;     ///< sum_{e | d} mu(d/e) (q^e - 1)
  bool cyclic_applicable = false;  ///< |H(q, e)| = q^e - 1 for every e | d
  bool ok() const { return actual == mobius && (!cyclic_applicable || actual == cyclic); }
};

CountCheck count_check(const IntMatrix& V, std::uint64_t q, unsigned d);

int mobius(std::uint64_t n);

/// Smallest d with (q^d - 1) r integral; denominators must be prime to q.
unsigned period_of(const std::vector<Rational>& r, std::uint64_t q);

}  // namespace lnewton
