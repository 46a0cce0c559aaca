#pragma once

#include <cstdint>
#include <vector>

#include "lnewton/rational.hpp"

namespace lnewton {

/// Digits k_i[t] of one q-orbit; row i is the base-p expansion of (q^d - 1) r_i,
/// with level * a columns.
struct Block {
  unsigned level = 1;
  std::vector<std::vector<std::uint32_t>> digits;

  unsigned columns() const { return digits.empty() ? 0 : static_cast<unsigned>(digits[0].size()); }
  std::uint64_t weight() const;
  std::vector<std::uint32_t> column(unsigned t) const;
  friend bool operator==(const Block&, const Block&) = default;
};

Block block_from_numerators(const std::vector<std::uint64_t>& k, std::uint32_t p, unsigned columns,
                            unsigned level);
std::vector<std::uint64_t> block_numerators(const Block& b, std::uint32_t p);

struct DigitTable {
  std::vector<Block> blocks;
  std::uint64_t weight() const;
  /// Sum of the block levels.
  unsigned s() const;
};

/// {x} in [0, 1).
Rational frac_part(const Rational& x);

/// u, v with sum_i d_i k_i[t] = u p - v, 0 <= v < p, for each column t.
struct ColumnUV {
  long long u = 0;
  long long v = 0;
  friend bool operator==(const ColumnUV&, const ColumnUV&) = default;
};
std::vector<ColumnUV> column_uv(const Block& b, const std::vector<long long>& degrees, std::uint32_t p);

/// u[t-1] = v[t] cyclically. Requires p >= sum d_i.
bool carry_check(const Block& b, const std::vector<long long>& degrees, std::uint32_t p);

/// ord_p of a table's term, weight / (p - 1); divide by a for ord_q.
Rational table_valuation(const DigitTable& t, std::uint32_t p, unsigned a = 1);

/// Residue mod p of a term divided by pi^weight:
/// (-1)^{#blocks} prod a_i^{sum_t k_i[t]} prod 1 / k_i[t]!.
std::uint32_t unit_part(const DigitTable& t, const std::vector<std::uint32_t>& coeffs, std::uint32_t p);

/// Per-block factor -prod a_i^{sum_t k_i[t]} / k_i[t]! mod p.
std::uint32_t block_unit(const Block& b, const std::vector<std::uint32_t>& coeffs, std::uint32_t p);

/// n! and 1/n! mod p for 0 <= n < p.
class FactorialTable {
 public:
  explicit FactorialTable(std::uint32_t p);
  std::uint32_t fact(std::uint64_t n) const;
  std::uint32_t inv_fact(std::uint64_t n) const;
  std::uint32_t p() const { return p_; }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> f_, inv_;
};

std::uint32_t powmod(std::uint64_t b, std::uint64_t e, std::uint32_t p);
std::uint32_t invmod(std::uint64_t a, std::uint32_t p);

}  // namespace lnewton
