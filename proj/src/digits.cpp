#include "lnewton/digits.hpp"

#include <numeric>

#include "lnewton/error.hpp"

namespace lnewton {

std::uint32_t powmod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t invmod(std::uint64_t a, std::uint32_t p) {
  require(a % p != 0, Errc::NotInvertible, "zero has no inverse mod p");
  return powmod(a, p - 2, p);
}

FactorialTable::FactorialTable(std::uint32_t p) : p_(p), f_(p), inv_(p) {
  f_[0] = 1;
  for (std::uint32_t i = 1; i < p; ++i) f_[i] = static_cast<std::uint32_t>(std::uint64_t{f_[i - 1]} * i % p);
  for (std::uint32_t i = 0; i < p; ++i) inv_[i] = invmod(f_[i], p);
}

std::uint32_t FactorialTable::fact(std::uint64_t n) const {
  require(n < p_, Errc::ImpossibleTerm, "factorial argument not below p");
  return f_[n];
}

std::uint32_t FactorialTable::inv_fact(std::uint64_t n) const {
  require(n < p_, Errc::ImpossibleTerm, "factorial argument not below p");
  return inv_[n];
}

std::uint64_t Block::weight() const {
  std::uint64_t w = 0;
  for (const auto& row : digits) w = std::accumulate(row.begin(), row.end(), w);
  return w;
}

std::vector<std::uint32_t> Block::column(unsigned t) const {
  std::vector<std::uint32_t> c;
  for (const auto& row : digits) c.push_back(row[t]);
  return c;
}

Block block_from_numerators(const std::vector<std::uint64_t>& k, std::uint32_t p, unsigned columns,
                            unsigned level) {
  Block b;
  b.level = level;
  for (std::uint64_t x : k) {
    std::vector<std::uint32_t> row(columns);
    for (unsigned t = 0; t < columns; ++t, x /= p) row[t] = static_cast<std::uint32_t>(x % p);
    require(x == 0, Errc::InvalidArgument, "numerator has more digits than columns");
    b.digits.push_back(std::move(row));
  }
  return b;
}

std::vector<std::uint64_t> block_numerators(const Block& b, std::uint32_t p) {
  std::vector<std::uint64_t> out;
  for (const auto& row : b.digits) {
    std::uint64_t x = 0;
    for (unsigned t = row.size(); t-- > 0;) x = x * p + row[t];
    out.push_back(x);
  }
  return out;
}

std::uint64_t DigitTable::weight() const {
  std::uint64_t w = 0;
  for (const auto& b : blocks) w += b.weight();
  return w;
}

unsigned DigitTable::s() const {
  unsigned s = 0;
  for (const auto& b : blocks) s += b.level;
  return s;
}

Rational frac_part(const Rational& x) {
  Rational r = x - Rational(floor_of(x));
  r.canonicalize();
  return r;
}

std::vector<ColumnUV> column_uv(const Block& b, const std::vector<long long>& degrees, std::uint32_t p) {
  require(degrees.size() == b.digits.size(), Errc::InvalidArgument, "one degree per row");
  std::vector<ColumnUV> out;
  for (unsigned t = 0; t < b.columns(); ++t) {
    long long s = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i) s += degrees[i] * b.digits[i][t];
    long long v = ((-s) % static_cast<long long>(p) + p) % p;
    out.push_back({(s + v) / p, v});
  }
  return out;
}

bool carry_check(const Block& b, const std::vector<long long>& degrees, std::uint32_t p) {
  long long sum = std::accumulate(degrees.begin(), degrees.end(), 0LL);
  require(static_cast<long long>(p) >= sum, Errc::RegimeError, "carry condition needs p >= sum of degrees");
  auto uv = column_uv(b, degrees, p);
  const std::size_t c = uv.size();
  for (std::size_t t = 0; t < c; ++t)
    if (uv[(t + c - 1) % c].u != uv[t].v) return false;
  return true;
}

Rational table_valuation(const DigitTable& t, std::uint32_t p, unsigned a) {
  Rational r(Integer(static_cast<unsigned long>(t.weight())), Integer(static_cast<unsigned long>(p - 1) * a));
  r.canonicalize();
  return r;
}

std::uint32_t block_unit(const Block& b, const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
  require(coeffs.size() == b.digits.size(), Errc::InvalidArgument, "one coefficient per row");
  FactorialTable F(p);
  std::uint64_t u = p - 1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::uint64_t e = 0;
    for (std::uint32_t k : b.digits[i]) {
      u = u * F.inv_fact(k) % p;
      e += k;
    }
    u = u * powmod(coeffs[i], e, p) % p;
  }
  return static_cast<std::uint32_t>(u);
}

std::uint32_t unit_part(const DigitTable& t, const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
  std::uint64_t u = 1;
  for (const auto& b : t.blocks) u = u * block_unit(b, coeffs, p) % p;
  return static_cast<std::uint32_t>(u);
}

}  // namespace lnewton
