#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lnewton/digits.hpp"
#include "lnewton/laurent.hpp"

namespace lnewton {

/// One q-orbit of S_p(q, d) with its digit block.
struct OrbitEntry {
  unsigned level = 0;
  std::vector<std::uint64_t> rep;
  Block block;
  std::uint64_t weight = 0;
  std::uint32_t unit = 0;  ///< block_unit of the block
};

/// Orbits of levels 1..s_max, sorted by (level, weight, rep).
std::vector<OrbitEntry> collect_orbits(const LaurentPoly& f, unsigned a, unsigned s_max,
                                       std::uint64_t budget = 50'000'000);

struct WeightLevel {
  std::uint64_t weight = 0;
  std::uint64_t count = 0;          ///< tables of this weight
  std::uint32_t unit_sum = 0;       ///< sum of unit parts mod p
  std::vector<DigitTable> tables;   ///< up to the certificate cap
  /// Unit sums per class of tables sharing the same multiset of columns.
  std::map<std::vector<std::vector<std::uint32_t>>, std::uint32_t> classes;
};

enum class TableStatus { Definitive, Cancellation, Inconclusive };
const char* table_status_name(TableStatus s);

struct MinWeightResult {
  TableStatus status = TableStatus::Inconclusive;
  unsigned s = 0;
  Rational ord_p;        ///< valid when Definitive; otherwise the candidate from the first nonzero level
  Rational ord_q;
  Rational lower_bound;  ///< rigorous lower bound on ord_p c_s
  std::vector<WeightLevel> levels;
};

/// ord c_s of L_0^*(f / F_q, T) from the tables of least weight. Levels whose unit sum vanishes
/// are recorded and the search moves on to the next weight, up to max_levels levels.
MinWeightResult min_weight_ord(const LaurentPoly& f, unsigned a, unsigned s, std::uint64_t weight_cap,
                               std::size_t max_levels = 4, std::size_t certificate_cap = 64);

/// Same search on precomputed orbits.
MinWeightResult min_weight_ord(const std::vector<OrbitEntry>& orbits, std::uint32_t p, unsigned a, unsigned s,
                               std::uint64_t weight_cap, std::size_t max_levels = 4,
                               std::size_t certificate_cap = 64);

/// Calls fn(table) for every table with s blocks-levels and weight in [lo, hi].
void for_each_table(const std::vector<OrbitEntry>& orbits, unsigned s, std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(const std::vector<std::size_t>&, std::uint64_t)>& fn);

}  // namespace lnewton
