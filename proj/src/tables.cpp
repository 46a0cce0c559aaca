#include "lnewton/tables.hpp"

#include <algorithm>
#include <limits>

#include "lnewton/congruence.hpp"
#include "lnewton/error.hpp"
#include "lnewton/ffield.hpp"

namespace lnewton {

const char* table_status_name(TableStatus s) {
  switch (s) {
    case TableStatus::Definitive: return "definitive";
    case TableStatus::Cancellation: return "cancellation";
    case TableStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<OrbitEntry> collect_orbits(const LaurentPoly& f, unsigned a, unsigned s_max, std::uint64_t budget) {
  const std::uint32_t p = f.p();
  IntMatrix V = exponent_matrix(f);
  require(!V[0].empty(), Errc::InvalidArgument, "f has no nonconstant terms");
  std::vector<std::uint32_t> coeffs;
  for (const auto& t : f.terms())
    if (std::any_of(t.exp.begin(), t.exp.end(), [](int e) { return e != 0; })) coeffs.push_back(t.coeff);
  const std::uint64_t q = ipow(p, a);
  std::vector<OrbitEntry> out;
  for (unsigned d = 1; d <= s_max; ++d) {
    SolutionSet S = sp_qd(V, q, d, budget);
    for (const Orbit& o : orbit_decompose(S, q)) {
      OrbitEntry e;
      e.level = d;
      e.rep = o.rep;
      e.block = block_from_numerators(o.rep, p, d * a, d);
      e.weight = e.block.weight();
      e.unit = block_unit(e.block, coeffs, p);
      out.push_back(std::move(e));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const OrbitEntry& x, const OrbitEntry& y) {
    return std::tie(x.level, x.weight) < std::tie(y.level, y.weight);
  });
  return out;
}

namespace {

struct Search {
  const std::vector<OrbitEntry>& orbits;
  std::vector<std::size_t> level_end;  // index one past the last orbit of each level
  std::vector<std::size_t> chosen;

  explicit Search(const std::vector<OrbitEntry>& o) : orbits(o) {
    level_end.assign(orbits.empty() ? 1 : orbits.back().level + 2, 0);
    for (std::size_t i = 0; i < orbits.size(); ++i) level_end[orbits[i].level] = i + 1;
    for (std::size_t d = 1; d < level_end.size(); ++d) level_end[d] = std::max(level_end[d], level_end[d - 1]);
  }

  // Visits tables with weight <= hi (hi may shrink through the callback's return value).
  template <class Fn>
  void run(std::size_t start, unsigned remaining, std::uint64_t w, std::uint64_t& hi, Fn&& fn) {
    if (remaining == 0) {
      fn(chosen, w);
      return;
    }
    std::size_t i = start;
    while (i < orbits.size()) {
      const auto& o = orbits[i];
      if (o.level > remaining) break;
      if (w + o.weight > hi) {  // rest of this level is heavier
        i = level_end[o.level];
        continue;
      }
      chosen.push_back(i);
      run(i + 1, remaining - o.level, w + o.weight, hi, fn);
      chosen.pop_back();
      ++i;
    }
  }
};

}  // namespace

void for_each_table(const std::vector<OrbitEntry>& orbits, unsigned s, std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(const std::vector<std::size_t>&, std::uint64_t)>& fn) {
  Search S(orbits);
  S.run(0, s, 0, hi, [&](const std::vector<std::size_t>& c, std::uint64_t w) {
    if (w >= lo) fn(c, w);
  });
}

MinWeightResult min_weight_ord(const std::vector<OrbitEntry>& orbits, std::uint32_t p, unsigned a, unsigned s,
                               std::uint64_t weight_cap, std::size_t max_levels, std::size_t certificate_cap) {
  MinWeightResult res;
  res.s = s;
  res.lower_bound = 0;
  std::uint64_t floor_w = 0;  // all tables below this weight are accounted for
  bool cancelled = false;
  for (std::size_t lvl = 0; lvl < max_levels; ++lvl) {
    // least weight >= floor_w
    std::uint64_t best = weight_cap;
    bool found = false;
    {
      Search S(orbits);
      S.run(0, s, 0, best, [&](const std::vector<std::size_t>&, std::uint64_t w) {
        if (w >= floor_w && w <= best) {
          best = w;
          found = true;
        }
      });
    }
    if (!found) {
      res.status = TableStatus::Inconclusive;
      Rational lb(Integer(static_cast<unsigned long>(weight_cap + 1)), Integer(p - 1));
      lb.canonicalize();
      if (!cancelled) res.lower_bound = lb;
      return res;
    }
    WeightLevel L;
    L.weight = best;
    std::uint64_t sum = 0;
    for_each_table(orbits, s, best, best, [&](const std::vector<std::size_t>& c, std::uint64_t) {
      DigitTable t;
      std::uint64_t u = 1;
      std::vector<std::vector<std::uint32_t>> cols;
      for (std::size_t i : c) {
        t.blocks.push_back(orbits[i].block);
        u = u * orbits[i].unit % p;
        for (unsigned j = 0; j < orbits[i].block.columns(); ++j) cols.push_back(orbits[i].block.column(j));
      }
      std::sort(cols.begin(), cols.end());
      auto& cls = L.classes[cols];
      cls = static_cast<std::uint32_t>((cls + u) % p);
      sum = (sum + u) % p;
      ++L.count;
      if (L.tables.size() < certificate_cap) L.tables.push_back(std::move(t));
    });
    L.unit_sum = static_cast<std::uint32_t>(sum);
    res.levels.push_back(std::move(L));
    Rational ord(Integer(static_cast<unsigned long>(best)), Integer(p - 1));
    ord.canonicalize();
    if (sum != 0) {
      res.ord_p = ord;
      res.ord_q = ord / Rational(a);
      if (!cancelled) {
        res.status = TableStatus::Definitive;
        res.lower_bound = ord;
      } else {
        res.status = TableStatus::Cancellation;
      }
      return res;
    }
    if (!cancelled) {
      // the vanishing unit sum pushes the level's contribution up by at least one pi-unit
      res.lower_bound = Rational(Integer(static_cast<unsigned long>(best + 1)), Integer(p - 1));
      res.lower_bound.canonicalize();
    }
    cancelled = true;
    floor_w = best + 1;
  }
  res.status = cancelled ? TableStatus::Cancellation : TableStatus::Inconclusive;
  return res;
}

MinWeightResult min_weight_ord(const LaurentPoly& f, unsigned a, unsigned s, std::uint64_t weight_cap,
                               std::size_t max_levels, std::size_t certificate_cap) {
  auto orbits = collect_orbits(f, a, s);
  return min_weight_ord(orbits, f.p(), a, s, weight_cap, max_levels, certificate_cap);
}

}  // namespace lnewton
