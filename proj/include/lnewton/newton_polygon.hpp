#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lnewton/rational.hpp"

namespace lnewton {

struct NPVertex {
  Rational x;
  Rational y;
  friend bool operator==(const NPVertex&, const NPVertex&) = default;
};

struct NPSegment {
  Rational slope;
  Rational length;
  friend bool operator==(const NPSegment&, const NPSegment&) = default;
};

class NewtonPolygon {
 public:
  NewtonPolygon() = default;
  explicit NewtonPolygon(std::vector<NPVertex> vertices);

  const std::vector<NPVertex>& vertices() const { return v_; }
  std::vector<NPSegment> segments() const;
  /// Slopes with multiplicity, ascending. Segment lengths must be integral.
  std::vector<Rational> slopes() const;
  Rational width() const;
  /// Height of the polygon at x, which must lie in its span.
  Rational value_at(const Rational& x) const;
  NewtonPolygon scaled(const Rational& c) const;

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  std::vector<NPVertex> v_;
};

/// Lower convex hull of points, x strictly increasing in the output.
NewtonPolygon lower_hull(std::vector<NPVertex> pts);

/// Newton polygon of a coefficient list given by valuations; nullopt means zero.
NewtonPolygon newton_polygon(const std::vector<std::optional<Rational>>& ords);

/// NP from a slope multiset starting at (0, 0).
NewtonPolygon polygon_from_slopes(std::vector<Rational> slopes);

std::string slopes_to_string(const std::vector<Rational>& slopes);

}  // namespace lnewton
