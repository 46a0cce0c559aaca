#include "lnewton/newton_polygon.hpp"

#include <algorithm>

#include "lnewton/error.hpp"

namespace lnewton {

NewtonPolygon::NewtonPolygon(std::vector<NPVertex> vertices) : v_(std::move(vertices)) {
  for (std::size_t i = 1; i < v_.size(); ++i)
    require(v_[i].x > v_[i - 1].x, Errc::InvalidArgument, "polygon vertices must increase in x");
}

std::vector<NPSegment> NewtonPolygon::segments() const {
  std::vector<NPSegment> out;
  for (std::size_t i = 1; i < v_.size(); ++i) {
    Rational len = v_[i].x - v_[i - 1].x;
    out.push_back({(v_[i].y - v_[i - 1].y) / len, len});
  }
  return out;
}

std::vector<Rational> NewtonPolygon::slopes() const {
  std::vector<Rational> out;
  for (const auto& s : segments()) {
    require(s.length.get_den() == 1, Errc::NotIntegral, "segment of non-integral length");
    for (long i = 0; i < s.length.get_num().get_si(); ++i) out.push_back(s.slope);
  }
  return out;
}

Rational NewtonPolygon::width() const {
  if (v_.empty()) return 0;
  return v_.back().x - v_.front().x;
}

Rational NewtonPolygon::value_at(const Rational& x) const {
  require(!v_.empty() && x >= v_.front().x && x <= v_.back().x, Errc::InvalidArgument,
          "point outside the polygon span");
  for (std::size_t i = 1; i < v_.size(); ++i) {
    if (x <= v_[i].x) {
      Rational t = (x - v_[i - 1].x) / (v_[i].x - v_[i - 1].x);
      return v_[i - 1].y + t * (v_[i].y - v_[i - 1].y);
    }
  }
  return v_.front().y;
}

NewtonPolygon NewtonPolygon::scaled(const Rational& c) const {
  auto v = v_;
  for (auto& pt : v) pt.y *= c;
  return NewtonPolygon(std::move(v));
}

NewtonPolygon lower_hull(std::vector<NPVertex> pts) {
  std::sort(pts.begin(), pts.end(), [](const NPVertex& a, const NPVertex& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::vector<NPVertex> h;
  for (const auto& pt : pts) {
    if (!h.empty() && h.back().x == pt.x) continue;  // keep the lowest point per x
    while (h.size() >= 2) {
      const auto& a = h[h.size() - 2];
      const auto& b = h.back();
      // drop b unless it lies strictly below the chord a-pt
      Rational cr = (b.x - a.x) * (pt.y - a.y) - (b.y - a.y) * (pt.x - a.x);
      if (cr <= 0)
        h.pop_back();
      else
        break;
    }
    h.push_back(pt);
  }
  return NewtonPolygon(std::move(h));
}

NewtonPolygon newton_polygon(const std::vector<std::optional<Rational>>& ords) {
  std::vector<NPVertex> pts;
  for (std::size_t i = 0; i < ords.size(); ++i)
    if (ords[i]) pts.push_back({Rational(static_cast<long>(i)), *ords[i]});
  require(!pts.empty(), Errc::EmptyInput, "all coefficients vanish");
  return lower_hull(std::move(pts));
}

NewtonPolygon polygon_from_slopes(std::vector<Rational> slopes) {
  std::sort(slopes.begin(), slopes.end());
  std::vector<NPVertex> pts{{0, 0}};
  Rational y = 0;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    y += slopes[i];
    pts.push_back({Rational(static_cast<long>(i + 1)), y});
  }
  return lower_hull(std::move(pts));
}

std::string slopes_to_string(const std::vector<Rational>& slopes) {
  std::string out = "{";
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (i) out += ", ";
    out += to_string(slopes[i]);
  }
  return out + "}";
}

}  // namespace lnewton
