#pragma once

#include "k3bn/exactnum.hpp"

#include <vector>

namespace k3bn {

struct PlanePoint {
  Rational x, y;
  bool operator==(const PlanePoint& o) const { return x == o.x && y == o.y; }
};

inline Rational cross(const PlanePoint& a, const PlanePoint& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const PlanePoint& a, const PlanePoint& b) { return a.x * b.x + a.y * b.y; }
inline PlanePoint operator-(const PlanePoint& a, const PlanePoint& b) {
  return {a.x - b.x, a.y - b.y};
}
inline PlanePoint operator+(const PlanePoint& a, const PlanePoint& b) {
  return {a.x + b.x, a.y + b.y};
}
inline PlanePoint scale(const Rational& t, const PlanePoint& p) { return {t * p.x, t * p.y}; }

/// Line segment with per-endpoint inclusion flags; endpoints must differ.
struct Segment {
  PlanePoint a, b;
  bool include_a = true;
  bool include_b = true;

  Segment(PlanePoint a_, PlanePoint b_, bool ia = true, bool ib = true)
      : a(std::move(a_)), b(std::move(b_)), include_a(ia), include_b(ib) {
    if (a == b) throw UsageError("Segment: endpoints coincide");
  }

  /// Whether parameter t of a + t*(b-a) lies on the segment.
  bool contains_parameter(const Rational& t) const {
    if (t < 0 || t > 1) return false;
    if (t == 0) return include_a;
    if (t == 1) return include_b;
    return true;
  }
};

/// Simple polygon; vertices are normalised to counter-clockwise order on
/// construction.
class Polygon {
 public:
  explicit Polygon(std::vector<PlanePoint> vertices);
  const std::vector<PlanePoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  /// Twice the signed area (counter-clockwise vertices give a positive value).
  Rational double_area() const;
  bool is_convex() const;
  /// Point inside or on the boundary.
  bool contains(const PlanePoint& p) const;
  /// Axis-aligned bounding box, (min, max).
  std::pair<PlanePoint, PlanePoint> bounding_box() const;

 private:
  std::vector<PlanePoint> vertices_;
};

}  // namespace k3bn
