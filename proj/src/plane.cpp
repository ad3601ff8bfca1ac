#include "k3bn/plane.hpp"

#include <algorithm>

namespace k3bn {

Polygon::Polygon(std::vector<PlanePoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw UsageError("Polygon: need at least 3 vertices");
  Rational area2(0);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& p = vertices_[i];
    const auto& q = vertices_[(i + 1) % vertices_.size()];
    area2 += cross(p, q);
  }
  if (area2 == 0) throw UsageError("Polygon: degenerate (zero area)");
  if (area2 < 0) std::reverse(vertices_.begin(), vertices_.end());
}

Rational Polygon::double_area() const {
  Rational area2(0);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    area2 += cross(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  }
  return area2;
}

bool Polygon::is_convex() const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    PlanePoint u = vertices_[(i + 1) % n] - vertices_[i];
    PlanePoint v = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
    if (cross(u, v) < 0) return false;  // CCW order: no right turns
  }
  return true;
}

bool Polygon::contains(const PlanePoint& p) const {
  const std::size_t n = vertices_.size();
  // Boundary first, then an exact crossing count for the interior.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % n];
    if (cross(b - a, p - a) == 0 && dot(p - a, p - b) <= 0) return true;
  }
  int crossings = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % n];
    bool a_below = a.y <= p.y, b_below = b.y <= p.y;
    if (a_below == b_below) continue;
    // x-coordinate of the edge at height p.y, compared exactly.
    Rational t = (p.y - a.y) / (b.y - a.y);
    Rational x_at = a.x + t * (b.x - a.x);
    if (x_at > p.x) ++crossings;
  }
  return crossings % 2 == 1;
}

std::pair<PlanePoint, PlanePoint> Polygon::bounding_box() const {
  PlanePoint lo = vertices_[0], hi = vertices_[0];
  for (const auto& v : vertices_) {
    lo.x = std::min(lo.x, v.x);
    lo.y = std::min(lo.y, v.y);
    hi.x = std::max(hi.x, v.x);
    hi.y = std::max(hi.y, v.y);
  }
  return {lo, hi};
}

}  // namespace k3bn
