#include "k3bn/geometry.hpp"

#include <algorithm>

namespace k3bn {

PlanePoint project(const MukaiVector& v) {
  if (v.s == 0) throw ProjectionUndefined("project: s = 0 for " + v.to_string());
  return {make_rational(Int(v.r), Int(v.s)), make_rational(Int(v.c), Int(v.s))};
}

std::optional<MukaiVector> root_on_direction(const SurfaceContext& ctx, std::int64_t r0,
                                             std::int64_t c0) {
  if (r0 <= 0) throw UsageError("root_on_direction: r0 must be positive");
  if (gcd64(r0, c0) != 1) throw UsageError("root_on_direction: direction not coprime");
  std::int64_t n = c0 * c0 * (ctx.g - 1) + 1;
  if (n % r0 != 0) return std::nullopt;
  return MukaiVector{r0, c0, n / r0};
}

std::optional<RootSegment> root_segment_on_direction(const SurfaceContext& ctx, std::int64_t r0,
                                                     std::int64_t c0) {
  auto delta = root_on_direction(ctx, r0, c0);
  if (!delta || c0 == 0) return std::nullopt;  // axis direction has no second intersection
  RootSegment seg;
  seg.delta = *delta;
  seg.t_delta = make_rational(Int(1), Int(delta->s));
  seg.t_prime = make_rational(Int(r0), Int(ctx.g - 1) * c0 * c0);
  return seg;
}

namespace {

// Reduce the rational direction of p (with p.x > 0) to a coprime integer pair
// (r0, c0), r0 > 0.
std::pair<std::int64_t, std::int64_t> reduce_direction(const PlanePoint& p) {
  Int rx = p.x.get_num() * p.y.get_den();
  Int cy = p.y.get_num() * p.x.get_den();
  Int g = gcd(rx, cy);
  rx /= g;
  cy /= g;
  return {rx.get_si(), cy.get_si()};
}

}  // namespace

bool region_membership(const SurfaceContext& ctx, const PlanePoint& p, Region region) {
  Rational parabola_gap = p.x - Rational(ctx.g - 1) * p.y * p.y;
  switch (region) {
    case Region::ParabolaInterior:
      return parabola_gap > 0;
    case Region::Gamma: {
      if (p.x - Rational(ctx.g) * p.y * p.y <= 0) return false;
      if (p.y == 0) return Rational(ctx.h2) * p.x * p.x < 2;
      return true;
    }
    case Region::V: {
      if (p.x <= 0) throw UsageError("region_membership: V queries require x > 0");
      if (p.y == 0) return p.x > 0 && p.x < 1;
      if (parabola_gap <= 0) return false;
      auto [r0, c0] = reduce_direction(p);
      auto seg = root_segment_on_direction(ctx, r0, c0);
      if (!seg) return true;
      Rational t_p = p.x / r0;
      return !(seg->t_delta <= t_p && t_p < seg->t_prime);
    }
  }
  return false;
}

namespace {

// Angle from d to w modulo pi, encoded for exact comparison. theta = pi for
// d parallel to w (the interchange line through o and sigma); otherwise
// theta in (0, pi) with cot(theta) = dot/cross after normalising cross > 0.
struct AngleKey {
  bool top;      // theta == pi
  Rational dot;  // valid when !top, with cross > 0
  Rational cross;
};

AngleKey angle_key(const PlanePoint& d, const PlanePoint& w) {
  Rational cr = cross(d, w), dt = dot(d, w);
  if (cr == 0) return {true, Rational(0), Rational(0)};
  if (cr < 0) return {false, -dt, -cr};
  return {false, dt, cr};
}

}  // namespace

Order phase_compare(const SurfaceContext& ctx, const PlanePoint& sigma, const MukaiVector& u1,
                    const MukaiVector& u2) {
  if (!region_membership(ctx, sigma, Region::V))
    throw UsageError("phase_compare: sigma not in V");
  PlanePoint p1 = project(u1), p2 = project(u2);
  if (p1 == sigma || p2 == sigma)
    throw DegenerateInput("phase_compare: projection coincides with sigma");
  AngleKey k1 = angle_key(p1 - sigma, sigma);
  AngleKey k2 = angle_key(p2 - sigma, sigma);
  if (k1.top && k2.top) return Order::Equal;
  if (k1.top) return Order::Greater;
  if (k2.top) return Order::Less;
  // theta1 < theta2 iff cot(theta1) > cot(theta2); compare dot1/cross1 with
  // dot2/cross2 (both cross > 0).
  Rational lhs = k1.dot * k2.cross, rhs = k2.dot * k1.cross;
  if (lhs == rhs) return Order::Equal;
  return lhs > rhs ? Order::Less : Order::Greater;
}

std::vector<PlanePoint> lattice_hull(const Polygon& poly) {
  auto [lo, hi] = poly.bounding_box();
  Int x0 = ceil_rational(lo.x), x1 = floor_rational(hi.x);
  Int y0 = ceil_rational(lo.y), y1 = floor_rational(hi.y);
  std::vector<std::pair<Int, Int>> pts;
  for (Int x = x0; x <= x1; ++x) {
    for (Int y = y0; y <= y1; ++y) {
      if (poly.contains({Rational(x), Rational(y)})) pts.emplace_back(x, y);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) {
    std::vector<PlanePoint> out;
    for (auto& [x, y] : pts) out.push_back({Rational(x), Rational(y)});
    return out;
  }
  // Monotone chain, strict turns only.
  auto turn = [](const std::pair<Int, Int>& a, const std::pair<Int, Int>& b,
                 const std::pair<Int, Int>& c) {
    return sgn((b.first - a.first) * (c.second - a.second) -
               (b.second - a.second) * (c.first - a.first));
  };
  std::vector<std::pair<Int, Int>> hull;
  for (const auto& p : pts) {  // lower chain
    while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  std::size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper chain
    while (hull.size() >= lower && turn(hull[hull.size() - 2], hull.back(), *it) <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();  // first point repeated
  std::vector<PlanePoint> out;
  out.reserve(hull.size());
  for (auto& [x, y] : hull) out.push_back({Rational(x), Rational(y)});
  return out;
}

}  // namespace k3bn
