#pragma once

#include "k3bn/lattice.hpp"

namespace k3bn {

struct ProjectionUndefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Region { ParabolaInterior, Gamma, V };
enum class Order { Less, Equal, Greater };

/// pr(v) = (r/s, c/s); undefined on {s = 0}.
PlanePoint project(const MukaiVector& v);

/// The unique root delta with projection on the line r0*y = c0*x, if any:
/// (r0, c0, (c0^2(g-1)+1)/r0) when r0 divides c0^2(g-1)+1. Requires
/// gcd(r0,c0) = 1 and r0 > 0.
std::optional<MukaiVector> root_on_direction(const SurfaceContext& ctx, std::int64_t r0,
                                             std::int64_t c0);

/// Radial description of the removed segment L_(pi'_delta, pi_delta] of a
/// root: points t*(r0,c0) with t_delta <= t < t_prime.
struct RootSegment {
  MukaiVector delta;
  Rational t_delta;  // parameter of pi_delta (= 1/s')
  Rational t_prime;  // parameter of the second parabola intersection
};

std::optional<RootSegment> root_segment_on_direction(const SurfaceContext& ctx, std::int64_t r0,
                                                     std::int64_t c0);

/// Membership in the open parabola region x > (g-1)y^2, in Gamma
/// (x > g*y^2 with the axis cap x^2 < 2/H^2 at y = 0), or in V(X) (parabola
/// region minus root segments; on the axis the convention is 0 < x < 1).
/// V queries require p.x > 0.
bool region_membership(const SurfaceContext& ctx, const PlanePoint& p, Region region);

/// Orders the phases of u1, u2 at the stability condition sigma by comparing
/// the directed angles from sigma->pi_u to o->sigma modulo pi. Equal exactly
/// when sigma, pi_u1, pi_u2 are collinear.
Order phase_compare(const SurfaceContext& ctx, const PlanePoint& sigma, const MukaiVector& u1,
                    const MukaiVector& u2);

/// Convex hull of the integer points inside or on the polygon, as a CCW
/// vertex list starting from the lexicographically smallest point. May have
/// fewer than 3 points (empty, single point, or collinear output allowed).
std::vector<PlanePoint> lattice_hull(const Polygon& poly);

}  // namespace k3bn
