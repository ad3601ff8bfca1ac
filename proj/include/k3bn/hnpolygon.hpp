#pragma once

#include "k3bn/geometry.hpp"

#include <span>

namespace k3bn {

/// Point of the limit charge plane, re + im*sqrt(-1). Lattice parts are
/// integer-valued; the auxiliary points z1', z2' are genuinely rational.
struct ZPoint {
  Rational re, im;
  bool operator==(const ZPoint& o) const { return re == o.re && im == o.im; }
  bool is_integral() const { return re.get_den() == 1 && im.get_den() == 1; }
  ZPoint operator-(const ZPoint& o) const { return {re - o.re, im - o.im}; }
  ZPoint operator+(const ZPoint& o) const { return {re + o.re, im + o.im}; }
};

/// ell(x + iy) = sqrt(x^2 + 2H^2 y^2 + 4 gcd(x,y)^2) for integer x, y.
RadicalExpr ell(const SurfaceContext& ctx, const ZPoint& z);

/// ||x + iy|| = sqrt(x^2 + (2H^2+4) y^2), rational coordinates allowed.
RadicalExpr znorm(const SurfaceContext& ctx, const ZPoint& z);

struct PolygonData {
  ZPoint z1, z2, z1_plus, z1p, z2p;
  std::int64_t chi = 0;
  RadicalExpr hbar;
  Rational gamma;
  std::int64_t d = 0;
};

/// z1 = (r-s, c), z2 = (m(g-1)(mr-2c), mr), z1_plus = z1 + (d, 0),
/// z1' = z1 + ((s-r)/c, -1), z2' = (r-s-(r-gamma^2 s)/(gamma c), c+1),
/// chi = m(g-1)(2c-mr), hbar = sqrt((r+s-chi)^2+4(mr-c)^2) + sqrt((r+s)^2+4c^2).
PolygonData polygon_data(const SurfaceContext& ctx, std::int64_t m, const MukaiVector& v,
                         std::int64_t d);

/// sum of floor((ell(z) - re z)/2) over the parts; parts must be integral.
Int section_upper_bound(const SurfaceContext& ctx, std::span<const ZPoint> parts,
                        const RadicalOptions& opt = RadicalOptions{});

/// Largest d >= 0 with (s-r)/c + (gamma^2 s - r)/(gamma c) >= 2d.
std::int64_t sharpness(const SurfaceContext& ctx, std::int64_t m, const MukaiVector& v);

struct SurjectivityCheck {
  bool holds = false;
  bool slope_condition = false;  // (s-r)/c + (s-r-chi)/(mr-c) >= 2
  bool norm_condition = false;   // the z-chain inequality
  RadicalExpr lhs_margin;        // LHS - RHS of the norm condition
};

/// The two general surjectivity conditions, evaluated exactly.
SurjectivityCheck surjectivity_inequality(const SurfaceContext& ctx, std::int64_t m,
                                          const MukaiVector& v,
                                          const RadicalOptions& opt = RadicalOptions{});

/// The polygon P_{0 z1' z1^{+d} z2' z2} in the limit charge plane.
Polygon sharpness_polygon(const SurfaceContext& ctx, std::int64_t m, const MukaiVector& v,
                          std::int64_t d);

/// Chain margin of the generic small-genus estimate for v = (g-1, k, k^2):
/// ||z1-z1'|| - ||z1'-z1^{+3}|| + ||z1-z2'|| - ||z2'-z1^{+3}||
///   - (hbar + chi - 2(g-1+k^2)).
RadicalExpr est3_margin(const SurfaceContext& ctx, std::int64_t k, std::int64_t m);

/// Hull-corrected margin with the replacement chain 0 -> z3 -> z1^{+d}:
/// ||z1|| - ||z3|| - ||z3-z1^{+d}|| + ||z1-z2'|| - ||z2'-z1^{+d}||
///   - (hbar + chi - 2(g-1+k^2)).
RadicalExpr hull_margin(const SurfaceContext& ctx, std::int64_t k, std::int64_t m, std::int64_t d,
                        const ZPoint& z3);

struct SpecialSurjResult {
  bool holds = false;
  std::string route;
  bool cond_genus = false;      // g < 2k and g != k
  bool cond_cogenus = false;    // g < 2(m(g-1)-k) and g != m(g-1)-k
  bool cond_divisor = false;    // k or m(g-1)-k does not divide g+1
  std::optional<bool> hull_ok;  // exceptional routes: hull vertex + margin verified
};

/// Surjectivity for the square-zero family v = (g-1, k, k^2); requires
/// gcd(g-1, k) = 1 and applies only for g >= 3.
SpecialSurjResult special_surj_check(const SurfaceContext& ctx, std::int64_t m, std::int64_t k,
                                     const RadicalOptions& opt = RadicalOptions{});

}  // namespace k3bn
