#include "k3bn/regions.hpp"

#include <algorithm>
#include <cmath>

namespace k3bn {

namespace {

// Parabolic height x - (g-1)y^2; zero on the boundary parabola of V.
Rational h_value(const SurfaceContext& ctx, const PlanePoint& p) {
  return p.x - Rational(ctx.g - 1) * p.y * p.y;
}

// <v, sigma_hat> for the kernel lift sigma_hat = (sx, sy, 1).
Rational kernel_pairing(const SurfaceContext& ctx, const MukaiVector& v, const PlanePoint& s) {
  return Rational(2 * (ctx.g - 1) * v.c) * s.y - Rational(v.r) - Rational(v.s) * s.x;
}

// Exact sign of p + q*sqrt(Q) for rational p, q and Q > 0.
int qf_sign(const Rational& p, const Rational& q, const Rational& Q) {
  int sp = sgn(p), sq = sgn(q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  int c2 = cmp(p * p, q * q * Q);
  if (c2 == 0) return 0;
  return c2 > 0 ? sp : sq;
}

// v+ = u*v + w*sigma_hat with u = 1/2 + eps*P/(2 sqrt(Q)), w = -eps*v^2/(2 sqrt(Q)),
// Q = P^2 - v^2*sigma_hat^2 = P^2 + 2 v^2 h(sigma). Both eps choices solve
// (v+)^2 = (v+-v)^2 = 0; eps is fixed by the sign normalisation.
struct Parallelogram {
  Rational P, Q;
  std::int64_t vsq;
  PlanePoint sigma;
  int eps;

  // coordinate of v+ along (component of v, component of sigma_hat), as
  // p + q*sqrt(Q)
  std::pair<Rational, Rational> plus_coord(const Rational& v_comp,
                                           const Rational& hat_comp) const {
    return {v_comp / 2, Rational(eps) * (P * v_comp - Rational(vsq) * hat_comp) / (2 * Q)};
  }
};

Parallelogram build_parallelogram(const SurfaceContext& ctx, const MukaiVector& v,
                                  const PlanePoint& sigma) {
  std::int64_t vsq = mukai_square(ctx, v);
  if (vsq == 0)
    throw DegenerateParallelogram("square-zero vector: parallelogram collapses to L_[O,v]");
  Rational h = h_value(ctx, sigma);
  if (h <= 0) throw UsageError("parallelogram: sigma outside the parabola region");
  Parallelogram par;
  par.vsq = vsq;
  par.sigma = sigma;
  par.P = kernel_pairing(ctx, v, sigma);
  par.Q = par.P * par.P + 2 * Rational(vsq) * h;
  if (par.Q <= 0)
    throw DegenerateParallelogram("chord construction has no real solution (Q <= 0)");
  for (int eps : {1, -1}) {
    par.eps = eps;
    auto [xp, xq] = par.plus_coord(Rational(v.r), sigma.x);
    auto [zp, zq] = par.plus_coord(Rational(v.s), Rational(1));
    bool ok = qf_sign(xp, xq, par.Q) >= 0 && qf_sign(zp, zq, par.Q) >= 0 &&
              qf_sign(xp - v.r, xq, par.Q) >= 0 && qf_sign(zp - v.s, zq, par.Q) >= 0;
    if (ok) return par;
  }
  throw DegenerateInput("parallelogram: no sign-consistent splitting at sigma");
}

RadicalExpr qf_expr(const Rational& p, const Rational& q, const Rational& Q) {
  return RadicalExpr(p) + RadicalExpr::sqrt_rational(Q).scaled(q);
}

// ---- triangle utilities ------------------------------------------------

// Membership of w in the half-open triangle of chords L_(apex, q], q in seg.
bool in_apex_triangle(const SurfaceContext&, const PlanePoint& apex, const Segment& seg,
                      const PlanePoint& w) {
  if (w == apex) return false;
  PlanePoint d = w - apex, e = seg.b - seg.a, ao = seg.a - apex;
  Rational denom = cross(d, e);
  if (denom == 0) {
    if (cross(ao, d) != 0) return false;  // parallel, disjoint lines
    Rational dd = dot(d, d);
    Rational ta = dot(seg.a - apex, d) / dd, tb = dot(seg.b - apex, d) / dd;
    Rational sup = std::max(ta, tb);
    bool inc = ta < tb ? seg.include_b : (tb < ta ? seg.include_a : (seg.include_a || seg.include_b));
    return sup > 1 || (sup == 1 && inc);
  }
  Rational t = cross(ao, e) / denom;  // apex + t*d on the segment line
  Rational u = cross(ao, d) / denom;
  return t >= 1 && seg.contains_parameter(u);
}

// Clip the radial family t*dir, t in [lo, hi], against the closed triangle.
std::optional<std::pair<Rational, Rational>> clip_radial(std::array<PlanePoint, 3> tri,
                                                         const PlanePoint& dir, Rational lo,
                                                         Rational hi) {
  if (cross(tri[1] - tri[0], tri[2] - tri[0]) < 0) std::swap(tri[1], tri[2]);
  for (int i = 0; i < 3; ++i) {
    const PlanePoint& p = tri[i];
    const PlanePoint& q = tri[(i + 1) % 3];
    PlanePoint edge = q - p;
    Rational a = cross(edge, dir);
    Rational b = -cross(edge, p);  // inside: a*t + b >= 0
    if (a == 0) {
      if (b < 0) return std::nullopt;
    } else if (a > 0) {
      lo = std::max(lo, Rational(-b / a));
    } else {
      hi = std::min(hi, Rational(-b / a));
    }
    if (lo > hi) return std::nullopt;
  }
  return std::make_pair(lo, hi);
}

// Clip a polygon (vertex list) by the half-plane x >= x0.
std::vector<PlanePoint> clip_x_at_least(const std::vector<PlanePoint>& poly, const Rational& x0) {
  std::vector<PlanePoint> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint& p = poly[i];
    const PlanePoint& q = poly[(i + 1) % n];
    bool pin = p.x >= x0, qin = q.x >= x0;
    if (pin) out.push_back(p);
    if (pin != qin) {
      Rational t = (x0 - p.x) / (q.x - p.x);
      out.push_back({x0, p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

// Smallest integer >= sqrt(q) for rational q >= 0.
Int ceil_sqrt_rational(const Rational& q) {
  if (q <= 0) return 0;
  Int n = q.get_num(), d = q.get_den();
  Int m;
  // m = ceil(sqrt(n/d)): start from isqrt(ceil(n/d)) and adjust.
  Int approx = (n + d - 1) / d;
  mpz_sqrt(m.get_mpz_t(), approx.get_mpz_t());
  while (m * m * d < n) ++m;
  while (m > 0 && (m - 1) * (m - 1) * d >= n) --m;
  return m;
}

// Rational lower bound of sqrt(q), q > 0: isqrt(n*d*4^k)/(d*2^k).
Rational sqrt_lower_bound(const Rational& q) {
  const unsigned k = 32;
  Int nd = q.get_num() * q.get_den();
  Int scaled = nd << (2 * k);
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return make_rational(root, q.get_den() << k);
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      out.push_back(i);
      if (i != n / i) out.push_back(n / i);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Max |y|/x over the triangle {apex} u segment (x > 0 vertices; o allowed as
// a closure point, its wedge directions are the other vertices).
Rational max_abs_slope(const PlanePoint& apex, const Segment& seg) {
  Rational alpha(0);
  for (const PlanePoint* p : {&apex, &seg.a, &seg.b}) {
    if (p->x <= 0) continue;
    Rational sl = abs(p->y) / p->x;
    alpha = std::max(alpha, sl);
  }
  return alpha;
}

// Cheap integer reject against a rational bound: value num/den <= bound,
// with den > 0 and bound.den > 0.
bool ratio_at_most(std::int64_t num, std::int64_t den, const Rational& bound) {
  __int128 lhs = static_cast<__int128>(num) * bound.get_den().get_si();
  __int128 rhs = static_cast<__int128>(bound.get_num().get_si()) * den;
  return lhs <= rhs;
}

// Bounding box of the chord triangle, used to reject almost every enumerated
// root with integer arithmetic only.
struct TriangleBox {
  Rational x_max, y_absmax;

  TriangleBox(const PlanePoint& apex, const Segment& seg) {
    x_max = std::max({apex.x, seg.a.x, seg.b.x});
    y_absmax = std::max({Rational(abs(apex.y)), Rational(abs(seg.a.y)), Rational(abs(seg.b.y))});
  }

  bool small_coordinates() const {
    return x_max.get_num().fits_slong_p() && x_max.get_den().fits_slong_p() &&
           y_absmax.get_num().fits_slong_p() && y_absmax.get_den().fits_slong_p();
  }

  // The projection (r'/s', c'/s') can only lie in the triangle when it is in
  // the box.
  bool may_contain_projection(const MukaiVector& root) const {
    return ratio_at_most(root.r, root.s, x_max) &&
           ratio_at_most(std::abs(root.c), root.s, y_absmax);
  }
};

}  // namespace

std::vector<MukaiVector> roots_with_c_bound(const SurfaceContext& ctx, std::int64_t c_bound) {
  std::vector<MukaiVector> out;
  for (std::int64_t cp = -c_bound; cp <= c_bound; ++cp) {
    std::int64_t n = cp * cp * (ctx.g - 1) + 1;
    for (std::int64_t rp : divisors(n)) out.push_back({rp, cp, n / rp});
  }
  return out;
}

std::vector<MukaiVector> roots_in_trapezoid(const SurfaceContext& ctx, const MukaiVector& v,
                                            std::int64_t c_max) {
  std::vector<MukaiVector> out;
  if (v.r <= 0 || v.c <= 0 || v.s <= 0) return out;  // degenerate by convention
  for (std::int64_t cp = 1; cp <= c_max; ++cp) {
    std::int64_t n = cp * cp * (ctx.g - 1) + 1;
    for (std::int64_t rp : divisors(n)) {
      std::int64_t sp = n / rp;
      if (cp * v.r < v.c * rp && cp * v.s < v.c * sp) out.push_back({rp, cp, sp});
    }
  }
  return out;
}

VSigmaSplit v_sigma_plus(const SurfaceContext& ctx, const MukaiVector& v,
                         const PlanePoint& sigma) {
  if (!region_membership(ctx, sigma, Region::V)) throw UsageError("v_sigma_plus: sigma not in V");
  if (v.s != 0 && project(v) == sigma) throw UsageError("v_sigma_plus: sigma equals pi_v");
  if (mukai_square(ctx, v) < 0)
    throw UsageError("v_sigma_plus: negative square (use the root paths)");
  Parallelogram par = build_parallelogram(ctx, v, sigma);
  auto [xp, xq] = par.plus_coord(Rational(v.r), sigma.x);
  auto [yp, yq] = par.plus_coord(Rational(v.c), sigma.y);
  auto [zp, zq] = par.plus_coord(Rational(v.s), Rational(1));
  VSigmaSplit out;
  out.plus = {qf_expr(xp, xq, par.Q), qf_expr(yp, yq, par.Q), qf_expr(zp, zq, par.Q)};
  out.minus = {RadicalExpr(Rational(v.r)) - out.plus.x, RadicalExpr(Rational(v.c)) - out.plus.y,
               RadicalExpr(Rational(v.s)) - out.plus.z};
  auto div = [](const RadicalExpr& a, const RadicalExpr& b) {
    auto q = radical_div_quadratic(a, b);
    if (!q) throw DegenerateInput("v_sigma_plus: endpoint projection at infinity");
    return *q;
  };
  out.endpoint_plus = {div(out.plus.x, out.plus.z), div(out.plus.y, out.plus.z)};
  out.endpoint_second = {div(out.minus.x, out.minus.z), div(out.minus.y, out.minus.z)};
  return out;
}

OmegaClass omega_membership(const SurfaceContext& ctx, const MukaiVector& v,
                            const Segment& segment, const MukaiVector& u) {
  if (u.is_zero()) throw UsageError("omega_membership: u = O");
  std::int64_t vsq = mukai_square(ctx, v);
  if (vsq == 0)
    throw DegenerateParallelogram("omega_membership: square-zero v (root path applies)");
  if (u == v) return OmegaClass::Outside;
  // Rational multiples of v never need a stability condition.
  if (u.r * v.c == u.c * v.r && u.c * v.s == u.s * v.c && u.r * v.s == u.s * v.r) {
    Rational lambda = v.r != 0   ? make_rational(Int(u.r), Int(v.r))
                      : v.c != 0 ? make_rational(Int(u.c), Int(v.c))
                                 : make_rational(Int(u.s), Int(v.s));
    return (lambda > 0 && lambda < 1) ? OmegaClass::InOmegaLine : OmegaClass::Outside;
  }
  // Coplanarity of u, v and the kernel lift: det[u, v, (sx, sy, 1)] = 0 is
  // affine on the segment.
  auto coplanarity = [&](const PlanePoint& s) -> Rational {
    return Rational(u.c * v.s - u.s * v.c) * s.x + Rational(u.s * v.r - u.r * v.s) * s.y +
           Rational(u.r * v.c - u.c * v.r);
  };
  Rational fa = coplanarity(segment.a), fb = coplanarity(segment.b);
  if (fa == fb) {
    if (fa != 0) return OmegaClass::Outside;
    throw DegenerateInput("omega_membership: pi_v lies on the segment line");
  }
  Rational t = fa / (fa - fb);
  if (!segment.contains_parameter(t)) return OmegaClass::Outside;
  PlanePoint sigma = segment.a + scale(t, segment.b - segment.a);
  Parallelogram par = build_parallelogram(ctx, v, sigma);
  // Solve u = a*v + b*sigma_hat in rationals (consistent by coplanarity).
  Rational a;
  Rational den_x = Rational(v.r) - Rational(v.s) * sigma.x;
  if (den_x != 0) {
    a = (Rational(u.r) - Rational(u.s) * sigma.x) / den_x;
  } else {
    Rational den_y = Rational(v.c) - Rational(v.s) * sigma.y;
    if (den_y == 0) throw DegenerateInput("omega_membership: sigma equals pi_v");
    a = (Rational(u.c) - Rational(u.s) * sigma.y) / den_y;
  }
  Rational b = Rational(u.s) - a * v.s;
  if (b == 0) return OmegaClass::Outside;  // parallel case was handled above
  // u = alpha*v + beta*v+, where alpha and alpha+beta are the conjugates
  // M +- N sqrt(Q); beta = -2*eps*b*sqrt(Q)/v^2.
  Rational M = a + b * par.P / vsq;
  Rational N = Rational(par.eps) * b / vsq;
  bool inside = qf_sign(M, N, par.Q) >= 0 && qf_sign(M, -N, par.Q) >= 0 &&
                qf_sign(1 - M, N, par.Q) >= 0 && qf_sign(1 - M, -N, par.Q) >= 0;
  if (!inside) return OmegaClass::Outside;
  if (mukai_square(ctx, u) < -2 || mukai_square(ctx, u - v) < -2) return OmegaClass::Outside;
  int beta_sign = -sgn(b) * par.eps * (vsq > 0 ? 1 : -1);
  return beta_sign > 0 ? OmegaClass::InOmegaPlus : OmegaClass::InOmegaMinus;
}

namespace {

// ---- square-zero path ----------------------------------------------------

// Exact enumeration-completeness bound: every root whose projection lies in
// the chord triangle of v has |c'| <= c_req. Returns -1 when no bound could
// be certified.
std::int64_t square_zero_c_req(const SurfaceContext& ctx, const MukaiVector& v,
                               const PlanePoint& apex, const Segment& seg) {
  const Rational g1(ctx.g - 1);
  Rational yv = apex.y;
  Rational alpha = max_abs_slope(apex, seg);
  Rational x_floor = Rational(1) / (alpha * alpha * g1 + 1);
  // Near the apex (parameter t < t*) a root is pinned to the apex height and
  // is the single candidate with |c'| <= |v.c|; elsewhere h >= t*W bounds s'.
  Rational wa = h_value(ctx, seg.a) + g1 * (yv - seg.a.y) * (yv - seg.a.y) / 2;
  Rational wb = h_value(ctx, seg.b) + g1 * (yv - seg.b.y) * (yv - seg.b.y) / 2;
  Rational W = std::min(wa, wb);
  if (W <= 0) return -1;
  Rational delta = std::max(abs(yv - seg.a.y), abs(yv - seg.b.y));
  Rational tstar(1, 2);
  if (delta > 0 && v.s != 0) {
    Rational t1 = W / (Rational(v.s) * delta * Rational(v.s) * delta);
    tstar = std::min(tstar, t1);
  }
  if (tstar <= 0) return -1;
  PlanePoint a_cut = apex + scale(tstar, seg.a - apex);
  PlanePoint b_cut = apex + scale(tstar, seg.b - apex);
  std::vector<PlanePoint> region = {seg.a, seg.b, b_cut, a_cut};
  region = clip_x_at_least(region, x_floor);
  std::int64_t c_req = std::abs(v.c);  // the apex-height candidate
  if (region.empty()) return c_req;
  Rational h_min = h_value(ctx, region[0]);
  Rational y_absmax = abs(region[0].y);
  for (const auto& p : region) {
    h_min = std::min(h_min, h_value(ctx, p));
    y_absmax = std::max(y_absmax, Rational(abs(p.y)));
  }
  if (h_min <= 0) return -1;
  Int s_cap = ceil_sqrt_rational(Rational(1) / h_min);
  Int bound = ceil_rational(y_absmax * Rational(s_cap));
  if (!bound.fits_slong_p()) return -1;
  return std::max<std::int64_t>(c_req, bound.get_si());
}

WallVerdict square_zero_path(const SurfaceContext& ctx, const MukaiVector& v, const Segment& seg,
                             std::int64_t root_bound) {
  WallVerdict out;
  PlanePoint apex = project(v);
  TriangleBox box(apex, seg);
  bool prefilter = box.small_coordinates();
  for (const auto& delta : roots_with_c_bound(ctx, root_bound)) {
    if (prefilter && !box.may_contain_projection(delta)) continue;
    if (in_apex_triangle(ctx, apex, seg, project(delta))) out.witnesses.push_back(delta);
  }
  std::int64_t c_req = square_zero_c_req(ctx, v, apex, seg);
  bool complete = c_req >= 0 && root_bound >= c_req;
  if (!out.witnesses.empty()) {
    out.status = WallStatus::WallCandidates;
    out.note = "root projections found in the chord triangle";
  } else if (complete) {
    out.status = WallStatus::NoWall;
    out.note = "root search complete (required bound " + std::to_string(c_req) + ")";
  } else {
    out.status = WallStatus::Inconclusive;
    out.note = c_req < 0 ? "no completeness bound for this triangle"
                         : "root_bound " + std::to_string(root_bound) + " below required " +
                               std::to_string(c_req);
  }
  return out;
}

// ---- root (-2) path -------------------------------------------------------

WallVerdict root_vector_path(const SurfaceContext& ctx, const MukaiVector& v, const Segment& seg,
                             std::int64_t root_bound) {
  WallVerdict out;
  PlanePoint apex = project(v);
  std::array<PlanePoint, 3> tri = {apex, seg.a, seg.b};
  TriangleBox box(apex, seg);
  bool prefilter = box.small_coordinates();
  Rational x_big = std::max({apex.x, seg.a.x, seg.b.x}) + 1;
  for (const auto& delta : roots_with_c_bound(ctx, root_bound)) {
    // the removed segment starts at pi_delta and moves outwards, so the box
    // test on the projection is still a sound reject
    if (prefilter && !box.may_contain_projection(delta)) continue;
    PlanePoint dir{Rational(delta.r), Rational(delta.c)};
    Rational lo, hi, open_end;
    if (delta.c == 0) {
      // Axis root: the removed set is the ray x >= 1 on the axis within reach
      // of the triangle.
      dir = {Rational(1), Rational(0)};
      lo = 1;
      hi = x_big;
      open_end = hi + 1;  // no open end inside range
    } else {
      lo = make_rational(Int(1), Int(delta.s));
      hi = make_rational(Int(delta.r), Int(ctx.g - 1) * delta.c * delta.c);
      open_end = hi;  // the parabola end of the removed segment is excluded
    }
    auto clipped = clip_radial(tri, dir, lo, hi);
    if (!clipped) continue;
    auto [a, b] = *clipped;
    std::vector<Rational> samples = {a, (3 * a + b) / 4, (a + b) / 2, (a + 3 * b) / 4};
    if (b < open_end) samples.push_back(b);
    bool hit = false;
    for (const auto& t : samples) {
      if (t >= open_end) continue;
      if (in_apex_triangle(ctx, apex, seg, scale(t, dir))) {
        hit = true;
        break;
      }
    }
    if (hit) out.witnesses.push_back(delta);
  }
  // Completeness: segment points in the triangle have x >= x_floor, and
  // h <= 1/s'^2 along a removed segment, so s' is bounded on the clipped
  // triangle.
  Rational alpha = max_abs_slope(apex, seg);
  Rational x_floor = Rational(1) / (alpha * alpha * Rational(ctx.g - 1) + 1);
  std::vector<PlanePoint> region = clip_x_at_least({apex, seg.a, seg.b}, x_floor);
  std::int64_t c_req = 0;
  if (!region.empty()) {
    Rational h_min = h_value(ctx, region[0]), y_absmax = abs(region[0].y);
    for (const auto& p : region) {
      h_min = std::min(h_min, h_value(ctx, p));
      y_absmax = std::max(y_absmax, Rational(abs(p.y)));
    }
    if (h_min <= 0) {
      out.status = WallStatus::Inconclusive;
      out.note = "no completeness bound (triangle touches the parabola)";
      if (!out.witnesses.empty()) out.status = WallStatus::WallCandidates;
      return out;
    }
    Int s_cap = ceil_sqrt_rational(Rational(1) / h_min);
    Int bound = ceil_rational(y_absmax * Rational(s_cap));
    c_req = bound.fits_slong_p() ? bound.get_si() : -1;
  }
  bool complete = c_req >= 0 && root_bound >= c_req;
  if (!out.witnesses.empty()) {
    out.status = WallStatus::WallCandidates;
    out.note = "root segments meet the chord triangle";
  } else if (complete) {
    out.status = WallStatus::NoWall;
    out.note = "root-segment search complete (required bound " + std::to_string(c_req) + ")";
  } else {
    out.status = WallStatus::Inconclusive;
    out.note = "root_bound " + std::to_string(root_bound) + " below required " +
               std::to_string(c_req);
  }
  return out;
}

// ---- positive-square path --------------------------------------------------

struct EnumBox {
  std::int64_t y_lo, y_hi, x_hi, z_hi;
  bool truncated = false;  // user bounds below the derived sound bounds
};

// Sound coordinate bounds for integer points of the triangle O, v, v+ over
// the whole segment: coordinates are convex combinations of the vertices,
// and the v+ coordinates are p/2 +- |num|/(2 sqrt(Q)) with Q bounded below
// by its exact quadratic minimum over the segment.
std::optional<EnumBox> derive_box(const SurfaceContext& ctx, const MukaiVector& v,
                                  const Segment& seg, const OmegaBounds& bounds) {
  std::int64_t vsq = mukai_square(ctx, v);
  auto q_at = [&](const Rational& tau) -> Rational {
    PlanePoint s = seg.a + scale(tau, seg.b - seg.a);
    Rational P = kernel_pairing(ctx, v, s);
    return P * P + 2 * Rational(vsq) * h_value(ctx, s);
  };
  Rational q0 = q_at(Rational(0)), q1 = q_at(Rational(1)), qm = q_at(Rational(1, 2));
  // Q(tau) = A tau^2 + B tau + C interpolated from three values.
  Rational C = q0;
  Rational A = 2 * q1 + 2 * q0 - 4 * qm;
  Rational B = q1 - q0 - A;
  Rational qmin = std::min(q0, q1);
  if (A > 0) {
    Rational vtx = -B / (2 * A);
    if (vtx > 0 && vtx < 1) qmin = std::min(qmin, Rational(C - B * B / (4 * A)));
  }
  if (qmin <= 0) return std::nullopt;
  Rational sqrt_lo = sqrt_lower_bound(qmin);
  if (sqrt_lo <= 0) return std::nullopt;
  Rational pa = kernel_pairing(ctx, v, seg.a), pb = kernel_pairing(ctx, v, seg.b);
  // sqrt(Q) >= |P| pointwise; when P keeps its sign over the segment this
  // caps |P*comp - vsq*hat| / (2 sqrt(Q)) at comp/2 + vsq*|hat| / (2 min|P|),
  // which is far tighter than the global sqrt(Qmin) bound.
  bool p_signed = sgn(pa) == sgn(pb) && sgn(pa) != 0;
  Rational p_min = std::min(Rational(abs(pa)), Rational(abs(pb)));
  auto sup_term = [&](std::int64_t comp, const Rational& hat_a, const Rational& hat_b) -> Rational {
    Rational na = abs(pa * comp - Rational(vsq) * hat_a);
    Rational nb = abs(pb * comp - Rational(vsq) * hat_b);
    Rational bound = std::max(na, nb) / (2 * sqrt_lo);
    if (p_signed && comp >= 0) {
      Rational hat_max = std::max(Rational(abs(hat_a)), Rational(abs(hat_b)));
      bound = std::min(bound, Rational(Rational(comp) / 2 + Rational(vsq) * hat_max / (2 * p_min)));
    }
    return bound;
  };
  Rational sup_x = Rational(v.r) / 2 + sup_term(v.r, seg.a.x, seg.b.x);
  Rational sup_y = Rational(v.c) / 2 + sup_term(v.c, seg.a.y, seg.b.y);
  Rational inf_y = Rational(v.c) / 2 - sup_term(v.c, seg.a.y, seg.b.y);
  Rational sup_z = Rational(v.s) / 2 + sup_term(v.s, Rational(1), Rational(1));
  EnumBox box;
  box.x_hi = ceil_rational(std::max(Rational(v.r), sup_x)).get_si();
  box.z_hi = ceil_rational(std::max(Rational(v.s), sup_z)).get_si();
  box.y_hi = ceil_rational(std::max(Rational(v.c), sup_y)).get_si();
  box.y_lo = floor_rational(std::min(Rational(0), inf_y)).get_si();
  // User-supplied bounds cap the work; flag when they are below the sound box.
  if (bounds.y_max > 0) {
    if (bounds.y_max < box.y_hi || -bounds.y_max > box.y_lo) box.truncated = true;
    box.y_hi = std::min(box.y_hi, bounds.y_max);
    box.y_lo = std::max(box.y_lo, -bounds.y_max);
  }
  if (bounds.x_max > 0) {
    if (bounds.x_max < box.x_hi) box.truncated = true;
    box.x_hi = std::min(box.x_hi, bounds.x_max);
  }
  if (bounds.z_max > 0) {
    if (bounds.z_max < box.z_hi) box.truncated = true;
    box.z_hi = std::min(box.z_hi, bounds.z_max);
  }
  return box;
}

WallVerdict positive_path(const SurfaceContext& ctx, const MukaiVector& v, const Segment& seg,
                          const OmegaBounds& bounds, bool strict) {
  WallVerdict out;
  if (v.r <= 0 || v.s <= 0 || v.c < 0)
    throw DegenerateInput("admits_no_wall: positive path needs r, s > 0");
  PlanePoint apex = project(v);
  if (cross(seg.b - seg.a, apex - seg.a) == 0)
    throw DegenerateInput("admits_no_wall: pi_v on the segment line");
  auto box = derive_box(ctx, v, seg, bounds);
  if (!box) {
    out.status = WallStatus::Inconclusive;
    out.note = "could not bound the parallelogram over the segment";
    return out;
  }
  const std::int64_t g1 = ctx.g - 1;
  for (std::int64_t y = box->y_lo; y <= box->y_hi; ++y) {
    for (std::int64_t z = 1; z <= box->z_hi; ++z) {
      std::int64_t xz_cap = g1 * y * y + 1;  // u^2 >= -2
      std::int64_t x_cap = std::min(box->x_hi, xz_cap / z);
      for (std::int64_t x = 0; x <= x_cap; ++x) {
        MukaiVector u{x, y, z};
        if (u.is_zero() || u == v) continue;
        if (mukai_square(ctx, u - v) < -2) continue;
        OmegaClass cls = omega_membership(ctx, v, seg, u);
        bool hit = cls == OmegaClass::InOmegaPlus ||
                   (!strict && (cls == OmegaClass::InOmegaLine || cls == OmegaClass::InOmegaMinus));
        if (hit) out.witnesses.push_back(u);
      }
    }
  }
  if (!out.witnesses.empty()) {
    out.status = WallStatus::WallCandidates;
    out.note = "integer points found in the destabilising region";
  } else if (box->truncated) {
    out.status = WallStatus::Inconclusive;
    out.note = "user bounds below the derived sound bounds";
  } else {
    out.status = WallStatus::NoWall;
    out.note = "enumeration empty over the sound bounds";
  }
  return out;
}

Segment mirror_segment(const Segment& s) {
  return Segment({s.a.x, -s.a.y}, {s.b.x, -s.b.y}, s.include_a, s.include_b);
}

}  // namespace

WallVerdict admits_no_wall(const SurfaceContext& ctx, const OmegaQuery& query, bool strict) {
  const MukaiVector& v = query.v;
  // Mirror y -> -y when c < 0; the pairing is invariant and all paths assume
  // a first-quadrant projection.
  if (v.c < 0) {
    OmegaQuery mirrored{{v.r, -v.c, v.s}, mirror_segment(query.segment), query.bounds};
    WallVerdict out = admits_no_wall(ctx, mirrored, strict);
    for (auto& w : out.witnesses) w.c = -w.c;
    return out;
  }
  // Segment endpoints: included ones must lie in V, excluded ones may sit on
  // the closure (the origin in particular).
  for (auto [p, included] :
       {std::pair{query.segment.a, query.segment.include_a},
        std::pair{query.segment.b, query.segment.include_b}}) {
    Rational h = p.x - Rational(ctx.g - 1) * p.y * p.y;
    bool ok = included ? (p.x > 0 && region_membership(ctx, p, Region::V)) : h >= 0;
    if (!ok) throw UsageError("admits_no_wall: segment endpoint outside V");
  }
  std::int64_t root_bound =
      query.bounds.root_bound > 0 ? query.bounds.root_bound : 64 * std::max<std::int64_t>(std::abs(v.c), 1);
  std::int64_t vsq = mukai_square(ctx, v);
  WallVerdict out;
  try {
    if (vsq == 0) {
      out = square_zero_path(ctx, v, query.segment, root_bound);
    } else if (vsq == -2) {
      out = root_vector_path(ctx, v, query.segment, root_bound);
    } else if (vsq > 0) {
      out = positive_path(ctx, v, query.segment, query.bounds, strict);
    } else {
      out.status = WallStatus::Inconclusive;
      out.note = "square below -2: not a Mukai vector of an object";
      return out;
    }
  } catch (const DegenerateInput& e) {
    out.status = WallStatus::Inconclusive;
    out.witnesses.clear();
    out.note = e.what();
    return out;
  }
  if (!strict) {
    std::int64_t g0 = gcd3(v.r, v.c, v.s);
    if (g0 > 1) {
      MukaiVector base{v.r / g0, v.c / g0, v.s / g0};
      for (std::int64_t j = 1; j < g0; ++j)
        out.witnesses.push_back({j * base.r, j * base.c, j * base.s});
      out.status = WallStatus::WallCandidates;
      if (!out.note.empty()) out.note += "; ";
      out.note += "lattice points on L_(O,v) (imprimitive vector)";
    }
  }
  return out;
}

}  // namespace k3bn
