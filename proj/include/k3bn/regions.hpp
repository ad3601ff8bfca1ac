#pragma once

#include "k3bn/geometry.hpp"

namespace k3bn {

/// The parallelogram P_{O v+ v v-} collapses: pi_v lies on the parabola
/// (square-zero v), or the chord construction has no real solution.
struct DegenerateParallelogram : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RadPoint2 {
  RadicalExpr x, y;
};

struct Radical3 {
  RadicalExpr x, y, z;
};

struct OmegaBounds {
  std::int64_t y_max = 0;       // 0: default |v.c| (widened if the parallelogram needs it)
  std::int64_t x_max = 0;       // 0: derived from the parallelogram extremes
  std::int64_t z_max = 0;       // 0: derived
  std::int64_t root_bound = 0;  // 0: default 64*max(|v.c|, 1)
};

/// A no-wall query: vector, segment inside V, enumeration bounds.
struct OmegaQuery {
  MukaiVector v;
  Segment segment;
  OmegaBounds bounds;
};

enum class WallStatus { NoWall, WallCandidates, Inconclusive };

struct WallVerdict {
  WallStatus status = WallStatus::Inconclusive;
  std::vector<MukaiVector> witnesses;
  std::string note;
};

enum class OmegaClass { InOmegaPlus, InOmegaLine, InOmegaMinus, Outside };

struct VSigmaSplit {
  Radical3 plus, minus;
  RadPoint2 endpoint_plus, endpoint_second;  // projections of v+ and v- (sigma', sigma'')
};

/// v+ = [sigma'] cap ([sigma''] + v), normalised so that the plus vertex has
/// x >= 0, z >= 0. Requires sigma in V, pi_v != sigma and v^2 > 0; square-zero
/// v raises DegenerateParallelogram.
VSigmaSplit v_sigma_plus(const SurfaceContext& ctx, const MukaiVector& v, const PlanePoint& sigma);

/// Classifies u against Omega_v over the segment: on the open ray L_(O,v),
/// in the strictly destabilising triangle (plus side), in the mirror
/// triangle, or outside.
OmegaClass omega_membership(const SurfaceContext& ctx, const MukaiVector& v,
                            const Segment& segment, const MukaiVector& u);

/// Certifies Omega^+_v(I) (strict) or Omega_v(I) (non-strict) free of integer
/// points, listing any found as wall candidates. Exact; Inconclusive only
/// when user-supplied bounds are below the derived sound bounds.
WallVerdict admits_no_wall(const SurfaceContext& ctx, const OmegaQuery& query, bool strict);

/// All roots (r', c', s') with positive entries, c' <= c_max, lying in the
/// open trapezoid c'/r' < c/r, c'/s' < c/s. Empty for degenerate v.
std::vector<MukaiVector> roots_in_trapezoid(const SurfaceContext& ctx, const MukaiVector& v,
                                            std::int64_t c_max);

/// All roots with |c'| <= c_bound and positive rank (enumeration by divisor
/// pairs of c'^2(g-1)+1).
std::vector<MukaiVector> roots_with_c_bound(const SurfaceContext& ctx, std::int64_t c_bound);

}  // namespace k3bn
