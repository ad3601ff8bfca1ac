#pragma once

#include "k3bn/hnpolygon.hpp"
#include "k3bn/regions.hpp"

namespace k3bn {

enum class Verdict { Pass, Fail, Inconclusive };
enum class ConditionStatus { Pass, Fail, Inconclusive, Assumed };

struct Condition {
  std::string name;
  std::string anchor;  // stable id of the rule the condition instantiates
  ConditionStatus status = ConditionStatus::Fail;
  std::string witness;
};

/// Structured verdict with per-condition witnesses; the certificate emitted
/// by every theorem-level check. verdict == Pass exactly when every listed
/// condition passed.
struct CriterionReport {
  std::int64_t g = 0, m = 0;
  MukaiVector v;
  Verdict verdict = Verdict::Fail;
  std::string route;
  std::vector<Condition> conditions;

  bool passed() const { return verdict == Verdict::Pass; }
  void add(std::string name, std::string anchor, ConditionStatus status, std::string witness);
  void settle();  // verdict from conditions: Pass iff all Pass
};

const char* to_string(Verdict v);
const char* to_string(ConditionStatus s);

/// Numerical criterion for the restriction map being an injective morphism
/// with stable image.
CriterionReport check_injectivity(const SurfaceContext& ctx, std::int64_t m,
                                  const MukaiVector& v);

enum class NoWallBranch { SquareZero, FloorS, None };

/// Which sufficient no-wall branch applies to v (r, c, s > 0 required).
NoWallBranch check_no_wall_sufficient(const SurfaceContext& ctx, const MukaiVector& v);

/// Surjectivity of the restriction map, dispatching across the square-zero
/// family route, the bespoke (7,2) values, the large-genus bound and the
/// general polygon inequality.
CriterionReport check_surjectivity(const SurfaceContext& ctx, std::int64_t m, const MukaiVector& v,
                                   const RadicalOptions& opt = RadicalOptions{});

/// Isomorphism of the restriction map (routes: square-zero twist window,
/// large genus, and the direct conditional criterion).
CriterionReport check_isomorphism(const SurfaceContext& ctx, std::int64_t m, const MukaiVector& v,
                                  const RadicalOptions& opt = RadicalOptions{});

/// A rational point on the segment (pi_v(-m), pi_vK) projecting inside Gamma,
/// if the window quadratic has one.
std::optional<PlanePoint> solve_gamma_window(const SurfaceContext& ctx, std::int64_t m,
                                             const MukaiVector& v);

struct Suggestion {
  MukaiVector v;
  std::string route;
  CriterionReport injectivity, surjectivity, isomorphism;
};

/// The vector the selection table proposes for (g, m) before verification,
/// if any rule applies.
std::optional<std::pair<MukaiVector, std::string>> candidate_vector(std::int64_t g,
                                                                    std::int64_t m);

/// Table-based suggestion with the full pipeline verified; none when no rule
/// applies, m is below the row threshold, or verification fails.
std::optional<Suggestion> suggest_vector(std::int64_t g, std::int64_t m,
                                         const RadicalOptions& opt = RadicalOptions{});

struct HkVector {
  std::int64_t p = 0, c = 0;
  MukaiVector v;
};

/// Prime-window search for a primitive v with v^2 = 2n whose restriction map
/// criteria hold at genus g; first qualifying prime, least c.
std::optional<HkVector> find_hk_vector(std::int64_t n, std::int64_t g);

struct ScanRow {
  std::int64_t g = 0, m = 0;
  bool has_candidate = false;
  bool suggested = false;
  MukaiVector v;
  std::string route;
  Verdict injectivity = Verdict::Fail;
  Verdict surjectivity = Verdict::Fail;
  Verdict isomorphism = Verdict::Fail;
};

/// Grid driver: one row per (g, m), deterministic order.
std::vector<ScanRow> scan(std::int64_t g0, std::int64_t g1, std::int64_t m0, std::int64_t m1,
                          const RadicalOptions& opt = RadicalOptions{});

}  // namespace k3bn
