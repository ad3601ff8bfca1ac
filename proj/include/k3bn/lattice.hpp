#pragma once

#include "k3bn/plane.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace k3bn {

/// Degenerate but well-formed input: a requested field cannot be formed
/// (division by zero etc.). The message names the field.
struct DegenerateInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Polarised K3 surface of genus g with H^2 = 2g-2 (Picard rank one).
struct SurfaceContext {
  std::int64_t g;
  std::int64_t h2;

  explicit SurfaceContext(std::int64_t genus) : g(genus), h2(2 * genus - 2) {
    if (genus < 2) throw UsageError("SurfaceContext: genus must be >= 2");
  }

  /// Genus of a curve in |mH|: m^2(g-1)+1.
  std::int64_t sectional_genus(std::int64_t m) const { return m * m * (g - 1) + 1; }
};

struct MukaiVector {
  std::int64_t r = 0, c = 0, s = 0;

  bool operator==(const MukaiVector& o) const { return r == o.r && c == o.c && s == o.s; }
  MukaiVector operator+(const MukaiVector& o) const { return {r + o.r, c + o.c, s + o.s}; }
  MukaiVector operator-(const MukaiVector& o) const { return {r - o.r, c - o.c, s - o.s}; }
  MukaiVector operator-() const { return {-r, -c, -s}; }
  bool is_zero() const { return r == 0 && c == 0 && s == 0; }
  std::string to_string() const {
    return "(" + std::to_string(r) + "," + std::to_string(c) + "," + std::to_string(s) + ")";
  }
};

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c);

/// <u,w> = 2*u.c*w.c*(g-1) - u.r*w.s - u.s*w.r
std::int64_t mukai_pairing(const SurfaceContext& ctx, const MukaiVector& u, const MukaiVector& w);
std::int64_t mukai_square(const SurfaceContext& ctx, const MukaiVector& v);

/// Lattice action of tensoring by the k-th power of the polarisation:
/// (r, c+kr, s + (g-1)k(2c+kr)). k = -m gives the restriction-map twist.
MukaiVector twist(const SurfaceContext& ctx, const MukaiVector& v, std::int64_t k);

bool is_primitive(const MukaiVector& v);

/// The vectors and scalars derived from (m, v) that the criteria consume.
/// sigma_v and gamma are absent when their defining denominators vanish; the
/// `degenerate` notes name the missing fields.
struct DerivedVectors {
  MukaiVector vm;  // v(-m)
  MukaiVector vc;  // v - v(-m), the restriction to the curve
  MukaiVector vk;  // (s, -c, r)
  std::optional<PlanePoint> sigma_v;
  std::int64_t chi = 0;  // m(g-1)(2c-mr)
  std::optional<Rational> gamma;
  std::vector<std::string> degenerate;
};

DerivedVectors derived_vectors(const SurfaceContext& ctx, std::int64_t m, const MukaiVector& v);

/// Jacobi symbol (a|n) for odd n >= 1.
int jacobi_symbol(std::int64_t a, std::int64_t n);

/// Deterministic for 64-bit inputs.
bool is_prime(std::int64_t n);

}  // namespace k3bn
