#include "k3bn/lattice.hpp"

#include <numeric>

namespace k3bn {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) {
  return gcd64(gcd64(a, b), c);
}

std::int64_t mukai_pairing(const SurfaceContext& ctx, const MukaiVector& u, const MukaiVector& w) {
  return 2 * u.c * w.c * (ctx.g - 1) - u.r * w.s - u.s * w.r;
}

std::int64_t mukai_square(const SurfaceContext& ctx, const MukaiVector& v) {
  return mukai_pairing(ctx, v, v);
}

MukaiVector twist(const SurfaceContext& ctx, const MukaiVector& v, std::int64_t k) {
  return {v.r, v.c + k * v.r, v.s + (ctx.g - 1) * k * (2 * v.c + k * v.r)};
}

bool is_primitive(const MukaiVector& v) {
  if (v.is_zero()) return false;
  return gcd3(v.r, v.c, v.s) == 1;
}

DerivedVectors derived_vectors(const SurfaceContext& ctx, std::int64_t m, const MukaiVector& v) {
  if (m <= 0) throw UsageError("derived_vectors: m must be positive");
  DerivedVectors out;
  out.vm = twist(ctx, v, -m);
  out.vc = v - out.vm;
  out.vk = {v.s, -v.c, v.r};
  out.chi = m * (ctx.g - 1) * (2 * v.c - m * v.r);
  std::int64_t mr_c = m * v.r - v.c;
  if (v.s != 0 && mr_c != 0) {
    out.sigma_v = PlanePoint{make_rational(Int(v.r) * v.c, Int(mr_c) * v.s), Rational(0)};
  } else {
    out.degenerate.push_back(v.s == 0 ? "sigma_v: s = 0" : "sigma_v: m*r - c = 0");
  }
  if (v.c != 0) {
    out.gamma = make_rational(Int(m) * v.r - v.c, Int(v.c));
  } else {
    out.degenerate.push_back("gamma: c = 0");
  }
  return out;
}

int jacobi_symbol(std::int64_t a, std::int64_t n) {
  if (n < 1 || n % 2 == 0) throw UsageError("jacobi_symbol: n must be odd and positive");
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin(std::uint64_t n, std::uint64_t a) {
  if (a % n == 0) return true;
  std::uint64_t d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 1000000) {
    for (std::int64_t p = 2; p * p <= n; ++p)
      if (n % p == 0) return false;
    return true;
  }
  std::uint64_t u = static_cast<std::uint64_t>(n);
  if (u % 2 == 0) return false;
  // Deterministic strong-pseudoprime bases for 64-bit inputs.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin(u, a)) return false;
  }
  return true;
}

}  // namespace k3bn
