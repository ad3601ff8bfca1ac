#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k3bn {

using Int = mpz_class;
using Rational = mpq_class;

/// Thrown when an interval refinement hits the precision cap while the sign
/// of an expression is still undecided. Callers must treat the comparison as
/// inconclusive, never as a verdict.
struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of(const Rational& q) {
  int s = sgn(q);
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

inline Sign opposite(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

/// Exact rational from a possibly non-canonical numerator/denominator pair.
Rational make_rational(Int num, Int den);

/// floor(q), exact.
Int floor_rational(const Rational& q);
/// ceil(q), exact.
Int ceil_rational(const Rational& q);

struct RadicalOptions {
  unsigned start_bits = 64;
  unsigned cap_bits = 4096;
};

struct RadicalTerm {
  Rational coeff;
  Int radicand;  // squarefree, >= 1 in normal form (1 encodes the rational part)
};

/// A finite sum of terms coeff*sqrt(radicand). Always kept in normal form:
/// radicands squarefree and pairwise distinct, coefficients nonzero, terms
/// sorted by radicand. Consequently the zero value is the empty sum.
class RadicalExpr {
 public:
  RadicalExpr() = default;
  explicit RadicalExpr(const Rational& q);
  explicit RadicalExpr(const Int& n);
  explicit RadicalExpr(long n);

  static RadicalExpr sqrt_int(const Int& n);            // sqrt(n), n >= 0
  static RadicalExpr sqrt_rational(const Rational& q);  // sqrt(q), q >= 0
  static RadicalExpr term(const Rational& c, const Int& n);

  const std::vector<RadicalTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  RadicalExpr operator-() const;
  RadicalExpr& operator+=(const RadicalExpr& o);
  RadicalExpr& operator-=(const RadicalExpr& o);
  RadicalExpr& operator*=(const RadicalExpr& o);
  friend RadicalExpr operator+(RadicalExpr a, const RadicalExpr& b) { return a += b; }
  friend RadicalExpr operator-(RadicalExpr a, const RadicalExpr& b) { return a -= b; }
  friend RadicalExpr operator*(RadicalExpr a, const RadicalExpr& b) { return a *= b; }
  RadicalExpr scaled(const Rational& c) const;

  bool operator==(const RadicalExpr& o) const { return terms_ == o.terms_; }

  /// Exact enclosure [lo, hi] of the value using sqrt bounds with `bits`
  /// fractional bits. lo <= value <= hi always.
  std::pair<Rational, Rational> interval(unsigned bits) const;

  /// Decimal approximation with `significant` digits, deterministic.
  std::string decimal(int significant) const;

  std::string to_string() const;  // symbolic, e.g. "29/3*sqrt(2) + 1/2"

 private:
  std::vector<RadicalTerm> terms_;
  void insert_term(const Rational& c, const Int& squarefree_radicand);
};

inline bool operator==(const RadicalTerm& a, const RadicalTerm& b) {
  return a.coeff == b.coeff && a.radicand == b.radicand;
}

/// Exact sign of the value of e. Interval refinement doubles precision from
/// opt.start_bits up to opt.cap_bits; Zero is only returned with an exact
/// algebraic proof (normal-form emptiness or the repeated-squaring check).
Sign radical_sign(const RadicalExpr& e, const RadicalOptions& opt = RadicalOptions{});

/// floor(value(e)), exact; decided via radical_sign against the bracketing
/// integer.
Int radical_floor(const RadicalExpr& e, const RadicalOptions& opt = RadicalOptions{});

/// Division restricted to the quadratic field case: both operands may only
/// involve radicands {1, d} for a single d. Returns nothing if the operands
/// live in different quadratic fields or the divisor is zero.
std::optional<RadicalExpr> radical_div_quadratic(const RadicalExpr& num, const RadicalExpr& den);

/// n = a^2 * b with b squarefree; returns (a, b). n >= 0 (0 -> (0,1)... kept (1,0)).
std::pair<Int, Int> extract_square(const Int& n);

}  // namespace k3bn
