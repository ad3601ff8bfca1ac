#include "k3bn/exactnum.hpp"

#include <algorithm>
#include <cassert>

namespace k3bn {

Rational make_rational(Int num, Int den) {
  if (den == 0) throw UsageError("make_rational: zero denominator");
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

Int floor_rational(const Rational& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Int ceil_rational(const Rational& q) {
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::pair<Int, Int> extract_square(const Int& n) {
  if (n < 0) throw UsageError("extract_square: negative radicand");
  if (n == 0) return {1, 0};
  Int a = 1, m = n, sf = 1;
  auto strip = [&](unsigned long p) {
    unsigned exp = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++exp;
    }
    for (unsigned i = 0; i + 1 < exp; i += 2) a *= p;
    if (exp % 2) sf *= p;
  };
  // Trial division up to cbrt of the shrinking cofactor; whatever remains is
  // 1, a prime, a product of two distinct primes, or a prime square, and the
  // last case is caught by the perfect-square test.
  strip(2);
  strip(3);
  for (unsigned long p = 5; Int(p) * p * p <= m; p += (p % 6 == 5) ? 2 : 4) strip(p);
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    Int root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    a *= root;
    m = 1;
  }
  return {a, sf * m};
}

void RadicalExpr::insert_term(const Rational& c, const Int& rad) {
  if (c == 0 || rad == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), rad,
                             [](const RadicalTerm& t, const Int& r) { return t.radicand < r; });
  if (it != terms_.end() && it->radicand == rad) {
    it->coeff += c;
    if (it->coeff == 0) terms_.erase(it);
  } else {
    terms_.insert(it, RadicalTerm{c, rad});
  }
}

RadicalExpr::RadicalExpr(const Rational& q) {
  if (q != 0) terms_.push_back(RadicalTerm{q, Int(1)});
}
RadicalExpr::RadicalExpr(const Int& n) : RadicalExpr(Rational(n)) {}
RadicalExpr::RadicalExpr(long n) : RadicalExpr(Rational(n)) {}

RadicalExpr RadicalExpr::term(const Rational& c, const Int& n) {
  if (n < 0) throw UsageError("RadicalExpr: negative radicand");
  RadicalExpr e;
  if (c == 0 || n == 0) return e;
  auto [a, b] = extract_square(n);
  e.insert_term(c * Rational(a), b);
  return e;
}

RadicalExpr RadicalExpr::sqrt_int(const Int& n) { return term(Rational(1), n); }

RadicalExpr RadicalExpr::sqrt_rational(const Rational& q) {
  if (q < 0) throw UsageError("sqrt_rational: negative argument");
  // sqrt(p/q) = sqrt(p)*sqrt(q)/q; extract squares of p and q separately to
  // keep the trial division small.
  const Int &p = q.get_num(), &d = q.get_den();
  if (p == 0) return RadicalExpr{};
  auto [ap, bp] = extract_square(p);
  auto [ad, bd] = extract_square(d);
  Int g = gcd(bp, bd);
  // sqrt(bp)*sqrt(bd) = g*sqrt((bp/g)*(bd/g)), and the product is squarefree.
  RadicalExpr e;
  e.insert_term(make_rational(ap * ad * g, d), (bp / g) * (bd / g));
  return e;
}

bool RadicalExpr::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1);
}

Rational RadicalExpr::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw UsageError("rational_value: irrational expression");
  return terms_[0].coeff;
}

RadicalExpr RadicalExpr::operator-() const {
  RadicalExpr e(*this);
  for (auto& t : e.terms_) t.coeff = -t.coeff;
  return e;
}

RadicalExpr& RadicalExpr::operator+=(const RadicalExpr& o) {
  for (const auto& t : o.terms_) insert_term(t.coeff, t.radicand);
  return *this;
}

RadicalExpr& RadicalExpr::operator-=(const RadicalExpr& o) {
  for (const auto& t : o.terms_) insert_term(-t.coeff, t.radicand);
  return *this;
}

RadicalExpr& RadicalExpr::operator*=(const RadicalExpr& o) {
  RadicalExpr out;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      // sqrt(m)*sqrt(n) = g*sqrt((m/g)(n/g)) for squarefree m, n, g = gcd.
      Int g = gcd(a.radicand, b.radicand);
      out.insert_term(a.coeff * b.coeff * Rational(g), (a.radicand / g) * (b.radicand / g));
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

RadicalExpr RadicalExpr::scaled(const Rational& c) const {
  RadicalExpr e;
  if (c == 0) return e;
  e.terms_ = terms_;
  for (auto& t : e.terms_) t.coeff *= c;
  return e;
}

std::pair<Rational, Rational> RadicalExpr::interval(unsigned bits) const {
  Rational lo(0), hi(0);
  Int den = Int(1) << bits;
  for (const auto& t : terms_) {
    if (t.radicand == 1) {
      lo += t.coeff;
      hi += t.coeff;
      continue;
    }
    Int scaled = t.radicand << (2 * bits);
    Int s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());  // s <= sqrt(n)*2^bits < s+1
    Rational lo_r = make_rational(s, den), hi_r = make_rational(s + 1, den);
    if (t.coeff > 0) {
      lo += t.coeff * lo_r;
      hi += t.coeff * hi_r;
    } else {
      lo += t.coeff * hi_r;
      hi += t.coeff * lo_r;
    }
  }
  return {lo, hi};
}

namespace {

enum class ZeroProof { Zero, NonZero, Unknown };

// Sign by interval refinement only; never decides zero.
std::optional<Sign> interval_sign_only(const RadicalExpr& e, unsigned cap_bits) {
  if (e.is_zero()) return Sign::Zero;
  for (unsigned bits = 64; bits <= cap_bits; bits *= 2) {
    auto [lo, hi] = e.interval(bits);
    if (lo > 0) return Sign::Positive;
    if (hi < 0) return Sign::Negative;
  }
  return std::nullopt;
}

// Repeated-squaring zero test. Splitting e = A + B*sqrt(n) by the largest
// radicand, e*(A - B*sqrt(n)) = A^2 - B^2*n kills sqrt(n); a nonzero product
// certifies e != 0, a zero product reduces e = 0 to a sign condition on A.
ZeroProof zero_proof(const RadicalExpr& e, int depth, unsigned cap_bits) {
  const auto& ts = e.terms();
  if (ts.empty()) return ZeroProof::Zero;
  if (ts.size() == 1) return ZeroProof::NonZero;
  std::size_t irrational = 0;
  for (const auto& t : ts)
    if (t.radicand > 1) ++irrational;
  if (irrational > 4 || depth <= 0) return ZeroProof::Unknown;

  const RadicalTerm top = ts.back();  // largest radicand, > 1 here
  RadicalExpr a_part;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i)
    a_part += RadicalExpr::term(ts[i].coeff, ts[i].radicand);
  RadicalExpr product = a_part * a_part - RadicalExpr(Rational(top.coeff * top.coeff * top.radicand));
  switch (zero_proof(product, depth - 1, cap_bits)) {
    case ZeroProof::NonZero:
      return ZeroProof::NonZero;  // product = e * conjugate, so e != 0
    case ZeroProof::Unknown:
      return ZeroProof::Unknown;
    case ZeroProof::Zero:
      break;
  }
  // A^2 = B^2*n with B != 0, so A = +-|B|sqrt(n) is nonzero and its interval
  // sign terminates; e = 0 exactly when the signs cancel.
  auto sa = interval_sign_only(a_part, cap_bits);
  if (!sa) return ZeroProof::Unknown;
  return *sa == opposite(sign_of(top.coeff)) ? ZeroProof::Zero : ZeroProof::NonZero;
}

}  // namespace

Sign radical_sign(const RadicalExpr& e, const RadicalOptions& opt) {
  const auto& ts = e.terms();
  if (ts.empty()) return Sign::Zero;
  if (ts.size() == 1) return sign_of(ts[0].coeff);
  bool tried_proof = false;
  ZeroProof proof = ZeroProof::Unknown;
  for (unsigned bits = opt.start_bits; bits <= opt.cap_bits; bits *= 2) {
    auto [lo, hi] = e.interval(bits);
    if (lo > 0) return Sign::Positive;
    if (hi < 0) return Sign::Negative;
    if (!tried_proof) {
      tried_proof = true;
      proof = zero_proof(e, 8, opt.cap_bits);
      if (proof == ZeroProof::Zero) return Sign::Zero;
    }
  }
  throw PrecisionExhausted("radical_sign: interval still straddles 0 at " +
                           std::to_string(opt.cap_bits) + " bits without a zero proof");
}

Int radical_floor(const RadicalExpr& e, const RadicalOptions& opt) {
  if (e.is_rational()) return e.is_zero() ? Int(0) : floor_rational(e.rational_value());
  for (unsigned bits = opt.start_bits; bits <= opt.cap_bits; bits *= 2) {
    auto [lo, hi] = e.interval(bits);
    Int fl = floor_rational(lo), fh = floor_rational(hi);
    if (fl == fh) return fl;
    if (hi - lo < Rational(1, 4)) {
      // Exactly one integer candidate t in (lo, hi]; compare e against it.
      Int t = fh;
      Sign s = radical_sign(e - RadicalExpr(Rational(t)), opt);
      return s == Sign::Negative ? t - 1 : t;
    }
  }
  throw PrecisionExhausted("radical_floor: enclosure too wide at cap");
}

std::optional<RadicalExpr> radical_div_quadratic(const RadicalExpr& num, const RadicalExpr& den) {
  if (den.is_zero()) return std::nullopt;
  if (den.is_rational()) {
    Rational d = den.rational_value();
    return num.scaled(Rational(1) / d);
  }
  // Collect the single irrational radicand d of the denominator.
  Int d(0);
  for (const auto& t : den.terms()) {
    if (t.radicand == 1) continue;
    if (d != 0 && t.radicand != d) return std::nullopt;
    d = t.radicand;
  }
  for (const auto& t : num.terms())
    if (t.radicand != 1 && t.radicand != d) return std::nullopt;
  // conj flips the sign of the sqrt(d) part; den*conj(den) is rational.
  RadicalExpr conj;
  for (const auto& t : den.terms())
    conj += RadicalExpr::term(t.radicand == d ? -t.coeff : t.coeff, t.radicand);
  RadicalExpr denom = den * conj;
  if (!denom.is_rational() || denom.is_zero()) return std::nullopt;
  return (num * conj).scaled(Rational(1) / denom.rational_value());
}

std::string RadicalExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    std::string coeff = t.coeff.get_str();
    if (i > 0) {
      if (t.coeff > 0) {
        out += " + ";
      } else {
        out += " - ";
        coeff = Rational(-t.coeff).get_str();
      }
    }
    if (t.radicand == 1) {
      out += coeff;
    } else if (coeff == "1") {
      out += "sqrt(" + t.radicand.get_str() + ")";
    } else if (coeff == "-1" && i == 0) {
      out += "-sqrt(" + t.radicand.get_str() + ")";
    } else {
      out += coeff + "*sqrt(" + t.radicand.get_str() + ")";
    }
  }
  return out;
}

std::string RadicalExpr::decimal(int significant) const {
  if (terms_.empty()) return "0";
  if (significant < 1) significant = 1;
  unsigned bits = std::max(256u, static_cast<unsigned>(4 * significant) + 64u);
  auto [lo, hi] = interval(bits);
  Rational mid = (lo + hi) / 2;
  bool neg = mid < 0;
  Rational v = neg ? Rational(-mid) : mid;
  if (v == 0) return "0";
  // Decimal exponent: 10^e <= v < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(v.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(v.get_den_mpz_t(), 10));
  auto pow10 = [](long k) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return p;
  };
  auto cmp_pow10 = [&](long k) {  // sign of v - 10^k
    Rational p = k >= 0 ? Rational(pow10(k)) : make_rational(Int(1), pow10(k));
    return cmp(v, p);
  };
  while (cmp_pow10(e) < 0) --e;
  while (cmp_pow10(e + 1) >= 0) ++e;
  // I = round(v / 10^(e - significant + 1)), an integer with `significant` digits.
  long shift = e - significant + 1;
  Rational scaled = shift >= 0 ? Rational(v / Rational(pow10(shift))) : Rational(v * Rational(pow10(shift)));
  Int digits = floor_rational(scaled + Rational(1, 2));
  Int cap = pow10(significant);
  if (digits == cap) {
    digits /= 10;
    ++e;
  }
  std::string ds = digits.get_str();
  std::string mant = ds.substr(0, 1);
  if (ds.size() > 1) mant += "." + ds.substr(1);
  std::string out = (neg ? "-" : "") + mant;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

}  // namespace k3bn
