#pragma once

#include "gaussrenyi/exact/integer.hpp"
#include "gaussrenyi/exact/rational.hpp"

#include <compare>
#include <string>
#include <variant>

namespace gr::exact {

/// Real quadratic irrational (p + q*sqrt(d)) / r in canonical form:
/// d > 1 squarefree, q != 0, r > 0, gcd(p, q, r) = 1.
///
/// Canonical forms are unique, so field-wise equality is value equality.
class QuadIrr {
 public:
  /// Canonicalizes; throws NotIrrational when the value is rational.
  QuadIrr(BigInt p, BigInt q, BigInt r, BigInt d);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& r() const { return r_; }
  const BigInt& d() const { return d_; }

  /// Galois conjugate: sqrt(d) -> -sqrt(d).
  QuadIrr conjugate() const;

  /// Exact floor by integer square-root bracketing.
  BigInt floor() const;

  /// Never returns equal: an irrational differs from every rational.
  std::strong_ordering compare(const Rational& y) const;
  std::strong_ordering compare(const QuadIrr& y) const;

  friend bool operator==(const QuadIrr&, const QuadIrr&) = default;
  friend std::strong_ordering operator<=>(const QuadIrr& a, const QuadIrr& b) { return a.compare(b); }

  QuadIrr operator-() const { return QuadIrr(-p_, -q_, r_, d_); }
  friend QuadIrr operator+(const QuadIrr& x, const Rational& y);
  friend QuadIrr operator-(const QuadIrr& x, const Rational& y) { return x + (-y); }

  long double to_long_double() const;

  /// "(p+q*sqrt(d))/r", the same syntax accepted by the CLI.
  std::string str() const;

 private:
  BigInt p_, q_, r_, d_;
};

/// Either kind of exact real the library manipulates.
using Point = std::variant<Rational, QuadIrr>;

/// (p + q*sqrt(d)) / r as a Point; rational when q == 0 or d is a perfect square.
Point make_point(BigInt p, BigInt q, BigInt r, BigInt d);

/// Sign of u + v*sqrt(d) for d > 0 not a perfect square.
int sign_surd(const BigInt& u, const BigInt& v, const BigInt& d);

inline QuadIrr quad_conjugate(const QuadIrr& x) { return x.conjugate(); }
inline std::strong_ordering quad_compare(const QuadIrr& x, const Rational& y) { return x.compare(y); }
inline BigInt quad_floor(const QuadIrr& x) { return x.floor(); }

std::strong_ordering compare(const Point& x, const Point& y);
long double to_long_double(const Point& x);
std::string to_string(const Point& x);

}  // namespace gr::exact
