#pragma once

#include "gaussrenyi/exact/integer.hpp"
#include "gaussrenyi/exact/quad_irr.hpp"
#include "gaussrenyi/exact/rational.hpp"

#include <string>
#include <vector>

namespace gr::exact {

/// Integer Mobius transform x -> (a*x + b) / (c*x + d) with determinant +1 or -1.
class Mobius {
 public:
  Mobius(BigInt a, BigInt b, BigInt c, BigInt d);

  static Mobius identity() { return Mobius(1, 0, 0, 1); }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  int det() const;
  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

  /// Inverse transform (adjugate scaled by the determinant).
  Mobius inverse() const;

  Rational apply(const Rational& x) const;
  QuadIrr apply(const QuadIrr& x) const;
  Point apply(const Point& x) const;

  friend bool operator==(const Mobius&, const Mobius&) = default;

  std::string str() const;

 private:
  BigInt a_, b_, c_, d_;
};

/// m1 after m2, i.e. the matrix product m1 * m2.
Mobius mobius_compose(const Mobius& m1, const Mobius& m2);

inline Mobius operator*(const Mobius& m1, const Mobius& m2) { return mobius_compose(m1, m2); }

inline Rational mobius_apply(const Mobius& m, const Rational& x) { return m.apply(x); }
inline QuadIrr quad_mobius_apply(const Mobius& m, const QuadIrr& x) { return m.apply(x); }

/// Finite fixed points, i.e. real roots of c*x^2 + (d - a)*x - b = 0, sorted ascending.
/// A double root is reported once. Throws DegenerateError when c = 0 and d = a.
std::vector<Point> mobius_fixed_points(const Mobius& m);

}  // namespace gr::exact
