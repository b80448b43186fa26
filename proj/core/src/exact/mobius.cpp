#include "gaussrenyi/exact/mobius.hpp"

#include "gaussrenyi/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace gr::exact {

Mobius::Mobius(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const BigInt det = a_ * d_ - b_ * c_;
  if (det != 1 && det != -1)
    throw std::invalid_argument("Mobius determinant must be +1 or -1, got " + det.str());
}

int Mobius::det() const { return (a_ * d_ - b_ * c_).sign(); }

Mobius Mobius::inverse() const {
  if (det() > 0) return Mobius(d_, -b_, -c_, a_);
  return Mobius(-d_, b_, c_, -a_);
}

Rational Mobius::apply(const Rational& x) const {
  // (a*n/m + b) / (c*n/m + d) = (a*n + b*m) / (c*n + d*m)
  BigInt den = c_ * x.num() + d_ * x.den();
  if (den == 0) throw PoleError("Mobius " + str() + " has a pole at " + x.str());
  return Rational(a_ * x.num() + b_ * x.den(), std::move(den));
}

QuadIrr Mobius::apply(const QuadIrr& x) const {
  // numerator u1 + v1*sqrt(D), denominator u2 + v2*sqrt(D), both scaled by r
  const BigInt u1 = a_ * x.p() + b_ * x.r();
  const BigInt v1 = a_ * x.q();
  const BigInt u2 = c_ * x.p() + d_ * x.r();
  const BigInt v2 = c_ * x.q();
  if (u2 == 0 && v2 == 0) throw PoleError("Mobius " + str() + " has a pole at " + x.str());
  const BigInt& D = x.d();
  // v1*u2 - u1*v2 = q*r*det != 0, so the image stays irrational
  return QuadIrr(u1 * u2 - v1 * v2 * D, v1 * u2 - u1 * v2, u2 * u2 - v2 * v2 * D, D);
}

Point Mobius::apply(const Point& x) const {
  return std::visit([this](const auto& v) -> Point { return apply(v); }, x);
}

std::string Mobius::str() const {
  return "(" + a_.str() + "," + b_.str() + ";" + c_.str() + "," + d_.str() + ")";
}

Mobius mobius_compose(const Mobius& m1, const Mobius& m2) {
  // det = +-1 keeps the entries coprime, so no gcd reduction is needed
  return Mobius(m1.a() * m2.a() + m1.b() * m2.c(), m1.a() * m2.b() + m1.b() * m2.d(),
                m1.c() * m2.a() + m1.d() * m2.c(), m1.c() * m2.b() + m1.d() * m2.d());
}

std::vector<Point> mobius_fixed_points(const Mobius& m) {
  const BigInt& a = m.a();
  const BigInt& b = m.b();
  const BigInt& c = m.c();
  const BigInt& d = m.d();
  if (c == 0) {
    if (d == a) throw DegenerateError("Mobius " + m.str() + " has no isolated finite fixed point");
    return {Rational(b, d - a)};
  }
  const BigInt disc = (d - a) * (d - a) + 4 * b * c;
  if (disc < 0) return {};
  BigInt root;
  std::vector<Point> out;
  if (is_perfect_square(disc, &root)) {
    out.emplace_back(Rational(a - d - root, 2 * c));
    if (root != 0) out.emplace_back(Rational(a - d + root, 2 * c));
  } else {
    out.emplace_back(QuadIrr(a - d, -1, 2 * c, disc));
    out.emplace_back(QuadIrr(a - d, 1, 2 * c, disc));
  }
  std::sort(out.begin(), out.end(),
            [](const Point& x, const Point& y) { return compare(x, y) < 0; });
  return out;
}

}  // namespace gr::exact
