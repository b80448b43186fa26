#include "gaussrenyi/exact/quad_irr.hpp"

#include "gaussrenyi/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace gr::exact {

namespace {

std::strong_ordering from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

int sign_surd(const BigInt& u, const BigInt& v, const BigInt& d) {
  const int su = u.sign();
  const int sv = v.sign();
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // opposite signs: the larger magnitude wins; u^2 == v^2 d is impossible for nonsquare d
  const BigInt diff = u * u - v * v * d;
  return diff.sign() > 0 ? su : sv;
}

QuadIrr::QuadIrr(BigInt p, BigInt q, BigInt r, BigInt d)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
  if (r_ == 0) throw std::domain_error("QuadIrr with zero denominator");
  if (q_ == 0 || d_ <= 0) throw NotIrrational("quadratic surd has no irrational part");
  auto [root, core] = split_square(d_);
  if (core == 1) throw NotIrrational("radicand " + d_.str() + " is a perfect square");
  q_ *= root;
  d_ = std::move(core);
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  BigInt g = gcd(gcd(p_, q_), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

QuadIrr QuadIrr::conjugate() const { return QuadIrr(p_, -q_, r_, d_); }

BigInt QuadIrr::floor() const {
  // q*sqrt(d) is irrational, so floor((p + q*sqrt(d)) / r) = floor((p + floor(q*sqrt(d))) / r).
  const BigInt s = isqrt(q_ * q_ * d_);
  const BigInt fl = q_ > 0 ? s : BigInt(-s - 1);
  return floor_div(p_ + fl, r_);
}

std::strong_ordering QuadIrr::compare(const Rational& y) const {
  // sign of x - a/b  =  sign(b*p - a*r + b*q*sqrt(d)) since r, b > 0
  return from_sign(sign_surd(y.den() * p_ - y.num() * r_, y.den() * q_, d_));
}

std::strong_ordering QuadIrr::compare(const QuadIrr& y) const {
  // r1*r2*(x - y) = alpha + beta*sqrt(d1) + gamma*sqrt(d2)
  const BigInt alpha = p_ * y.r_ - y.p_ * r_;
  const BigInt beta = q_ * y.r_;
  const BigInt gamma = -y.q_ * r_;
  if (d_ == y.d_) {
    const BigInt v = beta + gamma;
    if (v == 0) return from_sign(alpha.sign());
    return from_sign(sign_surd(alpha, v, d_));
  }
  // sign of s = beta*sqrt(d1) + gamma*sqrt(d2); d1 != d2 squarefree so s != 0
  int ss;
  if (beta.sign() == gamma.sign())
    ss = beta.sign();
  else
    ss = (beta * beta * d_ - gamma * gamma * y.d_).sign() > 0 ? beta.sign() : gamma.sign();
  const int sa = alpha.sign();
  if (sa == 0 || sa == ss) return from_sign(ss);
  // alpha^2 - s^2 = (alpha^2 - beta^2 d1 - gamma^2 d2) - 2 beta gamma sqrt(d1 d2)
  const BigInt u = alpha * alpha - beta * beta * d_ - gamma * gamma * y.d_;
  const BigInt v = -2 * beta * gamma;
  const int mag = sign_surd(u, v, d_ * y.d_);
  return from_sign(mag > 0 ? sa : ss);
}

QuadIrr operator+(const QuadIrr& x, const Rational& y) {
  return QuadIrr(x.p_ * y.den() + y.num() * x.r_, x.q_ * y.den(), x.r_ * y.den(), x.d_);
}

long double QuadIrr::to_long_double() const {
  using Float = boost::multiprecision::cpp_bin_float_50;
  const Float v = (Float(p_) + Float(q_) * boost::multiprecision::sqrt(Float(d_))) / Float(r_);
  return static_cast<long double>(v);
}

std::string QuadIrr::str() const {
  std::string s = "(" + p_.str();
  s += q_ < 0 ? "-" : "+";
  s += abs(q_).str() + "*sqrt(" + d_.str() + "))/" + r_.str();
  return s;
}

Point make_point(BigInt p, BigInt q, BigInt r, BigInt d) {
  if (r == 0) throw std::domain_error("zero denominator");
  BigInt root;
  if (q == 0 || d == 0) return Rational(std::move(p), std::move(r));
  if (is_perfect_square(d, &root)) return Rational(p + q * root, r);
  return QuadIrr(std::move(p), std::move(q), std::move(r), std::move(d));
}

std::strong_ordering compare(const Point& x, const Point& y) {
  struct Visitor {
    std::strong_ordering operator()(const Rational& a, const Rational& b) const { return a <=> b; }
    std::strong_ordering operator()(const QuadIrr& a, const Rational& b) const { return a.compare(b); }
    std::strong_ordering operator()(const Rational& a, const QuadIrr& b) const {
      return 0 <=> b.compare(a);
    }
    std::strong_ordering operator()(const QuadIrr& a, const QuadIrr& b) const { return a.compare(b); }
  };
  return std::visit(Visitor{}, x, y);
}

long double to_long_double(const Point& x) {
  return std::visit([](const auto& v) { return v.to_long_double(); }, x);
}

std::string to_string(const Point& x) {
  return std::visit([](const auto& v) { return v.str(); }, x);
}

}  // namespace gr::exact
