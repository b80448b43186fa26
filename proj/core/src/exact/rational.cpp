#include "gaussrenyi/exact/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>

namespace gr::exact {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("Rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  *this = Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = Rational(num_ * o.num_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational division by zero");
  *this = Rational(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

long double Rational::to_long_double() const {
  using Float = boost::multiprecision::cpp_bin_float_50;
  return static_cast<long double>(Float(num_) / Float(den_));
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

}  // namespace gr::exact
