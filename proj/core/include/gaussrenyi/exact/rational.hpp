#pragma once

#include "gaussrenyi/exact/integer.hpp"

#include <compare>
#include <string>

namespace gr::exact {

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num) : num_(num), den_(1) {}           // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  BigInt floor() const { return floor_div(num_, den_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  long double to_long_double() const;
  double to_double() const { return static_cast<double>(to_long_double()); }

  /// "n" or "n/d".
  std::string str() const;

 private:
  BigInt num_;
  BigInt den_;
};

}  // namespace gr::exact
