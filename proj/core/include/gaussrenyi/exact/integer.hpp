#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace gr::exact {

/// Arbitrary-precision integer; expression templates off so results can be held by `auto`.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline int sign(const BigInt& v) { return v.sign(); }

inline BigInt abs(const BigInt& v) { return v.sign() < 0 ? BigInt(-v) : v; }

BigInt gcd(const BigInt& a, const BigInt& b);

/// floor(a / b) for b != 0.
BigInt floor_div(const BigInt& a, const BigInt& b);

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

/// True when n >= 0 is a perfect square; stores the root in *root if given.
bool is_perfect_square(const BigInt& n, BigInt* root = nullptr);

/// n = root^2 * core with core squarefree; n must be positive.
struct SquareSplit {
  BigInt root;
  BigInt core;
};

SquareSplit split_square(const BigInt& n);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace gr::exact
