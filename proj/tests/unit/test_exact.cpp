#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gaussrenyi/errors.hpp"
#include "gaussrenyi/exact.hpp"
#include "oracles.hpp"

#include <vector>

using namespace gr::exact;
using oracle::Float;

namespace {

const QuadIrr kGoldenSmall(-1, 1, 2, 5);  // (-1+sqrt5)/2
const QuadIrr kGoldenBig(1, 1, 2, 5);     // (1+sqrt5)/2
const QuadIrr kSqrt2(0, 1, 1, 2);

Mobius random_unimodular(oracle::Lcg& g) {
  Mobius m = Mobius::identity();
  const int steps = static_cast<int>(g.range(1, 6));
  for (int i = 0; i < steps; ++i) {
    const std::int64_t k = g.range(-4, 4);
    switch (g.range(0, 2)) {
      case 0: m = m * Mobius(1, k, 0, 1); break;
      case 1: m = m * Mobius(1, 0, k, 1); break;
      default: m = m * Mobius(0, 1, 1, 0); break;  // det -1
    }
  }
  return m;
}

}  // namespace

TEST_CASE("integer helpers") {
  CHECK(floor_div(BigInt(7), BigInt(2)) == 3);
  CHECK(floor_div(BigInt(-7), BigInt(2)) == -4);
  CHECK(floor_div(BigInt(7), BigInt(-2)) == -4);
  CHECK(floor_div(BigInt(-6), BigInt(3)) == -2);
  CHECK(isqrt(BigInt(0)) == 0);
  CHECK(isqrt(BigInt(15)) == 3);
  CHECK(isqrt(BigInt(16)) == 4);
  BigInt big = BigInt(1) << 200;
  CHECK(isqrt(big) == (BigInt(1) << 100));
  CHECK(isqrt(big - 1) == (BigInt(1) << 100) - 1);
  BigInt r;
  CHECK(is_perfect_square(BigInt(144), &r));
  CHECK(r == 12);
  CHECK_FALSE(is_perfect_square(BigInt(145)));
}

TEST_CASE("split_square matches brute force") {
  for (int n = 1; n <= 3000; ++n) {
    int root = 1;
    for (int k = 2; k * k <= n; ++k)
      if (n % (k * k) == 0) root = k;
    // largest k with k^2 | n is the square part only when the cofactor is squarefree
    const int core = n / (root * root);
    bool sqfree = true;
    for (int k = 2; k * k <= core; ++k)
      if (core % (k * k) == 0) sqfree = false;
    REQUIRE(sqfree);
    const SquareSplit s = split_square(BigInt(n));
    REQUIRE(s.root == root);
    REQUIRE(s.core == core);
  }
  // product of two large primes times a square
  const BigInt p1("1000000007"), p2("998244353");
  const SquareSplit s = split_square(p1 * p2 * 36 * p1 * p1);
  CHECK(s.root == p1 * 6);
  CHECK(s.core == p1 * p2);
}

TEST_CASE("rational normalization") {
  Rational a(BigInt(6), BigInt(-4));
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a.floor() == -2);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-7, 3).str() == "-7/3");
  CHECK(Rational(4, 2).str() == "2");
  CHECK_THROWS(Rational(BigInt(1), BigInt(0)));
}

TEST_CASE("mobius_compose") {
  const Mobius m(0, 1, 1, 1);
  CHECK(Mobius::identity() * m == m);
  CHECK(m * Mobius::identity() == m);
  CHECK(m * m == Mobius(1, 1, 1, 2));
  CHECK_THROWS_AS(Mobius(2, 0, 0, 1), std::invalid_argument);
  CHECK(m * m.inverse() == Mobius::identity());
}

TEST_CASE("determinant is multiplicative") {
  oracle::Lcg g{7};
  for (int i = 0; i < 100; ++i) {
    const Mobius m1 = random_unimodular(g);
    const Mobius m2 = random_unimodular(g);
    REQUIRE((m1 * m2).det() == m1.det() * m2.det());
  }
}

TEST_CASE("mobius_apply on rationals") {
  const Mobius m(0, 1, 1, 1);
  CHECK(m.apply(Rational(0)) == Rational(1));
  CHECK(m.apply(Rational(1)) == Rational(1, 2));
  CHECK(Mobius::identity().apply(Rational(3, 7)) == Rational(3, 7));
  CHECK_THROWS_AS(m.apply(Rational(-1)), gr::PoleError);
}

TEST_CASE("mobius_fixed_points") {
  const auto golden = mobius_fixed_points(Mobius(0, 1, 1, 1));
  REQUIRE(golden.size() == 2);
  CHECK(std::get<QuadIrr>(golden[0]) == QuadIrr(-1, -1, 2, 5));
  CHECK(std::get<QuadIrr>(golden[1]) == kGoldenSmall);

  const auto dbl = mobius_fixed_points(Mobius(1, 0, 1, 1));
  REQUIRE(dbl.size() == 1);
  CHECK(std::get<Rational>(dbl[0]) == Rational(0));

  // x = (2x+1)/(x+1): x^2 - x - 1 = 0
  const auto pair = mobius_fixed_points(Mobius(2, 1, 1, 1));
  REQUIRE(pair.size() == 2);
  CHECK(std::get<QuadIrr>(pair[0]) == QuadIrr(1, -1, 2, 5));
  CHECK(std::get<QuadIrr>(pair[1]) == kGoldenBig);

  // rational pair: x = (3x - 2)/(2x - 1)... roots of 2x^2 - 4x + 2: double root 1
  const auto one = mobius_fixed_points(Mobius(3, -2, 2, -1));
  REQUIRE(one.size() == 1);
  CHECK(std::get<Rational>(one[0]) == Rational(1));

  CHECK_THROWS_AS(mobius_fixed_points(Mobius::identity()), gr::DegenerateError);
}

TEST_CASE("fixed points are fixed") {
  oracle::Lcg g{11};
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const Mobius m = random_unimodular(g);
    if (m.c() == 0 && m.a() == m.d()) continue;
    for (const Point& x : mobius_fixed_points(m)) {
      const Float v = oracle::to_float(x);
      const Float den = Float(m.c()) * v + Float(m.d());
      if (abs(den) < Float(1e-30)) continue;
      if (const auto* q = std::get_if<QuadIrr>(&x)) {
        REQUIRE(m.apply(*q) == *q);
        ++checked;
      }
      REQUIRE(abs((Float(m.a()) * v + Float(m.b())) / den - v) < Float(1e-50));
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("quad_conjugate") {
  CHECK(kGoldenSmall.conjugate() == QuadIrr(-1, -1, 2, 5));
  CHECK(kSqrt2.conjugate() == QuadIrr(0, -1, 1, 2));
  oracle::Lcg g{3};
  for (int i = 0; i < 200; ++i) {
    const QuadIrr x(g.range(-50, 50), g.range(1, 20), g.range(1, 30), 4 * g.range(0, 40) + 2);
    REQUIRE(x.conjugate().conjugate() == x);
  }
}

TEST_CASE("quad_compare examples") {
  CHECK(quad_compare(kGoldenSmall, Rational(1, 2)) == std::strong_ordering::greater);
  CHECK(quad_compare(kSqrt2, Rational(2)) == std::strong_ordering::less);
  CHECK(quad_compare(QuadIrr(-1, -1, 2, 5), Rational(0)) == std::strong_ordering::less);
  CHECK(kGoldenSmall < kGoldenBig);
}

TEST_CASE("quad_compare agrees with 200-bit floats") {
  oracle::Lcg g{2024};
  int done = 0;
  for (int i = 0; i < 10000; ++i) {
    QuadIrr x = [&] {
      for (;;) {
        try {
          return QuadIrr(g.range(-1000, 1000), g.range(-50, 50), g.range(1, 500), g.range(2, 500));
        } catch (const gr::NotIrrational&) {
        }
      }
    }();
    const Rational y(BigInt(g.range(-5000, 5000)), BigInt(g.range(1, 2000)));
    const Float diff = oracle::to_float(x) - oracle::to_float(y);
    REQUIRE(abs(diff) > Float(1e-40));
    const auto expect = diff > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    REQUIRE(quad_compare(x, y) == expect);
    ++done;
  }
  CHECK(done == 10000);
}

TEST_CASE("quad_compare between surds") {
  oracle::Lcg g{99};
  for (int i = 0; i < 2000; ++i) {
    const QuadIrr a(g.range(-100, 100), g.range(1, 9), g.range(1, 50), 2 + 4 * g.range(0, 5));
    const QuadIrr b(g.range(-100, 100), g.range(-9, -1), g.range(1, 50), 3 + 4 * g.range(0, 5));
    const Float diff = oracle::to_float(a) - oracle::to_float(b);
    if (abs(diff) < Float(1e-40)) continue;
    REQUIRE((a < b) == (diff < 0));
  }
}

TEST_CASE("quad_floor") {
  CHECK(quad_floor(kGoldenSmall) == 0);
  CHECK(quad_floor(kSqrt2) == 1);
  CHECK(quad_floor(kGoldenBig) == 1);
  CHECK(quad_floor(-kSqrt2) == -2);
  oracle::Lcg g{5};
  for (int i = 0; i < 2000; ++i) {
    const QuadIrr x(g.range(-10000, 10000), g.range(-300, 300) | 1, g.range(1, 97), 7);
    REQUIRE(quad_floor(x) == BigInt(floor(oracle::to_float(x))));
  }
}

TEST_CASE("quad_mobius_apply") {
  CHECK(quad_mobius_apply(Mobius::identity(), kSqrt2) == kSqrt2);
  CHECK(quad_mobius_apply(Mobius(0, 1, 1, 1), kGoldenSmall) == kGoldenSmall);
  CHECK(quad_mobius_apply(Mobius(1, -1, 0, 1), kGoldenBig) == kGoldenSmall);
  oracle::Lcg g{17};
  for (int i = 0; i < 300; ++i) {
    const Mobius m = random_unimodular(g);
    const QuadIrr x(g.range(-20, 20), g.range(1, 5), g.range(1, 20), 3);
    const Float v = oracle::to_float(x);
    const Float den = Float(m.c()) * v + Float(m.d());
    const Float want = (Float(m.a()) * v + Float(m.b())) / den;
    REQUIRE(abs(oracle::to_float(m.apply(x)) - want) < Float(1e-45));
  }
}

TEST_CASE("canonical forms are unique") {
  // sqrt(8) = 2 sqrt(2); (2 + 2 sqrt 8)/6 = (1 + 2 sqrt 2)/3
  CHECK(QuadIrr(0, 1, 1, 8) == QuadIrr(0, 2, 1, 2));
  CHECK(QuadIrr(2, 2, 6, 8) == QuadIrr(1, 2, 3, 2));
  CHECK(QuadIrr(-1, -1, -2, 5) == kGoldenBig);
  const QuadIrr x(4, 6, 10, 12);
  CHECK(x.d() == 3);
  CHECK(x.r() > 0);
  CHECK(gcd(gcd(x.p(), x.q()), x.r()) == 1);
  CHECK_THROWS_AS(QuadIrr(1, 1, 1, 9), gr::NotIrrational);
  CHECK_THROWS_AS(QuadIrr(1, 0, 1, 2), gr::NotIrrational);
}

TEST_CASE("make_point and string forms") {
  CHECK(std::holds_alternative<Rational>(make_point(1, 2, 3, 4)));
  CHECK(std::get<Rational>(make_point(1, 2, 3, 4)) == Rational(5, 3));
  CHECK(std::holds_alternative<QuadIrr>(make_point(1, 2, 3, 5)));
  CHECK(kGoldenSmall.str() == "(-1+1*sqrt(5))/2");
  CHECK(compare(Point(Rational(1, 2)), Point(kGoldenSmall)) == std::strong_ordering::less);
  CHECK(compare(Point(Rational(1, 2)), Point(Rational(1, 2))) == std::strong_ordering::equal);
}
