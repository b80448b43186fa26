#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gaussrenyi/errors.hpp"
#include "gaussrenyi/quadirr.hpp"
#include "oracles.hpp"

#include <numeric>
#include <vector>

using namespace gr::quadirr;
using gr::exact::Mobius;
using oracle::Float;

namespace {

// D_0, D_1, ... by the float recursion x -> 1 / (floor(x) + 1 - x).
std::vector<BigInt> minus_cf_float(const QuadIrr& x, std::size_t n) {
  std::vector<BigInt> out;
  Float v = oracle::to_float(x);
  for (std::size_t i = 0; i < n; ++i) {
    const Float fl = floor(v);
    out.push_back(BigInt(fl) + 1);
    v = 1 / (fl + 1 - v);
  }
  return out;
}

bool in_unit(const QuadIrr& x) { return x.compare(Rational(0)) > 0 && x.compare(Rational(1)) < 0; }

}  // namespace

TEST_CASE("minus continued fraction examples") {
  const QuadIrr phi(1, 1, 2, 5);
  const MinusCF a = minus_cf(phi);
  CHECK(a.found);
  CHECK(a.preperiod == 1);
  CHECK(a.period == 1);
  CHECK_FALSE(a.purely_periodic());
  CHECK_FALSE(katok_criterion(phi));
  CHECK(std::vector<BigInt>(a.D.begin(), a.D.begin() + 2) == std::vector<BigInt>{2, 3});
  const auto fa = minus_cf_float(phi, 25);
  for (std::size_t i = 0; i < fa.size(); ++i) CHECK(fa[i] == (i == 0 ? 2 : 3));

  const QuadIrr psi(3, 1, 2, 5);  // (3+sqrt5)/2, conjugate 0.38...
  const MinusCF b = minus_cf(psi);
  CHECK(b.purely_periodic());
  CHECK(b.period == 1);
  CHECK(katok_criterion(psi));
  for (const BigInt& d : minus_cf_float(psi, 25)) CHECK(d == 3);

  CHECK_THROWS_AS(minus_cf_checked(QuadIrr(0, 1, 1, 2), 0), gr::NoPeriodWithinBudget);
  CHECK_THROWS_AS(QuadIrr(1, 1, 1, 4), gr::NotIrrational);
}

TEST_CASE("minus continued fraction against the float recursion") {
  oracle::Lcg g{1};
  for (int i = 0; i < 300; ++i) {
    const QuadIrr x(g.range(-40, 40), g.range(1, 5), g.range(1, 12), 2 + 4 * g.range(0, 6) + 1);
    const MinusCF m = minus_cf(x);
    REQUIRE(m.found);
    for (std::size_t k = 1; k < m.D.size(); ++k) REQUIRE(m.D[k] >= 2);
    const auto f = minus_cf_float(x, std::min<std::size_t>(m.D.size(), 30));
    for (std::size_t k = 0; k < f.size(); ++k) REQUIRE(f[k] == m.D[k]);
  }
}

TEST_CASE("T1 periodicity examples") {
  const QuadIrr golden(-1, 1, 2, 5);
  const PeriodicityReport a = is_T1_periodic(golden);
  CHECK(a.periodic);
  CHECK(a.period == 1);
  const QuadIrr r2(-1, 1, 1, 2);
  CHECK(is_T1_periodic(r2).periodic);
  const QuadIrr x(5, -1, 10, 5);  // conjugate (5+sqrt5)/10 in (0, 1)
  REQUIRE(x.conjugate().compare(Rational(0)) > 0);
  REQUIRE(x.conjugate().compare(Rational(1)) < 0);
  const PeriodicityReport c = is_T1_periodic(x);
  CHECK_FALSE(c.periodic);
  CHECK_FALSE(c.iteration_periodic);
  CHECK(c.preperiod >= 1);
}

TEST_CASE("T0 periodicity examples") {
  const QuadIrr golden(-1, 1, 2, 5);
  const PeriodicityReport a = is_T0_periodic(golden);
  CHECK(a.periodic);
  CHECK(a.period == 1);
  const PeriodicityReport b = is_T0_periodic(QuadIrr(-1, 1, 1, 2));
  CHECK(b.periodic);
  CHECK(b.period == 1);
  const PeriodicityReport c = is_T0_periodic(QuadIrr(3, -1, 2, 5));
  CHECK_FALSE(c.periodic);
  CHECK(c.preperiod >= 1);
  CHECK(c.agree);
  CHECK_THROWS(is_T0_periodic(QuadIrr(1, 1, 2, 5)));
}

TEST_CASE("periodicity criteria agree with iteration on a small family") {
  std::size_t members = 0;
  for_each_family_member(4, 6, 20, [&](const QuadIrr& x) {
    REQUIRE(in_unit(x));
    REQUIRE(check_periodicity(MapId::Renyi, x).agree);
    REQUIRE(check_periodicity(MapId::Gauss, x).agree);
    ++members;
  });
  CHECK(members > 100);
}

TEST_CASE("family enumeration is canonical and complete") {
  std::vector<QuadIrr> seen;
  for_each_family_member(3, 3, 7, [&](const QuadIrr& x) { seen.push_back(x); });
  // brute force over all representations, canonicalized
  std::vector<QuadIrr> want;
  for (int d : {2, 3, 5, 6, 7})
    for (int r = 1; r <= 3; ++r)
      for (int p = -3; p <= 3; ++p)
        for (int q = -10; q <= 10; ++q) {
          if (q == 0 || std::gcd(std::gcd(p, q), r) != 1) continue;
          const QuadIrr x(p, q, r, d);
          if (in_unit(x)) want.push_back(x);
        }
  CHECK(seen == want);
}

TEST_CASE("pure periodicity of minus continued fractions") {
  std::size_t n = 0;
  for_each_family_member(4, 6, 20, [&](const QuadIrr& x) {
    for (int k = 0; k <= 3; ++k) {
      const QuadIrr y = x + Rational(k);
      REQUIRE(minus_cf(y).purely_periodic() == katok_criterion(y));
      ++n;
    }
  });
  CHECK(n > 400);
}

TEST_CASE("x -> 1/(1-x) carries the T1 criterion to the minus-CF criterion") {
  const Mobius bridge(0, 1, -1, 1);
  std::size_t n = 0;
  for_each_family_member(6, 5, 30, [&](const QuadIrr& x) {
    if (n >= 100) return;
    const QuadIrr y = bridge.apply(x);
    REQUIRE(is_T1_periodic(x).periodic == minus_cf(y).purely_periodic());
    REQUIRE(katok_criterion(y) == (x.conjugate().compare(Rational(0)) < 0));
    ++n;
  });
  CHECK(n == 100);
}
