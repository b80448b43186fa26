#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gaussrenyi/cycles.hpp"
#include "gaussrenyi/errors.hpp"
#include "oracles.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <vector>

using namespace gr::cycles;
using gr::exact::BigInt;
using gr::exact::Mobius;
using gr::exact::QuadIrr;
using gr::maps::MapId;

namespace {

void for_each_word(std::size_t max_len, Digit max_digit, const std::function<void(const CylinderWord&)>& f) {
  std::vector<Digit> cur;
  std::function<void()> rec = [&] {
    if (!cur.empty()) f(CylinderWord(cur));
    if (cur.size() == max_len) return;
    for (Digit a = 1; a <= max_digit; ++a) {
      cur.push_back(a);
      rec();
      cur.pop_back();
    }
  };
  rec();
}

// C x + D as an exact point.
Point eigenvalue(const Mobius& m, const Point& x) {
  if (const auto* r = std::get_if<Rational>(&x)) return Point(Rational(m.c()) * *r + Rational(m.d()));
  const QuadIrr& q = std::get<QuadIrr>(x);
  return gr::exact::make_point(m.c() * q.p() + m.d() * q.r(), m.c() * q.q(), q.r(), q.d());
}

ParityWord bits_of(unsigned mask, std::size_t n) {
  std::vector<gr::maps::Bit> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (mask >> i) & 1U;
  return ParityWord(b);
}

// 1/(C x + D)^2 from the 200-bit value of x.
oracle::Float weight_oracle(const CylinderWord& w, const Point& x) {
  const Mobius m = gr::maps::word_mobius(w);
  const oracle::Float e = oracle::Float(m.c()) * oracle::to_float(x) + oracle::Float(m.d());
  return 1 / (e * e);
}

}  // namespace

TEST_CASE("fixed_point_of_word examples") {
  const WeightedCycle neutral = fixed_point_of_word(CylinderWord{1});
  CHECK(std::get<Rational>(neutral.fixed_point) == Rational(0));
  CHECK(neutral.weight == 1.0L);

  const WeightedCycle golden = fixed_point_of_word(CylinderWord{2});
  CHECK(std::get<QuadIrr>(golden.fixed_point) == QuadIrr(-1, 1, 2, 5));
  CHECK(golden.weight == doctest::Approx((3 - std::sqrt(5.0)) / 2).epsilon(1e-15));
  CHECK(golden.cyl_len == Rational(1, 2));

  const WeightedCycle c23 = fixed_point_of_word(CylinderWord{2, 3});
  const Mobius m = gr::maps::word_mobius(CylinderWord{2, 3});
  const auto& x = std::get<QuadIrr>(c23.fixed_point);
  CHECK(m.apply(x) == x);
  CHECK(gr::maps::cylinder_interval(CylinderWord{2, 3}).contains(x));
}

TEST_CASE("fixed points are exact and inside their cylinder") {
  for_each_word(4, 7, [](const CylinderWord& w) {
    const WeightedCycle c = fixed_point_of_word(w);
    const Mobius m = gr::maps::word_mobius(w);
    REQUIRE(gr::exact::compare(m.apply(c.fixed_point), c.fixed_point) == std::strong_ordering::equal);
    REQUIRE(gr::maps::cylinder_interval(w).closure_contains(c.fixed_point));
    const oracle::Float want = weight_oracle(w, c.fixed_point);
    REQUIRE(abs(oracle::Float(c.weight) - want) <= want * oracle::Float(1e-18));
  });
}

TEST_CASE("rotate_word") {
  CHECK(rotate_word(CylinderWord{2, 3, 4}, 1) == CylinderWord{3, 4, 2});
  CHECK(rotate_word(CylinderWord{2, 3, 4}, 0) == CylinderWord{2, 3, 4});
  CHECK(rotate_word(CylinderWord{2, 3, 4}, 3) == CylinderWord{2, 3, 4});
}

TEST_CASE("rotation commutes with the map") {
  for_each_word(4, 6, [](const CylinderWord& w) {
    const Point x = fixed_point_of_word(w).fixed_point;
    const Point y = fixed_point_of_word(rotate_word(w, 1)).fixed_point;
    const Point tx = gr::maps::apply_map(gr::maps::map_of_digit(w[0]), x);
    REQUIRE(gr::exact::compare(tx, y) == std::strong_ordering::equal);
  });
}

TEST_CASE("weights are rotation invariant") {
  // The multiplier C x + D of a periodic orbit is the same at every point, exactly.
  for_each_word(5, 4, [](const CylinderWord& w) {
    const Point e0 = eigenvalue(gr::maps::word_mobius(w), fixed_point_of_word(w).fixed_point);
    for (std::size_t i = 1; i < w.size(); ++i) {
      const CylinderWord r = rotate_word(w, i);
      const Point ei = eigenvalue(gr::maps::word_mobius(r), fixed_point_of_word(r).fixed_point);
      REQUIRE(gr::exact::compare(e0, ei) == std::strong_ordering::equal);
    }
  });
}

TEST_CASE("enumerate_quenched examples") {
  const CycleSet g = enumerate_quenched(ParityWord{0}, 20, 0.0);
  REQUIRE(g.cycles.size() == 10);
  long double sum = 0;
  for (std::size_t i = 0; i < g.cycles.size(); ++i) {
    CHECK(g.cycles[i].word == CylinderWord{2 * (i + 1)});
    sum += g.cycles[i].weight;
  }
  CHECK(g.z_partial == doctest::Approx(static_cast<double>(sum)).epsilon(1e-15));
  const long double d = distortion_ceiling(Mode{Quenched{ParityWord{0}}});
  CHECK(g.z_partial <= std::exp(d));
  CHECK(g.z_partial + g.tail_bound >= std::exp(-d));

  const CycleSet r = enumerate_quenched(ParityWord{1}, 20, 0.0);
  REQUIRE(!r.cycles.empty());
  CHECK(r.cycles.front().word == CylinderWord{1});
  CHECK(r.cycles.front().weight == 1.0L);

  const CycleSet gg = enumerate_quenched(ParityWord{0, 0}, 6, 0.0);
  CHECK(gg.cycles.size() == 9);
  for (const WeightedCycle& c : gg.cycles) {
    const long double len = c.cyl_len.to_long_double();
    const long double dh = cylinder_distortion(c.word);
    CHECK(c.weight >= std::exp(-dh) * len * (1 - 1e-15L));
    CHECK(c.weight <= std::exp(dh) * len * (1 + 1e-15L));
  }
}

TEST_CASE("enumerate_annealed examples") {
  const CycleSet a = enumerate_annealed(1, 0.5, 2, 0.0);
  REQUIRE(a.cycles.size() == 2);
  CHECK(a.cycles[0].word == CylinderWord{1});
  CHECK(a.cycles[0].weight == 0.5L);
  CHECK(a.cycles[1].word == CylinderWord{2});
  CHECK(a.cycles[1].weight == doctest::Approx(0.5 * (3 - std::sqrt(5.0)) / 2).epsilon(1e-15));
  CHECK_THROWS(enumerate_annealed(2, 0.0, 10, 0.0));
  CHECK_THROWS(enumerate_annealed(2, 1.0, 10, 0.0));
  CHECK_THROWS_AS(enumerate_quenched(ParityWord{0}, 1, 0.0), gr::CapTooSmall);
}

TEST_CASE("annealed sum is the Bernoulli average of quenched sums") {
  for (double p : {0.3, 0.5, 0.8}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const Digit cap = 10;
      const CycleSet a = enumerate_annealed(n, p, cap, 0.0);
      long double avg = 0;
      for (unsigned mask = 0; mask < (1U << n); ++mask) {
        const ParityWord om = bits_of(mask, n);
        const long double q = std::pow(static_cast<long double>(p), om.count_ones()) *
                              std::pow(1.0L - p, static_cast<long double>(n - om.count_ones()));
        avg += q * enumerate_quenched(om, cap, 0.0).z_partial;
      }
      REQUIRE(a.z_partial == doctest::Approx(static_cast<double>(avg)).epsilon(1e-14));
    }
  }
}

TEST_CASE("pruning changes z by at most tail_bound") {
  const std::vector<Mode> modes{Mode{Quenched{ParityWord::parse("0110")}}, Mode{Quenched{ParityWord::parse("000")}},
                                Mode{Annealed{3, 0.4}}};
  for (const Mode& mode : modes) {
    const Truncation full{30, 0.0};
    const EnumerationResult ref = for_each_cycle(mode, full, 1, [](std::size_t, const CycleView&) {});
    for (double eps : {1e-3, 1e-4, 1e-6}) {
      const EnumerationResult r = for_each_cycle(mode, Truncation{30, eps}, 1, [](std::size_t, const CycleView&) {});
      REQUIRE(r.stats.z_partial <= ref.stats.z_partial);
      REQUIRE(ref.stats.z_partial - r.stats.z_partial <= r.tail_bound);
      REQUIRE(r.stats.cycles <= ref.stats.cycles);
    }
  }
}

TEST_CASE("Z bracket on quenched runs") {
  for (const char* om : {"0", "1", "01", "10", "000", "011", "111", "0101", "00000"}) {
    const Mode mode{Quenched{ParityWord::parse(om)}};
    const EnumerationResult r = for_each_cycle(mode, Truncation{200, 1e-8}, 1, [](std::size_t, const CycleView& v) {
      const long double d = v.distortion();
      REQUIRE(d >= 0);
      REQUIRE(v.weight >= std::exp(-d) * v.cyl_len * (1 - 1e-15L));
      REQUIRE(v.weight <= std::exp(d) * v.cyl_len * (1 + 1e-15L));
    });
    const long double dn = r.distortion_ceiling;
    CHECK(r.stats.distortion_max <= dn);
    CHECK(r.stats.z_partial <= std::exp(dn));
    CHECK(r.stats.z_partial + r.tail_bound >= std::exp(-dn));
  }
}

TEST_CASE("workers do not change results") {
  const Mode mode{Annealed{4, 0.35}};
  const Truncation t{50, 1e-7};
  auto run = [&](unsigned workers) {
    std::map<std::size_t, std::vector<long double>> per_task;
    std::mutex mu;
    const EnumerationResult r = for_each_cycle(mode, t, workers, [&](std::size_t task, const CycleView& v) {
      std::lock_guard<std::mutex> lock(mu);
      per_task[task].push_back(v.annealed_weight());
    });
    return std::make_pair(r, per_task);
  };
  const auto [r1, c1] = run(1);
  const auto [r4, c4] = run(4);
  CHECK(r1.stats.z_partial == r4.stats.z_partial);
  CHECK(r1.stats.covered == r4.stats.covered);
  CHECK(r1.stats.cycles == r4.stats.cycles);
  CHECK(r1.tail_bound == r4.tail_bound);
  CHECK(c1 == c4);
  CHECK(task_count(mode, t) == c1.size());
}

TEST_CASE("cycle views agree with the exact construction") {
  const Mode mode{Quenched{ParityWord::parse("0101")}};
  std::size_t seen = 0;
  for_each_cycle(mode, Truncation{12, 0.0}, 1, [&](std::size_t, const CycleView& v) {
    const WeightedCycle w = v.materialize();
    const WeightedCycle exact = fixed_point_of_word(w.word);
    REQUIRE(gr::exact::compare(w.fixed_point, exact.fixed_point) == std::strong_ordering::equal);
    REQUIRE(w.cyl_len == exact.cyl_len);
    REQUIRE(v.weight == doctest::Approx(static_cast<double>(exact.weight)).epsilon(1e-15));
    REQUIRE(v.distortion() == doctest::Approx(static_cast<double>(cylinder_distortion(w.word))).epsilon(1e-14));
    std::vector<long double> orb(v.word.size());
    v.orbit(orb);
    for (std::size_t i = 0; i < orb.size(); ++i)
      REQUIRE(orb[i] == doctest::Approx(static_cast<double>(gr::exact::to_long_double(v.exact_orbit_point(i))))
                            .epsilon(1e-14));
    ++seen;
  });
  CHECK(seen == 6 * 6 * 6 * 6);
}

TEST_CASE("distortion checks") {
  for (Digit a = 1; a <= 200; ++a) {
    const long double d = cylinder_distortion(CylinderWord{a});
    REQUIRE(d >= 0);
    REQUIRE(d <= 2);
  }
  // neutral tower: D(1^n) = 2 log(1 + n) grows sublinearly
  long double prev = 1e9;
  for (std::size_t n = 2; n <= 12; ++n) {
    const long double ratio = cylinder_distortion(CylinderWord(std::vector<Digit>(n, 1))) / n;
    CHECK(ratio < prev);
    prev = ratio;
  }
  for_each_word(4, 5, [](const CylinderWord& w) { REQUIRE(cylinder_distortion(w) >= 0); });

  const DistortionReport q = distortion_bound_global(Mode{Quenched{ParityWord::parse("0110")}}, 12);
  CHECK(q.chain_dominates);
  CHECK(q.max_distortion <= q.max_chain_bound);
  CHECK(q.max_distortion <= distortion_ceiling(Mode{Quenched{ParityWord::parse("0110")}}));
  const DistortionReport a = distortion_bound_global(Mode{Annealed{3, 0.5}}, 10);
  CHECK(a.chain_dominates);
  CHECK(a.max_distortion <= distortion_ceiling(Mode{Annealed{3, 0.5}}));
  const DistortionReport one = distortion_bound_global(Mode{Annealed{1, 0.5}}, 200);
  CHECK(one.max_distortion <= 2);
}

TEST_CASE("distortion ceiling bounds every word") {
  for_each_word(5, 4, [](const CylinderWord& w) {
    const Mode mode{Quenched{w.parity()}};
    REQUIRE(cylinder_distortion(w) <= distortion_ceiling(mode) + 1e-15L);
    REQUIRE(cylinder_distortion(w) <= distortion_ceiling(Mode{Annealed{w.size(), 0.5}}) + 1e-15L);
  });
}
