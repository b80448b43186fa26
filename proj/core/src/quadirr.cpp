#include "gaussrenyi/quadirr.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace gr::quadirr {

namespace {

using Key = std::tuple<BigInt, BigInt, BigInt>;

// Mobius images keep the radicand, so (p, q, r) identifies an iterate.
Key key_of(const QuadIrr& x) { return {x.p(), x.q(), x.r()}; }

bool in_unit_interval(const QuadIrr& x) { return x.compare(Rational(0)) > 0 && x.compare(Rational(1)) < 0; }

bool squarefree(int d) {
  for (int k = 2; k * k <= d; ++k)
    if (d % (k * k) == 0) return false;
  return true;
}

}  // namespace

MinusCF minus_cf(const QuadIrr& x, std::size_t max_steps) {
  MinusCF out;
  std::map<Key, std::size_t> seen;
  QuadIrr cur = x;
  for (std::size_t n = 0; n <= max_steps; ++n) {
    const auto [it, inserted] = seen.emplace(key_of(cur), n);
    if (!inserted) {
      out.preperiod = it->second;
      out.period = n - it->second;
      out.found = true;
      return out;
    }
    const BigInt fl = cur.floor();
    out.D.push_back(fl + 1);
    // x_{n+1} = 1 / (floor(x_n) + 1 - x_n)
    cur = exact::Mobius(0, 1, -1, fl + 1).apply(cur);
  }
  return out;
}

MinusCF minus_cf_checked(const QuadIrr& x, std::size_t max_steps) {
  MinusCF out = minus_cf(x, max_steps);
  if (!out.found)
    throw NoPeriodWithinBudget("minus continued fraction of " + x.str() + " did not repeat within " +
                               std::to_string(max_steps) + " steps");
  return out;
}

bool katok_criterion(const QuadIrr& x) {
  const QuadIrr c = x.conjugate();
  return x.compare(Rational(1)) > 0 && c.compare(Rational(0)) > 0 && c.compare(Rational(1)) < 0;
}

OrbitCycle orbit_cycle(MapId map, const QuadIrr& x, std::size_t budget) {
  if (!in_unit_interval(x)) throw std::domain_error("orbit_cycle needs x in (0, 1)");
  OrbitCycle out;
  std::map<Key, std::size_t> seen;
  QuadIrr cur = x;
  for (std::size_t n = 0; n <= budget; ++n) {
    const auto [it, inserted] = seen.emplace(key_of(cur), n);
    if (!inserted) {
      out.preperiod = it->second;
      out.period = n - it->second;
      out.found = true;
      return out;
    }
    cur = maps::apply_map(map, cur);
  }
  return out;
}

PeriodicityReport check_periodicity(MapId map, const QuadIrr& x, std::size_t budget) {
  if (!in_unit_interval(x)) throw std::domain_error("periodicity check needs x in (0, 1)");
  const Rational bound = map == MapId::Gauss ? Rational(-1) : Rational(0);
  PeriodicityReport r;
  r.periodic = x.conjugate().compare(bound) < 0;
  const OrbitCycle c = orbit_cycle(map, x, budget);
  if (!c.found)
    throw NoPeriodWithinBudget("orbit of " + x.str() + " did not repeat within " + std::to_string(budget) +
                               " steps");
  r.iteration_periodic = c.preperiod == 0;
  r.preperiod = c.preperiod;
  r.period = r.iteration_periodic ? c.period : 0;
  r.agree = r.periodic == r.iteration_periodic;
  return r;
}

namespace {

PeriodicityReport checked(MapId map, const QuadIrr& x, std::size_t budget) {
  PeriodicityReport r = check_periodicity(map, x, budget);
  if (!r.agree)
    throw DisagreementError(std::string(map == MapId::Gauss ? "T0" : "T1") + " periodicity of " + x.str() +
                            ": iteration says " + (r.iteration_periodic ? "periodic" : "not periodic") +
                            ", conjugate criterion says " + (r.periodic ? "periodic" : "not periodic"));
  return r;
}

}  // namespace

PeriodicityReport is_T1_periodic(const QuadIrr& x, std::size_t budget) { return checked(MapId::Renyi, x, budget); }

PeriodicityReport is_T0_periodic(const QuadIrr& x, std::size_t budget) { return checked(MapId::Gauss, x, budget); }

void for_each_family_member(int max_p, int max_r, int max_d, const std::function<void(const QuadIrr&)>& visit) {
  for (int d = 2; d <= max_d; ++d) {
    if (!squarefree(d)) continue;
    const double root = std::sqrt(static_cast<double>(d));
    for (int r = 1; r <= max_r; ++r) {
      for (int p = -max_p; p <= max_p; ++p) {
        // 0 < p + q sqrt(d) < r  bounds |q|
        const int qmax = static_cast<int>((r + std::abs(p)) / root) + 1;
        for (int q = -qmax; q <= qmax; ++q) {
          if (q == 0) continue;
          if (std::gcd(std::gcd(p, q), r) != 1) continue;
          QuadIrr x(p, q, r, d);
          if (in_unit_interval(x)) visit(x);
        }
      }
    }
  }
}

}  // namespace gr::quadirr
