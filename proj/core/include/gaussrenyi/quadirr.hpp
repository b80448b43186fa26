#pragma once

// Periodicity of quadratic irrationals: the minus continued fraction
// x = D_0 - 1/(D_1 - 1/(D_2 - ...)), and the characterisation of purely periodic points of
// T0 (x' < -1) and T1 (x' < 0) by the Galois conjugate x'.

#include "gaussrenyi/errors.hpp"
#include "gaussrenyi/maps.hpp"

#include <functional>
#include <vector>

namespace gr::quadirr {

using exact::BigInt;
using exact::QuadIrr;
using exact::Rational;
using maps::MapId;

inline constexpr std::size_t kDefaultBudget = 10000;

struct MinusCF {
  std::vector<BigInt> D;       // D_0, D_1, ...; D_i >= 2 for i >= 1
  std::size_t preperiod = 0;   // index of the first repeated iterate
  std::size_t period = 0;      // 0 when no repeat was found within the budget
  bool found = false;

  bool purely_periodic() const { return found && preperiod == 0; }
};

/// Exact recursion x_n = 1 / (floor(x_{n-1}) + 1 - x_{n-1}), D_n = floor(x_n) + 1, with
/// repeat detection on the canonical form of x_n. Not finding a repeat is reported through
/// `found`, not raised.
MinusCF minus_cf(const QuadIrr& x, std::size_t max_steps = kDefaultBudget);

/// Same, raising NoPeriodWithinBudget when no repeat is found.
MinusCF minus_cf_checked(const QuadIrr& x, std::size_t max_steps = kDefaultBudget);

/// Purely periodic minus continued fraction iff x > 1 and 0 < x' < 1.
bool katok_criterion(const QuadIrr& x);

struct OrbitCycle {
  std::size_t preperiod = 0;
  std::size_t period = 0;
  bool found = false;
};

/// Iterates the map exactly until an iterate repeats.
OrbitCycle orbit_cycle(MapId map, const QuadIrr& x, std::size_t budget = kDefaultBudget);

struct PeriodicityReport {
  bool periodic = false;            // Galois verdict
  bool iteration_periodic = false;  // orbit returned to x
  std::size_t period = 0;           // detected by iteration; 0 if not periodic
  std::size_t preperiod = 0;
  bool agree = false;
};

/// Both verdicts for T0 or T1 without raising on disagreement. Needs x in (0, 1).
PeriodicityReport check_periodicity(MapId map, const QuadIrr& x, std::size_t budget = kDefaultBudget);

/// Criterion x' < 0 checked against exact iteration. Throws DisagreementError.
PeriodicityReport is_T1_periodic(const QuadIrr& x, std::size_t budget = kDefaultBudget);
/// Criterion x' < -1 checked against exact iteration. Throws DisagreementError.
PeriodicityReport is_T0_periodic(const QuadIrr& x, std::size_t budget = kDefaultBudget);

/// Every canonical (p + q sqrt(d)) / r in (0, 1) with |p| <= max_p, 1 <= r <= max_r and
/// squarefree 2 <= d <= max_d, in increasing (d, r, p, q) order.
void for_each_family_member(int max_p, int max_r, int max_d, const std::function<void(const QuadIrr&)>& visit);

}  // namespace gr::quadirr
