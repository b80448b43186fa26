#pragma once

// Random cycles of the Gauss-Renyi skew product: for a cylinder word w = a_1 ... a_n the
// composed inverse branch Psi_w = psi_{a_1} o ... o psi_{a_n} has exactly one fixed point in
// the closure of J(w), and that point is a fixed point of T_omega^n with omega_i = a_i mod 2.
// Its weight is |(T_omega^n)'(x)|^{-1} = |Psi_w'(x)| = 1 / (C x + D)^2.

#include "gaussrenyi/exact.hpp"
#include "gaussrenyi/maps.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

namespace gr::cycles {

using exact::Point;
using exact::Rational;
using maps::CylinderWord;
using maps::Digit;
using maps::ParityWord;

struct WeightedCycle {
  CylinderWord word;
  Point fixed_point;
  long double weight = 0;      // |(T^n)'x|^{-1}, times Q_p^n(omega) in annealed sets
  Rational cyl_len;            // |J(word)|
  long double distortion = 0;  // log-ratio of |Psi'| between the ends of J(word)
};

/// Exact construction: fixed-point quadratic solved over the integers, root selected by
/// exact comparison against the endpoints of J(w).
WeightedCycle fixed_point_of_word(const CylinderWord& w);

/// Cyclic left rotation by i (taken mod the length).
CylinderWord rotate_word(const CylinderWord& w, std::size_t i);

struct Quenched {
  ParityWord omega;
};
struct Annealed {
  std::size_t n = 0;
  double p = 0.5;
};
using Mode = std::variant<Quenched, Annealed>;

std::size_t word_length(const Mode& mode);

/// Truncation of the infinite alphabet: digits a <= cap, and subtrees whose mass
/// (|J(prefix)| quenched, Q_p(prefix)|J(prefix)| annealed) falls below prune are dropped.
struct Truncation {
  Digit cap = 200;
  double prune = 1e-10;
};

/// 2x2 integer matrix (a, b; c, d) in the fast enumeration path; entries stay below 2^62.
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;
};

/// One enumerated cycle as seen by a visitor. Spans point into enumerator state and are only
/// valid during the callback.
struct CycleView {
  std::span<const Digit> word;
  Mat2 psi;                    // composed inverse branch
  long double x = 0;           // fixed point
  long double weight = 0;      // |(T^n)'x|^{-1}
  long double q_factor = 1;    // Q_p^n(omega); 1 in quenched mode
  long double cyl_len = 0;     // |J(word)|

  long double annealed_weight() const { return q_factor * weight; }
  /// 2 log((C + D) / D).
  long double distortion() const;
  bool is_neutral() const { return psi.b == 0; }

  /// Orbit x, T x, ..., T^{n-1} x in floating point (no cancellation: all entries are >= 0).
  void orbit(std::span<long double> out) const;
  /// Exact T^i x.
  Point exact_orbit_point(std::size_t i) const;
  /// Exact fixed point.
  Point exact_fixed_point() const;
  WeightedCycle materialize() const;
};

struct EnumerationStats {
  long double z_partial = 0;       // sum of (Q-weighted) weights
  long double covered = 0;         // sum of (Q-weighted) |J(word)| over enumerated words
  long double distortion_max = 0;  // max over enumerated words
  std::uint64_t cycles = 0;
  std::uint64_t nodes = 0;

  void merge(const EnumerationStats& o);
};

struct EnumerationResult {
  EnumerationStats stats;
  /// Upper bound on the weight of every word not enumerated.
  long double tail_bound = 0;
  /// Analytic bound on the per-word distortion over all words of the mode (enumerated or not).
  long double distortion_ceiling = 0;
};

/// Called once per cycle with the index of the first-digit task that produced it. Tasks are
/// disjoint; each task runs on a single thread and visits its cycles in lexicographic order.
using CycleVisitor = std::function<void(std::size_t task, const CycleView&)>;

/// Number of first-digit tasks for the mode: the digits <= cap allowed in slot 1.
std::size_t task_count(const Mode& mode, const Truncation& trunc);

/// Streams every cycle of the truncated enumeration. Results do not depend on `workers`.
EnumerationResult for_each_cycle(const Mode& mode, const Truncation& trunc, unsigned workers,
                                 const CycleVisitor& visit);

struct CycleSet {
  std::vector<WeightedCycle> cycles;  // lexicographic by word
  long double z_partial = 0;
  long double tail_bound = 0;
  long double distortion_max = 0;
  Mode mode;
  Truncation truncation;
};

CycleSet enumerate_quenched(const ParityWord& omega, Digit cap, double prune, unsigned workers = 1);
CycleSet enumerate_annealed(std::size_t n, double p, Digit cap, double prune, unsigned workers = 1);

struct DistortionReport {
  long double max_distortion = 0;   // max per-cylinder distortion over enumerated words
  long double max_chain_bound = 0;  // max of 2 * sum_i |J(a_{i+1} ... a_n)| over the same words
  bool chain_dominates = true;      // per-word distortion <= per-word chain bound everywhere
};

/// Global distortion over the truncated enumeration of `mode` (no pruning).
DistortionReport distortion_bound_global(const Mode& mode, Digit cap);

/// Per-cylinder distortion of the composed branch of w.
long double cylinder_distortion(const CylinderWord& w);

/// Analytic ceiling on the per-cylinder distortion over all words of the mode.
long double distortion_ceiling(const Mode& mode);

}  // namespace gr::cycles
