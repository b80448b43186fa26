#pragma once

// Weighted empirical measures built from random cycles: histograms of the orbit measure,
// density estimates of the stationary measure, the stationarity residual, digit frequencies,
// large-deviation tail sums and partial pressure sums.

#include "gaussrenyi/cycles.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gr::measures {

using cycles::CycleSet;
using cycles::Digit;
using cycles::Mode;
using cycles::ParityWord;
using cycles::Truncation;

/// B equal-width bins [i/B, (i+1)/B) over [0, 1], the last one closed at 1.
class Histogram {
 public:
  explicit Histogram(std::size_t bins);

  std::size_t bins() const { return masses_.size(); }
  long double left(std::size_t i) const;
  long double right(std::size_t i) const;
  long double width() const { return 1.0L / static_cast<long double>(masses_.size()); }

  const std::vector<long double>& masses() const { return masses_; }
  std::vector<long double>& masses() { return masses_; }
  long double total() const;
  /// Rescales to total mass 1. Throws EmptySet when the total is zero.
  void normalize();

  /// Bin of a floating point x in [0, 1].
  std::size_t bin_of(long double x) const;

 private:
  std::vector<long double> masses_;
};

/// Bin of an exact point under the right-open rule.
std::size_t exact_bin(const exact::Point& x, std::size_t bins);

/// Bin masses of dx / (log 2 (1 + x)).
Histogram gauss_histogram(std::size_t bins);

/// L1 distance between two histograms with the same binning.
long double l1_distance(const Histogram& a, const Histogram& b);

/// Uniform probability on each cycle orbit, the cycles weighted by weight / z_partial.
/// Orbit points are computed exactly. Throws EmptySet.
Histogram cycle_empirical(const CycleSet& set, std::size_t bins);

struct DensityEstimate {
  Histogram histogram{2};
  std::vector<long double> density;  // mass / width
  double p = 0;
  std::size_t n = 0;
  Truncation truncation;
  long double z_partial = 0;
  long double tail_bound = 0;
  std::uint64_t cycles = 0;
};

/// Annealed mode for 0 < p < 1; p = 0 and p = 1 run the single-map cycles 0^n and 1^n.
Mode mode_for(double p, std::size_t n);

DensityEstimate annealed_density(double p, std::size_t n, const Truncation& trunc, std::size_t bins,
                                 unsigned workers = 1);
DensityEstimate quenched_density(const ParityWord& omega, const Truncation& trunc, std::size_t bins,
                                 unsigned workers = 1);
/// Same as quenched_density, over a Bernoulli(p) parity word drawn from `seed`.
DensityEstimate quenched_density(std::uint64_t seed, double p, std::size_t n, const Truncation& trunc,
                                 std::size_t bins, unsigned workers = 1);

/// splitmix64.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform();

 private:
  std::uint64_t state_;
};

/// omega_i = 1 iff the i-th uniform draw is < p.
ParityWord sample_omega(std::uint64_t seed, double p, std::size_t n);

/// L1 distance between the histogram and its image under (1-p) T0_* + p T1_*, the histogram
/// read as a piecewise-constant density and pushed through branches 1..branch_cap of each map.
long double transfer_residual(const Histogram& h, double p, Digit branch_cap);
inline long double transfer_residual(const DensityEstimate& est, double p, Digit branch_cap) {
  return transfer_residual(est.histogram, p, branch_cap);
}

struct FrequencyTable {
  /// freq[k] for k = 1 .. size()-1: weighted mean over cycles of #{i : C_i = k} / n.
  std::vector<long double> freq;
  long double z_partial = 0;
  long double tail_bound = 0;

  long double at(std::size_t k) const { return k < freq.size() ? freq[k] : 0.0L; }
};

/// Digit frequencies of the random continued fraction along every enumerated cycle.
FrequencyTable digit_frequencies(const Mode& mode, const Truncation& trunc, unsigned workers = 1);
long double digit_frequency(const Mode& mode, const Truncation& trunc, std::size_t k, unsigned workers = 1);

enum class Side { Ge, Le };

struct TailPoint {
  std::size_t n = 0;
  long double tail_sum = 0;  // S_n
  long double z = 0;         // Z_n
  long double tail_bound = 0;
  /// (1/n) log(S_n / Z_n); empty when S_n = 0.
  std::optional<long double> log_tail_ratio;
};

struct TailSumSeries {
  std::vector<TailPoint> points;
  /// OLS slope of log(S_n / Z_n) against n over nonempty points; empty with fewer than two.
  std::optional<long double> slope;
  bool empty_tail = false;  // some S_n was zero
  std::size_t k = 1;
  double alpha = 0;
  Side side = Side::Ge;
};

/// Weighted mass of cycles whose frequency of C_i = k lies on the `side` of alpha.
TailSumSeries ld_tail(double p, std::size_t k, double alpha, Side side, std::size_t n_min, std::size_t n_max,
                      const Truncation& trunc, unsigned workers = 1);

struct PressureResult {
  std::size_t n = 0;
  long double sum = 0;         // sum over words of Q sup |Psi'|
  long double value = 0;       // (1/n) log sum
  long double tail_bound = 0;  // bound on the omitted part of the sum
};

/// (1/n) log of sum over words of Q_p(omega) sup_[0,1] |Psi_w'|.
PressureResult pressure_partial(double p, std::size_t n, const Truncation& trunc, unsigned workers = 1);

}  // namespace gr::measures
