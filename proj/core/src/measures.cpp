#include "gaussrenyi/measures.hpp"

#include "gaussrenyi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gr::measures {

namespace {

constexpr double kEdgeSlack = 1e-12;

void check_bins(std::size_t bins) {
  if (bins < 2) throw std::invalid_argument("histogram needs at least 2 bins");
}

/// C_i = (a_i + omega_i)/2 + omega_{i+1}, omega cyclic.
std::size_t cf_digit(std::span<const Digit> word, std::size_t i) {
  const Digit a = word[i];
  const Digit next = word[(i + 1) % word.size()];
  return static_cast<std::size_t>((a + a % 2) / 2 + next % 2);
}

std::size_t count_digit(std::span<const Digit> word, std::size_t k) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < word.size(); ++i) c += cf_digit(word, i) == k;
  return c;
}

/// Bins every orbit point of a cycle; falls back to exact arithmetic next to bin edges.
class OrbitBinner {
 public:
  explicit OrbitBinner(std::size_t bins) : bins_(bins) {}

  template <class Add>
  void bin_orbit(const cycles::CycleView& v, Add&& add) {
    const std::size_t n = v.word.size();
    orbit_.resize(n);
    v.orbit(orbit_);
    const auto b = static_cast<double>(bins_);
    for (std::size_t i = 0; i < n; ++i) {
      // double keeps ~1e-16 relative accuracy, far inside the slack
      const double t = static_cast<double>(orbit_[i]) * b;
      const auto fl = static_cast<std::size_t>(t);
      const double frac = t - static_cast<double>(fl);
      std::size_t bin;
      if (frac < kEdgeSlack || 1.0 - frac < kEdgeSlack)
        bin = exact_bin(i == 0 ? v.exact_fixed_point() : v.exact_orbit_point(i), bins_);
      else
        bin = std::min(fl, bins_ - 1);
      add(bin);
    }
  }

 private:
  std::size_t bins_;
  std::vector<long double> orbit_;
};

DensityEstimate stream_density(const Mode& mode, double p, const Truncation& trunc, std::size_t bins,
                               unsigned workers) {
  check_bins(bins);
  const std::size_t tasks = cycles::task_count(mode, trunc);
  std::vector<std::vector<long double>> per_task(tasks, std::vector<long double>(bins, 0.0L));
  std::vector<OrbitBinner> binners(tasks, OrbitBinner(bins));
  const auto r = cycles::for_each_cycle(mode, trunc, workers, [&](std::size_t t, const cycles::CycleView& v) {
    const long double share = v.annealed_weight() / static_cast<long double>(v.word.size());
    auto& masses = per_task[t];
    binners[t].bin_orbit(v, [&](std::size_t bin) { masses[bin] += share; });
  });
  DensityEstimate est;
  est.histogram = Histogram(bins);
  for (const auto& m : per_task)
    for (std::size_t i = 0; i < bins; ++i) est.histogram.masses()[i] += m[i];
  est.histogram.normalize();
  est.density.resize(bins);
  for (std::size_t i = 0; i < bins; ++i) est.density[i] = est.histogram.masses()[i] / est.histogram.width();
  est.p = p;
  est.n = cycles::word_length(mode);
  est.truncation = trunc;
  est.z_partial = r.stats.z_partial;
  est.tail_bound = r.tail_bound;
  est.cycles = r.stats.cycles;
  return est;
}

}  // namespace

Histogram::Histogram(std::size_t bins) : masses_(bins, 0.0L) { check_bins(bins); }

long double Histogram::left(std::size_t i) const {
  return static_cast<long double>(i) / static_cast<long double>(masses_.size());
}

long double Histogram::right(std::size_t i) const {
  return static_cast<long double>(i + 1) / static_cast<long double>(masses_.size());
}

long double Histogram::total() const {
  long double s = 0;
  for (long double m : masses_) s += m;
  return s;
}

void Histogram::normalize() {
  const long double s = total();
  if (!(s > 0)) throw EmptySet("histogram has no mass");
  for (long double& m : masses_) m /= s;
}

std::size_t Histogram::bin_of(long double x) const {
  if (!(x >= 0 && x <= 1)) throw std::domain_error("histogram point outside [0, 1]");
  const auto i = static_cast<std::size_t>(std::floor(x * static_cast<long double>(masses_.size())));
  return std::min(i, masses_.size() - 1);
}

std::size_t exact_bin(const exact::Point& x, std::size_t bins) {
  const exact::BigInt b(bins);
  const exact::BigInt fl = std::visit(
      [&](const auto& v) -> exact::BigInt {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, exact::Rational>)
          return exact::floor_div(v.num() * b, v.den());
        else
          return exact::QuadIrr(v.p() * b, v.q() * b, v.r(), v.d()).floor();
      },
      x);
  if (fl < 0 || fl > b) throw std::domain_error("histogram point outside [0, 1]");
  return std::min(static_cast<std::size_t>(fl), bins - 1);
}

Histogram gauss_histogram(std::size_t bins) {
  Histogram h(bins);
  const long double ln2 = std::numbers::ln2_v<long double>;
  for (std::size_t i = 0; i < bins; ++i)
    h.masses()[i] = std::log((1.0L + h.right(i)) / (1.0L + h.left(i))) / ln2;
  return h;
}

long double l1_distance(const Histogram& a, const Histogram& b) {
  if (a.bins() != b.bins()) throw std::invalid_argument("histograms have different binnings");
  long double d = 0;
  for (std::size_t i = 0; i < a.bins(); ++i) d += std::fabs(a.masses()[i] - b.masses()[i]);
  return d;
}

Histogram cycle_empirical(const CycleSet& set, std::size_t bins) {
  if (set.cycles.empty()) throw EmptySet("cycle set is empty");
  Histogram h(bins);
  for (const auto& c : set.cycles) {
    const std::size_t n = c.word.size();
    const long double share = c.weight / static_cast<long double>(n);
    h.masses()[exact_bin(c.fixed_point, bins)] += share;
    for (std::size_t i = 1; i < n; ++i) {
      const auto point = cycles::fixed_point_of_word(cycles::rotate_word(c.word, i)).fixed_point;
      h.masses()[exact_bin(point, bins)] += share;
    }
  }
  h.normalize();
  return h;
}

Mode mode_for(double p, std::size_t n) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (p == 0.0) return cycles::Quenched{ParityWord(std::vector<maps::Bit>(n, 0))};
  if (p == 1.0) return cycles::Quenched{ParityWord(std::vector<maps::Bit>(n, 1))};
  return cycles::Annealed{n, p};
}

DensityEstimate annealed_density(double p, std::size_t n, const Truncation& trunc, std::size_t bins,
                                 unsigned workers) {
  return stream_density(mode_for(p, n), p, trunc, bins, workers);
}

DensityEstimate quenched_density(const ParityWord& omega, const Truncation& trunc, std::size_t bins,
                                 unsigned workers) {
  const double p = omega.empty() ? 0.0
                                 : static_cast<double>(omega.count_ones()) / static_cast<double>(omega.size());
  return stream_density(cycles::Quenched{omega}, p, trunc, bins, workers);
}

DensityEstimate quenched_density(std::uint64_t seed, double p, std::size_t n, const Truncation& trunc,
                                 std::size_t bins, unsigned workers) {
  DensityEstimate est = quenched_density(sample_omega(seed, p, n), trunc, bins, workers);
  est.p = p;
  return est;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

ParityWord sample_omega(std::uint64_t seed, double p, std::size_t n) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<maps::Bit> bits(n);
  for (auto& b : bits) b = rng.uniform() < p ? 1 : 0;
  return ParityWord(std::move(bits));
}

long double transfer_residual(const Histogram& h, double p, Digit branch_cap) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  const std::size_t bins = h.bins();
  const auto b = static_cast<long double>(bins);
  std::vector<long double> cum(bins + 1, 0.0L);
  for (std::size_t i = 0; i < bins; ++i) cum[i + 1] = cum[i] + h.masses()[i];
  // distribution function of the piecewise-constant density
  auto F = [&](long double y) {
    if (y <= 0) return 0.0L;
    if (y >= 1) return cum[bins];
    const long double t = y * b;
    const std::size_t i = std::min(static_cast<std::size_t>(t), bins - 1);
    return cum[i] + (t - static_cast<long double>(i)) * h.masses()[i];
  };
  const long double q0 = 1.0L - static_cast<long double>(p);
  const long double q1 = static_cast<long double>(p);
  long double residual = 0;
  for (std::size_t i = 0; i < bins; ++i) {
    const long double l = h.left(i), r = h.right(i);
    long double gauss = 0, renyi = 0;
    for (Digit k = 1; k <= branch_cap; ++k) {
      const auto kk = static_cast<long double>(k);
      if (q0 > 0) gauss += F(1.0L / (kk + l)) - F(1.0L / (kk + r));
      if (q1 > 0) renyi += F((kk - 1 + r) / (kk + r)) - F((kk - 1 + l) / (kk + l));
    }
    residual += std::fabs(q0 * gauss + q1 * renyi - h.masses()[i]);
  }
  return residual;
}

FrequencyTable digit_frequencies(const Mode& mode, const Truncation& trunc, unsigned workers) {
  const std::size_t tasks = cycles::task_count(mode, trunc);
  // C_i <= cap/2 + 2
  const std::size_t size = static_cast<std::size_t>(trunc.cap / 2) + 3;
  std::vector<std::vector<long double>> per_task(tasks, std::vector<long double>(size, 0.0L));
  const auto r = cycles::for_each_cycle(mode, trunc, workers, [&](std::size_t t, const cycles::CycleView& v) {
    const long double share = v.annealed_weight() / static_cast<long double>(v.word.size());
    auto& table = per_task[t];
    for (std::size_t i = 0; i < v.word.size(); ++i) table[cf_digit(v.word, i)] += share;
  });
  FrequencyTable out;
  out.freq.assign(size, 0.0L);
  for (const auto& table : per_task)
    for (std::size_t k = 0; k < size; ++k) out.freq[k] += table[k];
  if (!(r.stats.z_partial > 0)) throw EmptySet("no cycles enumerated");
  for (auto& f : out.freq) f /= r.stats.z_partial;
  out.z_partial = r.stats.z_partial;
  out.tail_bound = r.tail_bound;
  return out;
}

long double digit_frequency(const Mode& mode, const Truncation& trunc, std::size_t k, unsigned workers) {
  if (k < 1) throw std::invalid_argument("digit k must be at least 1");
  return digit_frequencies(mode, trunc, workers).at(k);
}

TailSumSeries ld_tail(double p, std::size_t k, double alpha, Side side, std::size_t n_min, std::size_t n_max,
                      const Truncation& trunc, unsigned workers) {
  if (k < 1) throw std::invalid_argument("digit k must be at least 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("need 1 <= n_min <= n_max");
  TailSumSeries series;
  series.k = k;
  series.alpha = alpha;
  series.side = side;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    const Mode mode = mode_for(p, n);
    const std::size_t tasks = cycles::task_count(mode, trunc);
    std::vector<long double> s(tasks, 0.0L), z(tasks, 0.0L);
    const long double threshold = static_cast<long double>(alpha) * static_cast<long double>(n);
    const auto r = cycles::for_each_cycle(mode, trunc, workers, [&](std::size_t t, const cycles::CycleView& v) {
      const long double w = v.annealed_weight();
      const auto c = static_cast<long double>(count_digit(v.word, k));
      const bool in = side == Side::Ge ? c >= threshold - 1e-9L : c <= threshold + 1e-9L;
      z[t] += w;
      if (in) s[t] += w;
    });
    TailPoint pt;
    pt.n = n;
    for (std::size_t t = 0; t < tasks; ++t) {
      pt.tail_sum += s[t];
      pt.z += z[t];
    }
    pt.tail_bound = r.tail_bound;
    if (pt.tail_sum > 0)
      pt.log_tail_ratio = std::log(pt.tail_sum / pt.z) / static_cast<long double>(n);
    else
      series.empty_tail = true;
    series.points.push_back(pt);
  }
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (const auto& pt : series.points) {
    if (!pt.log_tail_ratio) continue;
    const auto x = static_cast<long double>(pt.n);
    const long double y = *pt.log_tail_ratio * x;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m >= 2) {
    const auto mm = static_cast<long double>(m);
    series.slope = (mm * sxy - sx * sy) / (mm * sxx - sx * sx);
  }
  return series;
}

PressureResult pressure_partial(double p, std::size_t n, const Truncation& trunc, unsigned workers) {
  const Mode mode = mode_for(p, n);
  std::vector<long double> per_task(cycles::task_count(mode, trunc), 0.0L);
  const auto r = cycles::for_each_cycle(mode, trunc, workers, [&](std::size_t t, const cycles::CycleView& v) {
    // |Psi'(y)| = 1/(C y + D)^2 is largest at y = 0
    const auto d = static_cast<long double>(v.psi.d);
    per_task[t] += v.q_factor / (d * d);
  });
  PressureResult out;
  out.n = n;
  for (long double s : per_task) out.sum += s;
  if (!(out.sum > 0)) throw EmptySet("no cycles enumerated");
  out.value = std::log(out.sum) / static_cast<long double>(n);
  // sup |Psi'| <= e^{D} |J| on every omitted word
  out.tail_bound = r.tail_bound;
  return out;
}

}  // namespace gr::measures
