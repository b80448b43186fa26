#include "gaussrenyi/cycles.hpp"

#include "gaussrenyi/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace gr::cycles {

namespace {

using exact::BigInt;
using exact::Mobius;
using Float = boost::multiprecision::cpp_bin_float_50;

constexpr __int128 kEntryLimit = __int128{1} << 62;

[[noreturn]] void entry_overflow() {
  throw std::overflow_error(
      "cylinder matrix entries exceed 62 bits; lower the digit cap or raise the prune threshold");
}

std::int64_t checked(__int128 v) {
  if (v >= kEntryLimit) entry_overflow();
  return static_cast<std::int64_t>(v);
}

/// prefix * psi_a
Mat2 right_mul(const Mat2& p, Digit a) {
  if (a % 2 == 0) {
    const __int128 m = a / 2;
    return {p.b, checked(p.a + m * p.b), p.d, checked(p.c + m * p.d)};
  }
  const __int128 j = (a + 1) / 2;
  return {checked(__int128{p.a} + p.b), checked(p.a * (j - 1) + p.b * j), checked(__int128{p.c} + p.d),
          checked(p.c * (j - 1) + p.d * j)};
}

/// psi_a * suffix. Suffix products of an enumerated word are entrywise bounded by the full
/// product, so no overflow check is needed.
Mat2 left_mul(Digit a, const Mat2& s) {
  if (a % 2 == 0) {
    const auto m = static_cast<std::int64_t>(a / 2);
    return {s.c, s.d, s.a + m * s.c, s.b + m * s.d};
  }
  const auto j = static_cast<std::int64_t>((a + 1) / 2);
  return {s.a + (j - 1) * s.c, s.b + (j - 1) * s.d, s.a + j * s.c, s.b + j * s.d};
}

/// Nonnegative root of c x^2 + (d - a) x - b = 0; the other root is <= 0 because b, c >= 0.
long double positive_root(const Mat2& m) {
  const auto dma = static_cast<long double>(m.d - m.a);
  const long double s =
      std::sqrt(dma * dma + 4.0L * static_cast<long double>(m.b) * static_cast<long double>(m.c));
  if (m.a >= m.d) return (s - dma) / (2.0L * static_cast<long double>(m.c));
  return 2.0L * static_cast<long double>(m.b) / (dma + s);
}

long double cylinder_length(const Mat2& m) {
  return 1.0L / (static_cast<long double>(m.d) * static_cast<long double>(m.c + m.d));
}

Mobius to_mobius(const Mat2& m) { return Mobius(m.a, m.b, m.c, m.d); }

Point positive_root_exact(const Mobius& m) {
  const BigInt disc = (m.d() - m.a()) * (m.d() - m.a()) + 4 * m.b() * m.c();
  return exact::make_point(m.a() - m.d(), 1, 2 * m.c(), disc);
}

struct ModeInfo {
  std::size_t n = 0;
  std::vector<maps::Bit> omega;  // empty in annealed mode
  long double weight_of_bit[2] = {1, 1};
};

ModeInfo describe(const Mode& mode) {
  ModeInfo info;
  if (const auto* q = std::get_if<Quenched>(&mode)) {
    if (q->omega.empty()) throw std::invalid_argument("quenched enumeration needs a nonempty omega");
    info.n = q->omega.size();
    info.omega = q->omega.bits();
  } else {
    const auto& a = std::get<Annealed>(mode);
    if (a.n == 0) throw std::invalid_argument("annealed enumeration needs n >= 1");
    if (!(a.p > 0.0 && a.p < 1.0)) throw std::invalid_argument("annealed enumeration needs 0 < p < 1");
    info.n = a.n;
    info.weight_of_bit[0] = 1.0L - static_cast<long double>(a.p);
    info.weight_of_bit[1] = static_cast<long double>(a.p);
  }
  return info;
}

std::vector<Digit> first_digits(const ModeInfo& info, Digit cap) {
  std::vector<Digit> out;
  for (Digit a = 1; a <= cap; ++a)
    if (info.omega.empty() || a % 2 == info.omega[0]) out.push_back(a);
  return out;
}

class Walker {
 public:
  Walker(const ModeInfo& info, const Truncation& trunc, std::size_t task, const CycleVisitor& visit)
      : info_(info), trunc_(trunc), task_(task), visit_(visit), word_(info.n) {}

  void run(Digit first) {
    const maps::Bit bit = static_cast<maps::Bit>(first % 2);
    const long double q = info_.weight_of_bit[bit];
    const Mat2 child = right_mul(Mat2{}, first);
    if (pruned(q, child)) return;
    word_[0] = first;
    step(1, child, q);
    if (stats_.cycles > 0) stats_.distortion_max = 2.0L * std::log1p(ratio_max_);
  }

  const EnumerationStats& stats() const { return stats_; }

 private:
  // Q |J| < prune, with |J| = 1 / (D (C + D))
  bool pruned(long double q, const Mat2& m) const {
    return trunc_.prune > 0 && static_cast<double>(q) < trunc_.prune * static_cast<double>(m.d) *
                                                             static_cast<double>(m.c + m.d);
  }

  void step(std::size_t depth, const Mat2& prefix, long double q) {
    ++stats_.nodes;
    if (depth == info_.n) {
      leaf(prefix, q);
      return;
    }
    // |J(prefix a)| <= sup |Psi_prefix'| |J(a)| = |J(a)| / D^2 bounds the mass of digit a and of
    // every larger digit of the same parity
    const double d2 = static_cast<double>(prefix.d) * static_cast<double>(prefix.d);
    bool done[2] = {false, false};
    if (!info_.omega.empty()) done[1 - info_.omega[depth]] = true;
    for (Digit a = 1; a <= trunc_.cap; ++a) {
      const maps::Bit bit = static_cast<maps::Bit>(a % 2);
      if (done[bit]) {
        if (done[1 - bit]) break;
        continue;
      }
      const long double qa = q * info_.weight_of_bit[bit];
      const auto k = static_cast<double>(bit ? (a + 1) / 2 : a / 2);
      if (trunc_.prune > 0 && static_cast<double>(qa) < trunc_.prune * d2 * k * (k + 1)) {
        done[bit] = true;
        continue;
      }
      const Mat2 child = right_mul(prefix, a);
      if (pruned(qa, child)) continue;
      word_[depth] = a;
      step(depth + 1, child, qa);
    }
  }

  void leaf(const Mat2& m, long double q) {
    CycleView v;
    v.word = std::span<const Digit>(word_.data(), word_.size());
    v.psi = m;
    v.x = positive_root(m);
    const long double denom = static_cast<long double>(m.c) * v.x + static_cast<long double>(m.d);
    v.weight = 1.0L / (denom * denom);
    v.q_factor = q;
    v.cyl_len = cylinder_length(m);
    stats_.z_partial += q * v.weight;
    stats_.covered += q * v.cyl_len;
    ratio_max_ = std::max(ratio_max_, static_cast<long double>(m.c) / static_cast<long double>(m.d));
    ++stats_.cycles;
    visit_(task_, v);
  }

  const ModeInfo& info_;
  Truncation trunc_;
  std::size_t task_;
  const CycleVisitor& visit_;
  std::vector<Digit> word_;
  EnumerationStats stats_;
  long double ratio_max_ = 0;
};

}  // namespace

void EnumerationStats::merge(const EnumerationStats& o) {
  z_partial += o.z_partial;
  covered += o.covered;
  distortion_max = std::max(distortion_max, o.distortion_max);
  cycles += o.cycles;
  nodes += o.nodes;
}

void CycleView::orbit(std::span<long double> out) const {
  const std::size_t n = word.size();
  if (out.size() < n) throw std::invalid_argument("orbit buffer too small");
  // backwards through the inverse branches: x_{i-1} = psi_{a_i}(x_i), x_n = x_0
  out[0] = x;
  long double y = x;
  for (std::size_t i = n - 1; i >= 1; --i) {
    const Digit a = word[i];
    if (a % 2 == 0)
      y = 1.0L / (y + static_cast<long double>(a / 2));
    else
      y = (y + static_cast<long double>((a - 1) / 2)) / (y + static_cast<long double>((a + 1) / 2));
    out[i] = y;
  }
}

Point CycleView::exact_orbit_point(std::size_t i) const {
  const CylinderWord rotated = rotate_word(CylinderWord(std::vector<Digit>(word.begin(), word.end())), i);
  return positive_root_exact(maps::word_mobius(rotated));
}

long double CycleView::distortion() const {
  return 2.0L * std::log1p(static_cast<long double>(psi.c) / static_cast<long double>(psi.d));
}

Point CycleView::exact_fixed_point() const { return positive_root_exact(to_mobius(psi)); }

WeightedCycle CycleView::materialize() const {
  return WeightedCycle{CylinderWord(std::vector<Digit>(word.begin(), word.end())), exact_fixed_point(),
                       q_factor * weight,
                       Rational(BigInt(1), BigInt(psi.d) * (BigInt(psi.c) + psi.d)), distortion()};
}

WeightedCycle fixed_point_of_word(const CylinderWord& w) {
  if (w.empty()) throw std::invalid_argument("fixed_point_of_word needs a nonempty word");
  const Mobius psi = maps::word_mobius(w);
  const maps::RatInterval j = maps::cylinder_interval(w);
  const std::vector<Point> roots = exact::mobius_fixed_points(psi);
  std::vector<Point> inside;
  for (const Point& r : roots)
    if (j.closure_contains(r)) inside.push_back(r);
  if (inside.size() != 1)
    throw std::logic_error("word " + w.str() + " has " + std::to_string(inside.size()) +
                           " fixed points in the closure of its cylinder");
  const Float x = std::visit(
      [](const auto& v) -> Float {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>)
          return Float(v.num()) / Float(v.den());
        else
          return (Float(v.p()) + Float(v.q()) * boost::multiprecision::sqrt(Float(v.d()))) / Float(v.r());
      },
      inside.front());
  const Float denom = Float(psi.c()) * x + Float(psi.d());
  const Float weight = 1 / (denom * denom);
  const Float dist = 2 * boost::multiprecision::log(Float(psi.c() + psi.d()) / Float(psi.d()));
  return WeightedCycle{w, inside.front(), static_cast<long double>(weight), j.length(),
                       static_cast<long double>(dist)};
}

CylinderWord rotate_word(const CylinderWord& w, std::size_t i) {
  if (w.empty()) return w;
  std::vector<Digit> d = w.digits();
  std::rotate(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(i % d.size()), d.end());
  return CylinderWord(std::move(d));
}

std::size_t word_length(const Mode& mode) {
  if (const auto* q = std::get_if<Quenched>(&mode)) return q->omega.size();
  return std::get<Annealed>(mode).n;
}

std::size_t task_count(const Mode& mode, const Truncation& trunc) {
  return first_digits(describe(mode), trunc.cap).size();
}

long double distortion_ceiling(const Mode& mode) {
  // With r = C/D for the composed branch: a Gauss step leaves r <= 1 and a Renyi step gives
  // r' <= 1 + r, so r is at most 1 + (Renyi steps after the last Gauss step).
  const std::size_t n = word_length(mode);
  std::size_t r_max = n;
  if (const auto* q = std::get_if<Quenched>(&mode)) {
    const auto& bits = q->omega.bits();
    for (std::size_t k = n; k-- > 0;) {
      if (bits[k] == 0) {
        r_max = 1 + (n - 1 - k);
        break;
      }
    }
  }
  return 2.0L * std::log(1.0L + static_cast<long double>(r_max));
}

EnumerationResult for_each_cycle(const Mode& mode, const Truncation& trunc, unsigned workers,
                                 const CycleVisitor& visit) {
  if (trunc.cap < 2) throw CapTooSmall("digit cap must be at least 2, got " + std::to_string(trunc.cap));
  if (!(trunc.prune >= 0)) throw std::invalid_argument("prune threshold must be >= 0");
  const ModeInfo info = describe(mode);
  const std::vector<Digit> firsts = first_digits(info, trunc.cap);
  std::vector<EnumerationStats> per_task(firsts.size());

  auto run_task = [&](std::size_t t) {
    Walker w(info, trunc, t, visit);
    w.run(firsts[t]);
    per_task[t] = w.stats();
  };

  if (workers <= 1 || firsts.size() <= 1) {
    for (std::size_t t = 0; t < firsts.size(); ++t) run_task(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(workers, static_cast<unsigned>(firsts.size()));
    for (unsigned i = 0; i < count; ++i) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < firsts.size(); t = next++) {
          try {
            run_task(t);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  EnumerationResult result;
  for (const auto& s : per_task) result.stats.merge(s);
  result.distortion_ceiling = distortion_ceiling(mode);
  const long double missing = std::max(0.0L, 1.0L - result.stats.covered);
  result.tail_bound = std::exp(result.distortion_ceiling) * missing;
  return result;
}

namespace {

CycleSet collect(const Mode& mode, const Truncation& trunc, unsigned workers) {
  std::vector<std::vector<WeightedCycle>> per_task(task_count(mode, trunc));
  const EnumerationResult r = for_each_cycle(mode, trunc, workers, [&](std::size_t t, const CycleView& v) {
    per_task[t].push_back(v.materialize());
  });
  CycleSet set;
  set.mode = mode;
  set.truncation = trunc;
  for (auto& v : per_task)
    for (auto& c : v) set.cycles.push_back(std::move(c));
  set.z_partial = r.stats.z_partial;
  set.tail_bound = r.tail_bound;
  set.distortion_max = r.stats.distortion_max;
  return set;
}

}  // namespace

CycleSet enumerate_quenched(const ParityWord& omega, Digit cap, double prune, unsigned workers) {
  return collect(Quenched{omega}, Truncation{cap, prune}, workers);
}

CycleSet enumerate_annealed(std::size_t n, double p, Digit cap, double prune, unsigned workers) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("annealed enumeration needs 0 < p < 1");
  return collect(Annealed{n, p}, Truncation{cap, prune}, workers);
}

long double cylinder_distortion(const CylinderWord& w) {
  const Mobius m = maps::word_mobius(w);
  const Float v = 2 * boost::multiprecision::log(Float(m.c() + m.d()) / Float(m.d()));
  return static_cast<long double>(v);
}

DistortionReport distortion_bound_global(const Mode& mode, Digit cap) {
  DistortionReport report;
  for_each_cycle(mode, Truncation{cap, 0.0}, 1, [&](std::size_t, const CycleView& v) {
    const std::size_t n = v.word.size();
    long double chain = 1.0L;  // |T^n x - T^n y| <= 1
    Mat2 suffix;
    for (std::size_t i = n - 1; i >= 1; --i) {
      suffix = left_mul(v.word[i], suffix);
      chain += cylinder_length(suffix);
    }
    chain *= 2.0L;
    const long double dist = v.distortion();
    report.max_distortion = std::max(report.max_distortion, dist);
    report.max_chain_bound = std::max(report.max_chain_bound, chain);
    if (dist > chain * (1.0L + 1e-15L)) report.chain_dominates = false;
  });
  return report;
}

}  // namespace gr::cycles
