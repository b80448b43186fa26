#include "gaussrenyi/exact/integer.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace gr::exact {

namespace {

constexpr std::uint32_t kTrialLimit = 1u << 16;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

using Factorization = std::map<BigInt, unsigned>;

BigInt pollard_brent(const BigInt& n, const BigInt& c) {
  if ((n & 1) == 0) return 2;
  auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
  BigInt y = 2, x, q = 1, g = 1, ys;
  std::uint64_t r = 1;
  constexpr std::uint64_t m = 64;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = (q * abs(BigInt(x - y))) % n;
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(abs(BigInt(x - ys)), n);
    } while (g == 1);
  }
  return g;
}

// Full factorization by Miller-Rabin and Pollard-Brent; meant for cofactors left after trial division.
void factor_large(const BigInt& n, Factorization& out) {
  if (n == 1) return;
  BigInt root;
  if (is_perfect_square(n, &root)) {
    Factorization sub;
    factor_large(root, sub);
    for (const auto& [p, e] : sub) out[p] += 2 * e;
    return;
  }
  if (boost::multiprecision::miller_rabin_test(n, 25)) {
    out[n] += 1;
    return;
  }
  BigInt d = n;
  for (BigInt c = 1; d == n; ++c) d = pollard_brent(n, c);
  factor_large(d, out);
  factor_large(n / d, out);
}

}  // namespace

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(abs(a), abs(b)); }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("floor_div by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of negative number");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const BigInt& n, BigInt* root) {
  if (n < 0) return false;
  BigInt s = isqrt(n);
  if (s * s != n) return false;
  if (root) *root = s;
  return true;
}

SquareSplit split_square(const BigInt& n) {
  if (n <= 0) throw std::domain_error("split_square requires a positive integer");
  BigInt root = 1, core = 1;
  BigInt m = n;
  // set once trial division reached p^3 > m: then m is 1, p, p^2 or p*q
  bool exhausted = false;

  auto absorb = [&](const BigInt& p, unsigned e) {
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e % 2) core *= p;
  };

  if (m <= std::numeric_limits<std::uint64_t>::max()) {
    auto v = static_cast<std::uint64_t>(m);
    for (std::uint32_t p : small_primes()) {
      const std::uint64_t pp = p;
      if (static_cast<unsigned __int128>(pp) * pp * pp > v) {
        exhausted = true;
        break;
      }
      if (v % pp) continue;
      unsigned e = 0;
      while (v % pp == 0) {
        v /= pp;
        ++e;
      }
      absorb(p, e);
    }
    m = v;
  } else {
    for (std::uint32_t p : small_primes()) {
      BigInt bp = p;
      if (bp * bp * bp > m) {
        exhausted = true;
        break;
      }
      unsigned e = 0;
      BigInt q, r;
      for (;;) {
        boost::multiprecision::divide_qr(m, bp, q, r);
        if (r != 0) break;
        m = q;
        ++e;
      }
      if (e) absorb(bp, e);
    }
  }
  if (m == 1) return {root, core};

  BigInt s;
  if (exhausted) {
    if (is_perfect_square(m, &s))
      root *= s;
    else
      core *= m;
    return {root, core};
  }
  if (is_perfect_square(m, &s)) {
    Factorization f;
    factor_large(s, f);
    for (const auto& [p, e] : f) absorb(p, 2 * e);
    return {root, core};
  }
  Factorization f;
  factor_large(m, f);
  for (const auto& [p, e] : f) absorb(p, e);
  return {root, core};
}

}  // namespace gr::exact
