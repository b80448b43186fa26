#include "gaussrenyi/expansion.hpp"

#include "gaussrenyi/cycles.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace gr::expansion {

namespace {

bool at_boundary(Bit bit, const Point& x) {
  const auto* r = std::get_if<Rational>(&x);
  if (!r) return false;
  return bit == 0 ? *r == 0 : *r == 1;
}

/// floor(1/x) or floor(1/(1-x)).
BigInt branch_index(Bit bit, const Point& x) {
  static const exact::Mobius gauss(0, 1, 1, 0);
  static const exact::Mobius renyi(0, 1, -1, 1);
  const Point y = (bit == 0 ? gauss : renyi).apply(x);
  return std::visit([](const auto& v) { return BigInt(v.floor()); }, y);
}

ParityWord prefix(const ParityWord& omega, std::size_t len) {
  return ParityWord(std::vector<Bit>(omega.bits().begin(), omega.bits().begin() + static_cast<std::ptrdiff_t>(len)));
}

Digit to_digit(const BigInt& v) {
  if (v < 1 || v > BigInt(std::numeric_limits<Digit>::max())) throw std::overflow_error("digit out of range");
  return static_cast<Digit>(v);
}

}  // namespace

HitBoundary::HitBoundary(std::size_t index, Expansion partial)
    : Error("orbit reached the excluded set at step " + std::to_string(index)),
      index_(index),
      partial_(std::move(partial)) {}

Expansion expand_until_boundary(const ParityWord& omega, const Point& x, std::size_t steps) {
  if (omega.size() < steps + 1) throw std::invalid_argument("expand needs omega of length steps + 1");
  if (exact::compare(x, Point(Rational(0))) < 0 || exact::compare(x, Point(Rational(1))) > 0)
    throw std::domain_error("expand needs x in [0, 1]");
  Expansion out;
  out.residual = x;
  for (std::size_t i = 0; i < steps; ++i) {
    const Bit bit = omega[i];
    if (at_boundary(bit, out.residual)) {
      out.terminated = true;
      break;
    }
    out.digits.C.push_back(branch_index(bit, out.residual) + omega[i + 1]);
    out.residual = maps::apply_map(bit ? maps::MapId::Renyi : maps::MapId::Gauss, out.residual);
    ++out.steps;
  }
  out.digits.omega = prefix(omega, out.steps + 1);
  return out;
}

Expansion expand(const ParityWord& omega, const Point& x, std::size_t steps) {
  Expansion e = expand_until_boundary(omega, x, steps);
  if (e.terminated) {
    const std::size_t index = e.steps;
    throw HitBoundary(index, std::move(e));
  }
  return e;
}

void validate(const RandomCFDigits& digits) {
  const std::size_t n = digits.C.size();
  if (n == 0) throw InvalidDigits("no digits");
  if (digits.omega.size() != n + 1)
    throw InvalidDigits("omega must have one more bit than there are digits");
  for (std::size_t i = 0; i < n; ++i)
    if (digits.C[i] < 1 + digits.omega[i + 1])
      throw InvalidDigits("digit C_" + std::to_string(i + 1) + " = " + digits.C[i].str() +
                          " violates C_i >= 1 + omega_{i+1}");
}

Rational reconstruct(const RandomCFDigits& digits) {
  validate(digits);
  const std::size_t n = digits.C.size();
  Rational t(digits.C[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    const Rational tail = Rational(1) / t;
    t = digits.omega[i + 1] ? Rational(digits.C[i]) - tail : Rational(digits.C[i]) + tail;
  }
  const Rational head = Rational(1) / t;
  return digits.omega[0] ? Rational(1) - head : head;
}

CylinderWord word_from_cf(const RandomCFDigits& digits) {
  validate(digits);
  std::vector<Digit> a(digits.C.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = to_digit(2 * digits.C[i] - digits.omega[i] - 2 * digits.omega[i + 1]);
  return CylinderWord(std::move(a));
}

RandomCFDigits cf_from_word(const CylinderWord& w, const ParityWord& omega) {
  if (omega.size() != w.size() + 1) throw ParityMismatch("omega must have length n + 1");
  RandomCFDigits out;
  out.omega = omega;
  out.C.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (maps::parity_of(w[i]) != omega[i])
      throw ParityMismatch("digit " + std::to_string(w[i]) + " does not match omega_" + std::to_string(i + 1));
    out.C.push_back(BigInt((w[i] + omega[i]) / 2) + omega[i + 1]);
  }
  return out;
}

RandomCFDigits cf_from_word(const CylinderWord& w, std::optional<Bit> next) {
  if (w.empty()) throw InvalidDigits("empty word");
  std::vector<Bit> bits = w.parity().bits();
  bits.push_back(next.value_or(bits.front()));
  return cf_from_word(w, ParityWord(std::move(bits)));
}

std::pair<ParityWord, Point> decode_pi(const CylinderWord& w) {
  return {w.parity(), cycles::fixed_point_of_word(w).fixed_point};
}

InducedParse induce(const CylinderWord& w) {
  InducedParse out;
  if (w.empty()) return out;
  if (w[0] == 1) throw StartsInDeletedSet("word starts with digit 1");
  std::size_t start = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] >= 2) {
      out.blocks.push_back(InducedSymbol{w[start], i - start - 1});
      start = i;
    }
  }
  out.remainder = CylinderWord(std::vector<Digit>(w.digits().begin() + static_cast<std::ptrdiff_t>(start),
                                                  w.digits().end()));
  return out;
}

CylinderWord flatten(const InducedParse& parse) {
  std::vector<Digit> out;
  for (const auto& b : parse.blocks) {
    if (b.a < 2) throw std::invalid_argument("induced block must start with a digit >= 2");
    out.push_back(b.a);
    out.insert(out.end(), b.run, 1);
  }
  out.insert(out.end(), parse.remainder.digits().begin(), parse.remainder.digits().end());
  return CylinderWord(std::move(out));
}

}  // namespace gr::expansion
