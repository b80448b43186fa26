#include "gaussrenyi/maps.hpp"

#include "gaussrenyi/errors.hpp"

#include <limits>
#include <stdexcept>

namespace gr::maps {

namespace {

Digit to_digit(const BigInt& v) {
  if (v < 1 || v > BigInt(std::numeric_limits<Digit>::max() / 2 - 1))
    throw std::overflow_error("branch index " + v.str() + " out of digit range");
  return static_cast<Digit>(v);
}

void check_unit(const Point& x) {
  if (exact::compare(x, Point(Rational(0))) < 0 || exact::compare(x, Point(Rational(1))) > 0)
    throw std::domain_error("point " + exact::to_string(x) + " outside [0, 1]");
}

void check_defined(MapId id, const Point& x) {
  check_unit(x);
  if (id == MapId::Gauss && std::holds_alternative<Rational>(x) && std::get<Rational>(x) == 0)
    throw UndefinedAtPoint("Gauss map undefined at 0");
  if (id == MapId::Renyi && std::holds_alternative<Rational>(x) && std::get<Rational>(x) == 1)
    throw UndefinedAtPoint("Renyi map undefined at 1");
}

// 1/x for Gauss, 1/(1-x) for Renyi
const Mobius& reciprocal(MapId id) {
  static const Mobius gauss(0, 1, 1, 0);
  static const Mobius renyi(0, 1, -1, 1);
  return id == MapId::Gauss ? gauss : renyi;
}

}  // namespace

ParityWord::ParityWord(std::vector<Bit> bits) : bits_(std::move(bits)) {
  for (Bit b : bits_)
    if (b > 1) throw std::invalid_argument("parity bits must be 0 or 1");
}

ParityWord ParityWord::parse(std::string_view s) {
  std::vector<Bit> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("omega must be a string of 0/1");
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return ParityWord(std::move(bits));
}

ParityWord ParityWord::shifted() const {
  if (bits_.empty()) throw std::logic_error("shift of empty parity word");
  return ParityWord(std::vector<Bit>(bits_.begin() + 1, bits_.end()));
}

std::size_t ParityWord::count_ones() const {
  std::size_t n = 0;
  for (Bit b : bits_) n += b;
  return n;
}

std::string ParityWord::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (Bit b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

CylinderWord::CylinderWord(std::vector<Digit> digits) : digits_(std::move(digits)) {
  for (Digit a : digits_)
    if (a == 0) throw std::invalid_argument("cylinder digits must be positive");
}

CylinderWord CylinderWord::parse(std::string_view s) {
  std::vector<Digit> out;
  Digit cur = 0;
  bool have = false;
  for (char c : s) {
    if (c >= '0' && c <= '9') {
      if (cur > (std::numeric_limits<Digit>::max() - 9) / 10) throw std::invalid_argument("digit too large");
      cur = cur * 10 + static_cast<Digit>(c - '0');
      have = true;
    } else if (c == ',' || c == ' ' || c == '[' || c == ']') {
      if (have) out.push_back(cur);
      cur = 0;
      have = false;
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c + "' in word");
    }
  }
  if (have) out.push_back(cur);
  return CylinderWord(std::move(out));
}

ParityWord CylinderWord::parity() const {
  std::vector<Bit> bits;
  bits.reserve(digits_.size());
  for (Digit a : digits_) bits.push_back(parity_of(a));
  return ParityWord(std::move(bits));
}

std::string CylinderWord::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(digits_[i]);
  }
  return s + "]";
}

bool RatInterval::contains(const Rational& x) const {
  const auto lo_cmp = x <=> lo;
  const auto hi_cmp = x <=> hi;
  const bool above = lo_closed ? lo_cmp >= 0 : lo_cmp > 0;
  const bool below = hi_closed ? hi_cmp <= 0 : hi_cmp < 0;
  return above && below;
}

bool RatInterval::contains(const QuadIrr& x) const { return x.compare(lo) > 0 && x.compare(hi) < 0; }

bool RatInterval::contains(const Point& x) const {
  return std::visit([this](const auto& v) { return contains(v); }, x);
}

bool RatInterval::closure_contains(const Point& x) const {
  return exact::compare(x, Point(lo)) >= 0 && exact::compare(x, Point(hi)) <= 0;
}

std::string RatInterval::str() const {
  return std::string(lo_closed ? "[" : "(") + lo.str() + ", " + hi.str() + (hi_closed ? "]" : ")");
}

Rational apply_map(MapId id, const Rational& x) {
  check_defined(id, x);
  const Rational y = reciprocal(id).apply(x);
  return y - Rational(y.floor());
}

QuadIrr apply_map(MapId id, const QuadIrr& x) {
  check_unit(x);
  const QuadIrr y = reciprocal(id).apply(x);
  return y - Rational(y.floor());
}

Point apply_map(MapId id, const Point& x) {
  return std::visit([id](const auto& v) -> Point { return apply_map(id, v); }, x);
}

Digit symbol_of(Bit omega1, const Rational& x) {
  const MapId id = omega1 ? MapId::Renyi : MapId::Gauss;
  check_defined(id, x);
  const Digit k = to_digit(reciprocal(id).apply(x).floor());
  return id == MapId::Gauss ? 2 * k : 2 * k - 1;
}

Digit symbol_of(Bit omega1, const QuadIrr& x) {
  const MapId id = omega1 ? MapId::Renyi : MapId::Gauss;
  check_unit(x);
  const Digit k = to_digit(reciprocal(id).apply(x).floor());
  return id == MapId::Gauss ? 2 * k : 2 * k - 1;
}

Digit symbol_of(Bit omega1, const Point& x) {
  return std::visit([omega1](const auto& v) { return symbol_of(omega1, v); }, x);
}

Branch branch_inverse(Digit a) {
  if (a == 0) throw std::invalid_argument("branch digit must be positive");
  if (a % 2 == 0) {
    const BigInt m = a / 2;
    // y -> 1/(y + m) onto (1/(m+1), 1/m]
    return {Mobius(0, 1, 1, m), RatInterval{Rational(1, m + 1), Rational(1, m), false, true}};
  }
  const BigInt j = (a + 1) / 2;
  // y -> (y + j - 1)/(y + j) onto [(j-1)/j, j/(j+1))
  return {Mobius(1, j - 1, 1, j), RatInterval{Rational(j - 1, j), Rational(j, j + 1), true, false}};
}

Mobius word_mobius(const CylinderWord& w) {
  Mobius m = Mobius::identity();
  for (Digit a : w.digits()) m = m * branch_inverse(a).inverse;
  return m;
}

RatInterval cylinder_interval(const CylinderWord& w) {
  if (w.empty()) return RatInterval{Rational(0), Rational(1), true, true};
  RatInterval cur = branch_inverse(w[w.size() - 1]).domain;
  for (std::size_t i = w.size() - 1; i-- > 0;) {
    // psi_a is defined on [0, 1) only
    if (cur.hi == 1) cur.hi_closed = false;
    const Branch br = branch_inverse(w[i]);
    const Rational lo = br.inverse.apply(cur.lo);
    const Rational hi = br.inverse.apply(cur.hi);
    if (br.inverse.det() > 0)
      cur = RatInterval{lo, hi, cur.lo_closed, cur.hi_closed};
    else
      cur = RatInterval{hi, lo, cur.hi_closed, cur.lo_closed};
  }
  return cur;
}

std::pair<ParityWord, Point> skew_step(const ParityWord& omega, const Point& x) {
  if (omega.empty()) throw std::invalid_argument("skew_step needs a nonempty parity word");
  const MapId id = omega[0] ? MapId::Renyi : MapId::Gauss;
  return {omega.shifted(), apply_map(id, x)};
}

}  // namespace gr::maps
