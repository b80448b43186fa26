#pragma once

// Gauss map T0, Renyi map T1, their inverse branches and the cylinder structure of the
// skew product R(omega, x) = (shift(omega), T_{omega_1} x).
//
// Digits a >= 1 label branches: even a = 2m is the Gauss branch with floor(1/x) = m on
// (1/(m+1), 1/m]; odd a = 2j - 1 is the Renyi branch with floor(1/(1-x)) = j on
// [(j-1)/j, j/(j+1)). The parity of a selects the map.

#include "gaussrenyi/exact.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gr::maps {

using exact::BigInt;
using exact::Mobius;
using exact::Point;
using exact::QuadIrr;
using exact::Rational;

enum class MapId : std::uint8_t { Gauss = 0, Renyi = 1 };

using Bit = std::uint8_t;
using Digit = std::uint64_t;

/// Finite prefix omega_1 ... omega_n of a sample path in {0,1}^N.
class ParityWord {
 public:
  ParityWord() = default;
  explicit ParityWord(std::vector<Bit> bits);
  ParityWord(std::initializer_list<Bit> bits) : ParityWord(std::vector<Bit>(bits)) {}

  /// Parses a string of '0' and '1' characters.
  static ParityWord parse(std::string_view s);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<Bit>& bits() const { return bits_; }

  /// Drops the leading bit (the shift on Omega).
  ParityWord shifted() const;
  std::size_t count_ones() const;

  std::string str() const;
  friend bool operator==(const ParityWord&, const ParityWord&) = default;
  friend auto operator<=>(const ParityWord&, const ParityWord&) = default;

 private:
  std::vector<Bit> bits_;
};

/// Digit string a_1 ... a_n over the positive integers.
class CylinderWord {
 public:
  CylinderWord() = default;
  explicit CylinderWord(std::vector<Digit> digits);
  CylinderWord(std::initializer_list<Digit> digits) : CylinderWord(std::vector<Digit>(digits)) {}

  /// Parses "3,1,1,4" (brackets and spaces ignored).
  static CylinderWord parse(std::string_view s);

  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  const std::vector<Digit>& digits() const { return digits_; }

  /// omega_i = a_i mod 2.
  ParityWord parity() const;

  std::string str() const;
  friend bool operator==(const CylinderWord&, const CylinderWord&) = default;
  friend auto operator<=>(const CylinderWord&, const CylinderWord&) = default;

 private:
  std::vector<Digit> digits_;
};

inline MapId map_of_digit(Digit a) { return (a % 2 == 0) ? MapId::Gauss : MapId::Renyi; }
inline Bit parity_of(Digit a) { return static_cast<Bit>(a % 2); }

/// Interval with rational endpoints lo < hi and explicit closedness flags.
struct RatInterval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = false;

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const;
  bool contains(const QuadIrr& x) const;
  bool contains(const Point& x) const;
  /// Membership in the closure [lo, hi].
  bool closure_contains(const Point& x) const;

  std::string str() const;
  friend bool operator==(const RatInterval&, const RatInterval&) = default;
};

/// T0 or T1 evaluated exactly. Throws UndefinedAtPoint on (Gauss, 0) and (Renyi, 1),
/// std::domain_error outside [0, 1].
Rational apply_map(MapId id, const Rational& x);
QuadIrr apply_map(MapId id, const QuadIrr& x);
Point apply_map(MapId id, const Point& x);

/// Branch digit a with a = omega1 (mod 2) whose interval contains x.
Digit symbol_of(Bit omega1, const Rational& x);
Digit symbol_of(Bit omega1, const QuadIrr& x);
Digit symbol_of(Bit omega1, const Point& x);

struct Branch {
  Mobius inverse;       // inverse branch psi_a : [0,1) -> domain
  RatInterval domain;   // J(a)
};

Branch branch_inverse(Digit a);

/// psi_{a_1} o ... o psi_{a_n}.
Mobius word_mobius(const CylinderWord& w);

/// J(a_1 ... a_n): the maximal interval on which the composition follows the branches a_i.
RatInterval cylinder_interval(const CylinderWord& w);

/// One step of R. Throws UndefinedAtPoint on (omega_1, x) in E.
std::pair<ParityWord, Point> skew_step(const ParityWord& omega, const Point& x);

}  // namespace gr::maps
