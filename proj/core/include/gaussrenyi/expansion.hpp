#pragma once

// Random continued fractions: x = omega_1 + (-1)^omega_1 / (C_1 + (-1)^omega_2 / (C_2 + ...)),
// the translation between digit words a_1 ... a_n and pairs (omega, C), and the first-return
// coding of words by blocks a 1^k (a >= 2).

#include "gaussrenyi/errors.hpp"
#include "gaussrenyi/maps.hpp"

#include <optional>
#include <vector>

namespace gr::expansion {

using exact::BigInt;
using exact::Point;
using exact::Rational;
using maps::Bit;
using maps::CylinderWord;
using maps::Digit;
using maps::ParityWord;

/// omega_1 ... omega_{n+1} and C_1 ... C_n; C_i >= 1 + omega_{i+1}.
struct RandomCFDigits {
  ParityWord omega;
  std::vector<BigInt> C;

  friend bool operator==(const RandomCFDigits&, const RandomCFDigits&) = default;
};

struct Expansion {
  RandomCFDigits digits;  // omega truncated to digits.C.size() + 1 bits
  Point residual;         // T_omega^steps x
  std::size_t steps = 0;
  bool terminated = false;  // orbit hit the excluded set before all steps were taken
};

/// The orbit reached 0 under the Gauss map or 1 under the Renyi map at step `index`.
class HitBoundary : public Error {
 public:
  HitBoundary(std::size_t index, Expansion partial);
  std::size_t index() const { return index_; }
  const Expansion& partial() const { return partial_; }

 private:
  std::size_t index_;
  Expansion partial_;
};

/// First `steps` digits of x in [0, 1] along omega; needs omega.size() >= steps + 1.
/// Throws HitBoundary.
Expansion expand(const ParityWord& omega, const Point& x, std::size_t steps);
/// Same, stopping at the excluded set with terminated = true instead of throwing.
Expansion expand_until_boundary(const ParityWord& omega, const Point& x, std::size_t steps);

/// Evaluates omega_1 + (-1)^omega_1 / (C_1 + ... + (-1)^omega_n / C_n). Throws InvalidDigits.
Rational reconstruct(const RandomCFDigits& digits);

/// Checks C_i >= 1 + omega_{i+1} and omega.size() == C.size() + 1. Throws InvalidDigits.
void validate(const RandomCFDigits& digits);

/// a_i = 2 C_i - omega_i - 2 omega_{i+1}.
CylinderWord word_from_cf(const RandomCFDigits& digits);
/// C_i = (a_i + omega_i)/2 + omega_{i+1}; omega_{n+1} defaults to omega_1 (periodic completion).
RandomCFDigits cf_from_word(const CylinderWord& w, std::optional<Bit> next = std::nullopt);
/// Same with an explicit omega of length n + 1. Throws ParityMismatch.
RandomCFDigits cf_from_word(const CylinderWord& w, const ParityWord& omega);

/// Parity word and exact point coded by the periodic extension of w.
std::pair<ParityWord, Point> decode_pi(const CylinderWord& w);

/// Block a 1^run of the induced alphabet, a >= 2.
struct InducedSymbol {
  Digit a = 2;
  std::size_t run = 0;
  std::size_t return_time() const { return run + 1; }

  friend bool operator==(const InducedSymbol&, const InducedSymbol&) = default;
};

struct InducedParse {
  std::vector<InducedSymbol> blocks;  // blocks closed by a following digit >= 2
  CylinderWord remainder;             // trailing block not yet closed

  friend bool operator==(const InducedParse&, const InducedParse&) = default;
};

/// Greedy block parse. Throws StartsInDeletedSet when w starts with 1.
InducedParse induce(const CylinderWord& w);
CylinderWord flatten(const InducedParse& parse);

}  // namespace gr::expansion
