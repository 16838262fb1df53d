#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cantor/rational.hpp"
#include "cantor/trace.hpp"

namespace cantor::exactreal {

using Base = std::uint32_t;
using Digit = std::uint32_t;

/// Finite digit word in a fixed base.
struct DigitWord {
  Base base = 10;
  std::vector<Digit> digits;

  std::size_t size() const { return digits.size(); }
  Rational value() const;  // sum of d_j * base^-j over the word

  bool operator==(const DigitWord&) const = default;
  std::string str() const;  // digits only, e.g. "211121" (comma-joined when base > 10)
};

/// Eventually periodic base-b expansion that is not ultimately 0, so its
/// value always lies in (0,1].
class DigitStream {
 public:
  DigitStream(Base base, std::vector<Digit> preperiod, std::vector<Digit> period);

  Base base() const { return base_; }
  const std::vector<Digit>& preperiod() const { return preperiod_; }
  const std::vector<Digit>& period() const { return period_; }

  Digit at(std::size_t i) const;  // 1-based
  DigitWord take(std::size_t n) const;
  Rational value() const;

  bool operator==(const DigitStream&) const = default;
  std::string str() const;  // "0.1(2)_3"

 private:
  Base base_;
  std::vector<Digit> preperiod_;
  std::vector<Digit> period_;
};

using RationalProvider = std::function<std::optional<Rational>(std::size_t)>;

RationalProvider from_list(std::vector<Rational> values);

/// The unique non-terminating base-b expansion of r in (0,1]. Rationals with
/// a terminating expansion come back in the (b-1)-tail form, e.g.
/// expansion(1/3, 3) = 0.0(2)_3.
DigitStream expansion(const Rational& r, Base base);

/// Sum of the first n digits of d, as an exact fraction (0 when they are all
/// zero).
Rational partial_sum(const DigitStream& d, std::size_t n);

/// Classical anti-diagonal digits over base > 2: c_i = 1 unless the diagonal
/// digit d_{i,i} is 1, in which case c_i = 2.
DigitWord anti_diagonal(const RationalProvider& list, Base base, std::size_t n);

/// Inductive digits over base > 2: sigma_k = 2 exactly when the partial sum
/// so far, with digit 1 appended at position k, equals r_k's depth-k partial
/// sum; else sigma_k = 1.
std::pair<DigitWord, ConstructionTrace> inductive_real(const RationalProvider& list, Base base,
                                                       std::size_t n);

/// Binary pairwise construction: pair k is 01 when b_{k,2k} = 0 and 10 when
/// b_{k,2k} = 1. Output has 2n digits; never ultimately 0 or 1.
DigitWord hanf_h(const RationalProvider& list, std::size_t pairs);

/// Binary pairwise construction: pair k is 01 unless r_k's digits at
/// positions 2k-1, 2k are exactly 01, in which case pair k is 10.
DigitWord pair_s(const RationalProvider& list, std::size_t pairs);

/// Inductive binary pairwise construction; every output value lands in
/// [1/3, 2/3]. Pair k is 10 exactly when the partial sum through position
/// 2k-2, plus 2^-2k, equals r_k's depth-2k partial sum; else 01.
std::pair<DigitWord, ConstructionTrace> pair_sigma(const RationalProvider& list,
                                                   std::size_t pairs);

std::ostream& operator<<(std::ostream& os, const DigitWord& w);
std::ostream& operator<<(std::ostream& os, const DigitStream& s);

}  // namespace cantor::exactreal
