#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cantor/trace.hpp"

namespace cantor::binseq {

using Bit = std::uint8_t;

/// Finite word over {0,1}. Concatenation is associative with the empty word
/// as identity.
struct BitWord {
  std::vector<Bit> bits;

  BitWord() = default;
  BitWord(std::initializer_list<int> bs);

  std::size_t size() const { return bits.size(); }
  bool empty() const { return bits.empty(); }

  BitWord operator+(const BitWord& other) const;  // concatenation
  void push_back(Bit b) { bits.push_back(b); }

  // First k symbols; k must not exceed size().
  BitWord take(std::size_t k) const;

  bool operator==(const BitWord&) const = default;
  std::string str() const;  // "0110", empty word renders as "ε"
};

/// Infinite binary sequence with a finite description: a preperiod followed by
/// an endlessly repeated period. The constant-zero stream is valid here.
class BitStream {
 public:
  BitStream(std::vector<Bit> preperiod, std::vector<Bit> period);

  // Fixture notation "pre:period", e.g. "1:01" or ":0".
  static BitStream parse(std::string_view text);
  std::string str() const;

  // 1-based, total: s|_i.
  Bit at(std::size_t i) const;

  const std::vector<Bit>& preperiod() const { return preperiod_; }
  const std::vector<Bit>& period() const { return period_; }

  bool operator==(const BitStream&) const = default;

 private:
  std::vector<Bit> preperiod_;
  std::vector<Bit> period_;
};

/// Yields the k-th stream of the list (1-based) or nullopt when the list is
/// shorter than k. Rule-generated infinite lists are lambdas that never
/// return nullopt.
using BitStreamProvider = std::function<std::optional<BitStream>(std::size_t)>;

BitStreamProvider from_list(std::vector<BitStream> streams);

/// s|_{<=n}: the initial segment of s with length n.
BitWord prefix(const BitStream& s, std::size_t n);

/// Cantor's diagonal word: c_i = 1 - s_i|_i for i = 1..n.
BitWord classical_diagonal(const BitStreamProvider& list, std::size_t n);

/// The inductive construction: sigma_k = 1 if <sigma_i>_{i<k} * <0> equals
/// s_k|_{<=k}, else 0. The trace records each comparison and branch.
std::pair<BitWord, ConstructionTrace> inductive_sigma(const BitStreamProvider& list,
                                                      std::size_t n);

std::ostream& operator<<(std::ostream& os, const BitWord& w);
std::ostream& operator<<(std::ostream& os, const BitStream& s);

}  // namespace cantor::binseq
