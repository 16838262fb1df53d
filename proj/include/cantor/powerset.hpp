#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cantor/trace.hpp"

namespace cantor::powerset {

/// Subset of {0..n-1} as a bitmask; element e is in S iff bit e is set.
using Subset = std::uint64_t;

std::string subset_str(Subset s);  // "{0, 2}", "{}" for the empty set

enum class ChainCondition {
  kStar,     // f(b) equals the chain below b
  kRelaxed,  // f(b) is contained in the chain below b
};

/// A = {0..n-1} with a well-order (order[0] is least) and a total
/// f: A -> powerset(A) given as one subset per element.
class PowersetInstance {
 public:
  PowersetInstance(std::size_t n, std::vector<std::size_t> order, std::vector<Subset> f);

  // {"n": 2, "order": [0,1], "f": [[1],[0,1]]}; order and f must both be
  // total. parse/serialize round-trip bit-exactly.
  static PowersetInstance parse(std::string_view json_text);
  std::string serialize() const;

  std::size_t size() const { return n_; }
  const std::vector<std::size_t>& order() const { return order_; }
  Subset f(std::size_t a) const { return f_[a]; }
  const std::vector<Subset>& f_table() const { return f_; }

  Subset universe() const;             // all of A
  Subset strictly_below(std::size_t a) const;  // elements preceding a in the order
  Subset up_to(std::size_t a) const;           // strictly_below(a) | {a}

  PowersetInstance with_order(std::vector<std::size_t> order) const;

  bool operator==(const PowersetInstance&) const = default;
  std::string str() const;  // compact one-line rendering for reports

 private:
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<Subset> f_;
};

struct SubsetWitness {
  Subset subset = 0;
  ConstructionTrace trace;
};

struct StageSequence {
  std::vector<Subset> stages;  // starts at the empty union, ends at the first repeat
  std::size_t fixpoint_index = 0;

  Subset fixpoint() const { return stages.back(); }
};

/// Order-driven diagonal set: walking A in order, B gains a exactly when the
/// union built so far equals f(a) restricted to the elements up to a.
SubsetWitness inductive_B(const PowersetInstance& inst);

/// Greedy maximal chain: repeatedly append the least unused b whose f(b)
/// equals (kStar) or is contained in (kRelaxed) the chain built so far; the
/// trace records the chain order.
SubsetWitness greedy_chain(const PowersetInstance& inst, ChainCondition condition);

/// Stage iteration of the monotone operator S -> {x : f(x) subseteq S} from
/// the empty set up to its least fixpoint.
std::pair<StageSequence, SubsetWitness> stages(const PowersetInstance& inst);

/// Elements from which no infinite f-membership chain starts, computed by
/// cycle reachability on the graph a -> f(a) (independent of the stage
/// iteration above).
SubsetWitness d_infinity(const PowersetInstance& inst);

/// Elements admitting no chain x_1 in f(a), x_{i+1} in f(x_i) of length
/// `chain` that closes with a in f(x_chain). chain = 0 is the classical
/// anti-diagonal {a : a not in f(a)}.
SubsetWitness d_n(const PowersetInstance& inst, std::size_t chain);

/// Witness a with f(a) = s, if any.
std::optional<std::size_t> in_range(const PowersetInstance& inst, Subset s);

}  // namespace cantor::powerset
