#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cantor {

// One induction step: what was compared, whether it matched, what was emitted.
// All constructions share this shape; the strings are already rendered in the
// construction's own notation (words, fractions, subsets).
struct TraceStep {
  std::size_t index = 0;   // 1-based step (or the element, for set inductions)
  std::string candidate;   // left-hand side of the step's comparison
  std::string target;      // right-hand side
  bool matched = false;    // branch taken
  std::string emitted;     // digit, pair, or stage produced by the step

  bool operator==(const TraceStep&) const = default;
};

using ConstructionTrace = std::vector<TraceStep>;

}  // namespace cantor
