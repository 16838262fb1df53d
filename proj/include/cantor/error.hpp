#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

// Violated precondition or malformed input. The message names the
// precondition so the CLI can surface it verbatim (exit code 2).
struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite list ended before the construction reached the requested depth.
struct provider_exhausted : invalid_input {
  explicit provider_exhausted(std::size_t index)
      : invalid_input("list exhausted before index " + std::to_string(index)),
        index(index) {}
  std::size_t index;
};

}  // namespace cantor
