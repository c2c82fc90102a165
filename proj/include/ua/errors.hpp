#pragma once

#include <stdexcept>
#include <string>

namespace ua {

// Malformed input: bad shapes, out-of-range entries, signature mismatches.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A check was invoked on data that does not satisfy its stated hypotheses.
struct HypothesisViolated : std::runtime_error {
  explicit HypothesisViolated(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ua
