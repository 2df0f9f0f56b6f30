#ifndef BLENDSEM_ERRORS_HPP
#define BLENDSEM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace blendsem {

// Malformed or inconsistent run configuration. CLI maps this to exit code 1.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A state with rho <= 0 or p <= 0 was handed to an operation that requires
// admissible input. Location fields are -1 when not applicable.
struct InvalidStateError : std::runtime_error {
  int element = -1;
  int node_i = -1;
  int node_j = -1;

  explicit InvalidStateError(const std::string& msg) : std::runtime_error(msg) {}
  InvalidStateError(const std::string& msg, int elem, int i, int j)
      : std::runtime_error(msg), element(elem), node_i(i), node_j(j) {}
};

// The all-FV stage result (the safe solution) violated positivity. The step
// loop reacts by halving dt and restarting the step; after the retry budget
// is exhausted the run aborts with this as the structured report. stage is
// 1-based.
struct SafeStateError : std::runtime_error {
  int stage = -1;
  int element = -1;
  int node_i = -1;
  int node_j = -1;
  std::string quantity;  // "density" or "pressure"
  double value = 0.0;

  SafeStateError(const std::string& msg, int stage_, int elem, int i, int j,
                 std::string quantity_, double value_)
      : std::runtime_error(msg),
        stage(stage_),
        element(elem),
        node_i(i),
        node_j(j),
        quantity(std::move(quantity_)),
        value(value_) {}
};

}  // namespace blendsem

#endif
