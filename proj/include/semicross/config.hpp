#pragma once

#include <cstdint>

namespace semicross {

enum class ValidationMode { Strict, Lax };

/// One record holds every numeric knob; all tolerances used anywhere in the
/// library flow from here so scenarios can override them in one place.
struct Config {
  double tol = 1e-9;            // Frobenius-norm comparison tolerance
  double span_drop_tol = 1e-10; // Gram-Schmidt drop threshold for span bases
  std::uint64_t seed = 42;
  int closure_bound = 512;      // bailout bound for semigroup closures
  ValidationMode mode = ValidationMode::Strict;
};

}  // namespace semicross
