#pragma once

#include <optional>
#include <span>

#include "zgm/estimators.hpp"

namespace zgm {

struct SolverConfig {
  double rel_tolerance = 1e-12;  // bracket convergence, relative to hi
  int max_iterations = 200;
};

/// Result of solving for the shift supremum. delta is empty when the
/// relative-difference condition holds for every shift and no finite
/// supremum exists.
struct DeltaSolution {
  std::optional<double> delta;
  double residual = 0.0;      // G_delta(X+) - (1+eps)*G(X+) at the returned delta
  int iterations = 0;
  double bracket_width = 0.0; // final hi - lo; 0 if unbounded

  bool unbounded() const { return !delta.has_value(); }
};

/// G_delta(X+) - (1+eps)*G(X+): negative while the condition holds, zero at
/// the supremum, approaching A(X+) - (1+eps)*G(X+) as delta grows.
double delta_residual(std::span<const double> positives, double delta,
                      Epsilon eps);

/// Bisection for the unique root of delta_residual. Unboundedness is decided
/// analytically first: the residual climbs to A - (1+eps)*G, so when
/// eps*G >= A - G the condition holds for every shift and no root exists.
/// Throws NoConvergence if the bracket cannot shrink within the budget.
DeltaSolution solve_delta(std::span<const double> positives, Epsilon eps,
                          const SolverConfig& cfg = {});

/// (A - G)/G over the positives: the largest epsilon for which the shift
/// supremum is still finite. 0 exactly when all values are equal.
double unboundedness_threshold(std::span<const double> positives);

}  // namespace zgm
