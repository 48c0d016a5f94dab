#include "zgm/delta_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zgm/errors.hpp"
#include "zgm/stats.hpp"

namespace zgm {

double delta_residual(std::span<const double> positives, double delta,
                      Epsilon eps) {
  double g = geometric_mean(positives);
  return shifted_geometric_mean(positives, delta) - (1.0 + eps.value()) * g;
}

double unboundedness_threshold(std::span<const double> positives) {
  double g = geometric_mean(positives);
  auto [lo, hi] = std::minmax_element(positives.begin(), positives.end());
  if (*lo == *hi) {
    return 0.0;
  }
  // A >= G with real spread; clamp the float-noise case anyway.
  return std::max(0.0, (arithmetic_mean(positives) - g) / g);
}

DeltaSolution solve_delta(std::span<const double> positives, Epsilon eps,
                          const SolverConfig& cfg) {
  if (cfg.rel_tolerance <= 0.0 || cfg.max_iterations < 1) {
    throw Error("solver config requires rel_tolerance > 0 and max_iterations >= 1");
  }
  double g = geometric_mean(positives);  // validates the input
  auto [lo_it, hi_it] = std::minmax_element(positives.begin(), positives.end());
  if (*lo_it == *hi_it) {
    // All equal: the shifted mean equals G for every shift, the condition
    // always holds, no supremum exists.
    return {};
  }
  double a = arithmetic_mean(positives);
  if (eps.value() * g >= a - g) {
    // The residual climbs only to A - (1+eps)G; it never crosses zero.
    return {};
  }

  double target = (1.0 + eps.value()) * g;
  auto residual = [&](double d) {
    return shifted_geometric_mean(positives, d) - target;
  };

  // Bracket: f(0+) = -eps*G < 0; double the upper end until the sign flips.
  double lo = 0.0;
  double res_lo = -eps.value() * g;
  double hi = std::max(1.0, *hi_it);
  double res_hi = residual(hi);
  int doublings = 0;
  while (res_hi < 0.0) {
    if (++doublings > 1024 || !std::isfinite(hi)) {
      throw NoConvergence("no sign change found while expanding the bracket");
    }
    hi *= 2.0;
    res_hi = residual(hi);
  }

  // The returned shift is the lower bracket end, so the condition still
  // holds at it; keep halving until the bracket is tight and the residual
  // is well inside the 1e-9*G contract.
  const double residual_cap = 1e-10 * g;
  int iterations = 0;
  while (iterations < cfg.max_iterations) {
    if ((hi - lo) / hi < cfg.rel_tolerance && std::abs(res_lo) <= residual_cap) {
      break;
    }
    double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) {
      break;  // bracket at float resolution
    }
    ++iterations;
    double r = residual(mid);
    if (r < 0.0) {
      lo = mid;
      res_lo = r;
    } else {
      hi = mid;
    }
  }
  if ((hi - lo) / hi >= cfg.rel_tolerance || lo <= 0.0 ||
      std::abs(res_lo) > 1e-9 * g) {
    throw NoConvergence("bracket failed to converge after " +
                        std::to_string(iterations) + " iterations");
  }
  return {lo, res_lo, iterations, hi - lo};
}

}  // namespace zgm
