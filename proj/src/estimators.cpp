#include "zgm/estimators.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <string>

#include "zgm/delta_solver.hpp"
#include "zgm/errors.hpp"
#include "zgm/stats.hpp"

namespace zgm {
namespace {

std::string num_str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

void check_nonnegative(std::span<const double> values) {
  if (values.empty()) {
    throw EmptyInput("need at least one value");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw NonFiniteValue("value is not finite");
    }
    if (v < 0.0) {
      throw NegativeValue("value is negative");
    }
  }
}

void check_delta(double delta) {
  if (!std::isfinite(delta) || delta <= 0.0) {
    throw NonPositiveValue("shift must be a finite positive value, got " +
                           num_str(delta));
  }
}

bool all_equal(std::span<const double> values) {
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *lo == *hi;
}

}  // namespace

Epsilon::Epsilon(double value) : value_(value) {
  if (!(value > 0.0) || !(value < 1.0)) {
    throw Error("epsilon must lie in (0, 1), got " + num_str(value));
  }
}

double habib_mean(const SplitView& s) {
  std::size_t n = s.positives.size();
  if (n == 0) {
    return 0.0;  // empty log sum, zero prefactor
  }
  CompensatedSum logs;
  for (double v : s.positives) {
    logs.add(std::log(v));
  }
  double total = static_cast<double>(s.total());
  return (static_cast<double>(n) / total) * std::exp(logs.value() / total);
}

double plus_one_mean(const Dataset& d) {
  return shifted_geometric_mean(d, 1.0);
}

double shifted_geometric_mean(std::span<const double> values, double delta) {
  check_nonnegative(values);
  check_delta(delta);
  auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
  if (*min_it == *max_it) {
    return *min_it;  // exp(mean log(c+d)) - d is exactly c
  }
  double n = static_cast<double>(values.size());
  double max_v = *max_it;
  if (delta > max_v) {
    // exp(mean log(x+d)) - d cancels catastrophically once d dominates the
    // data; factoring out d leaves no subtraction at all.
    CompensatedSum logs;
    for (double v : values) {
      logs.add(std::log1p(v / delta));
    }
    return delta * std::expm1(logs.value() / n);
  }
  CompensatedSum logs;
  for (double v : values) {
    logs.add(std::log(v + delta));
  }
  return std::exp(logs.value() / n) - delta;
}

double shifted_geometric_mean(const Dataset& d, double delta) {
  return shifted_geometric_mean(std::span<const double>(d.values()), delta);
}

ExtendedMeanResult extended_geometric_mean(const Dataset& d, Epsilon eps) {
  return extended_geometric_mean(d, eps, SolverConfig{});
}

ExtendedMeanResult extended_geometric_mean(const Dataset& d, Epsilon eps,
                                           const SolverConfig& cfg) {
  const auto& values = d.values();
  if (all_equal(values)) {
    // Covers the all-zero dataset as well: the common value is the mean.
    return {values.front(), std::nullopt, eps, /*unbounded=*/true,
            /*trivial_case=*/true};
  }
  SplitView s = split(d);
  DeltaSolution sol = solve_delta(s.positives, eps, cfg);
  if (sol.delta) {
    return {shifted_geometric_mean(values, *sol.delta), sol.delta, eps,
            /*unbounded=*/false, /*trivial_case=*/false};
  }
  // No finite supremum: the shifted mean climbs to the arithmetic mean.
  return {arithmetic_mean(values), std::nullopt, eps, /*unbounded=*/true,
          /*trivial_case=*/false};
}

double modified_gsd(std::span<const double> values, double delta,
                    double center) {
  check_nonnegative(values);
  check_delta(delta);
  if (!(center > 0.0)) {
    throw NonPositiveValue("center must be positive");
  }
  CompensatedSum sq;
  for (double v : values) {
    double dev = std::log((v + delta) / center);
    sq.add(dev * dev);
  }
  return std::exp(std::sqrt(sq.value() / static_cast<double>(values.size())));
}

GsdResult extended_geometric_sd(const Dataset& d, Epsilon eps) {
  return extended_geometric_sd(d, eps, SolverConfig{});
}

GsdResult extended_geometric_sd(const Dataset& d, Epsilon eps,
                                const SolverConfig& cfg) {
  if (all_equal(d.values())) {
    throw DegenerateDataset(
        "all values are equal; the modified geometric SD needs a solved "
        "shift, which the all-equal case never produces");
  }
  ExtendedMeanResult mean = extended_geometric_mean(d, eps, cfg);
  if (!mean.delta) {
    throw UnboundedDelta(
        "no finite shift supremum exists for this dataset and epsilon; the "
        "modified geometric SD is undefined");
  }
  return {modified_gsd(d.values(), *mean.delta, mean.mean), *mean.delta, eps};
}

}  // namespace zgm
