#include "zgm/stats.hpp"

#include <algorithm>
#include <cmath>

#include "zgm/errors.hpp"

namespace zgm {
namespace {

// Validates strict positivity and reports whether all values are equal.
// Returns {min, max}.
std::pair<double, double> check_positive(std::span<const double> xs) {
  if (xs.empty()) {
    throw EmptyInput("need at least one value");
  }
  double lo = xs[0], hi = xs[0];
  for (double v : xs) {
    if (!std::isfinite(v)) {
      throw NonFiniteValue("value is not finite");
    }
    if (v <= 0.0) {
      throw NonPositiveValue("value must be strictly positive");
    }
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

}  // namespace

double geometric_mean(std::span<const double> positives) {
  auto [lo, hi] = check_positive(positives);
  if (lo == hi) {
    return lo;  // includes the single-value case, exact
  }
  CompensatedSum logs;
  for (double v : positives) {
    logs.add(std::log(v));
  }
  return std::exp(logs.value() / static_cast<double>(positives.size()));
}

double arithmetic_mean(std::span<const double> values) {
  if (values.empty()) {
    throw EmptyInput("need at least one value");
  }
  CompensatedSum sum;
  for (double v : values) {
    sum.add(v);
  }
  return sum.value() / static_cast<double>(values.size());
}

double geometric_sd(std::span<const double> positives) {
  auto [lo, hi] = check_positive(positives);
  if (lo == hi) {
    return 1.0;  // no spread, multiplicative identity
  }
  CompensatedSum logs;
  for (double v : positives) {
    logs.add(std::log(v));
  }
  double mean_log = logs.value() / static_cast<double>(positives.size());
  CompensatedSum sq;
  for (double v : positives) {
    double dev = std::log(v) - mean_log;
    sq.add(dev * dev);
  }
  return std::exp(std::sqrt(sq.value() / static_cast<double>(positives.size())));
}

}  // namespace zgm
