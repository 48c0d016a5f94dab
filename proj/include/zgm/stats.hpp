#pragma once

#include <cmath>
#include <span>

#include "zgm/dataset.hpp"

namespace zgm {

/// Neumaier-compensated accumulator. Error is O(1) ulp independent of the
/// number of terms, which keeps sums of 10^6+ logs stable to permutation.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// exp of the mean of logs. Requires a nonempty, strictly positive input.
/// A single value is returned exactly; so is the common value of an
/// all-equal input.
double geometric_mean(std::span<const double> positives);

/// Plain mean with compensated accumulation. Requires a nonempty input.
double arithmetic_mean(std::span<const double> values);
inline double arithmetic_mean(const Dataset& d) { return arithmetic_mean(std::span<const double>(d.values())); }

/// exp of the root-mean-square log deviation from the geometric mean; a
/// multiplicative spread factor, always >= 1. Requires strictly positive
/// input; an all-equal input gives exactly 1.
double geometric_sd(std::span<const double> positives);

}  // namespace zgm
