#pragma once

#include <cstddef>
#include <vector>

namespace zgm {

/// An immutable collection of validated observations: every value is finite
/// and >= 0, and there is at least one value. Construction is the single
/// validation surface; everything downstream relies on these invariants.
class Dataset {
 public:
  /// Throws EmptyInput, NegativeValue or NonFiniteValue.
  explicit Dataset(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
};

/// A dataset partitioned into its strictly positive values and the count of
/// zeros. positives preserves the source order; total() is the original size.
struct SplitView {
  std::vector<double> positives;
  std::size_t zero_count = 0;

  std::size_t total() const { return positives.size() + zero_count; }
};

SplitView split(const Dataset& d);

}  // namespace zgm
