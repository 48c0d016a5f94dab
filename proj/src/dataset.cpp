#include "zgm/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "zgm/errors.hpp"

namespace zgm {
namespace {

std::string num_str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

Dataset::Dataset(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw EmptyInput("dataset must contain at least one value");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    double v = values_[i];
    if (!std::isfinite(v)) {
      throw NonFiniteValue("value #" + std::to_string(i) + " is not finite");
    }
    if (v < 0.0) {
      throw NegativeValue("value #" + std::to_string(i) + " is negative (" +
                          num_str(v) + "); only nonnegative data is supported");
    }
  }
}

SplitView split(const Dataset& d) {
  SplitView s;
  s.positives.reserve(d.size());
  for (double v : d.values()) {
    if (v > 0.0) {
      s.positives.push_back(v);
    } else {
      ++s.zero_count;
    }
  }
  return s;
}

}  // namespace zgm
