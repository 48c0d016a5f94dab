#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace zgm {

/// Parameters for a synthetic zero-inflated log-normal dataset.
struct FixtureSpec {
  std::size_t positives = 0;
  double log_mean = 0.0;   // mean of log values
  double log_sigma = 1.0;  // standard deviation of log values, > 0
  std::size_t zeros = 0;
  std::uint64_t seed = 0;
};

/// Deterministic generator: `positives` log-normal draws followed by
/// `zeros` zeros. Normals come from a hand-rolled Box-Muller over mt19937_64
/// bits so output is byte-stable across platforms and library versions.
std::vector<double> lognormal_fixture(const FixtureSpec& spec);

}  // namespace zgm
