#include "zgm/fixture.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "zgm/errors.hpp"

namespace zgm {
namespace {

// Uniform in (0, 1), built from the top 53 bits so the stream depends only
// on mt19937_64, not on any library distribution implementation.
double next_uniform(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

double next_normal(std::mt19937_64& rng) {
  double u1 = next_uniform(rng);
  double u2 = next_uniform(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

std::vector<double> lognormal_fixture(const FixtureSpec& spec) {
  if (spec.positives == 0 && spec.zeros == 0) {
    throw EmptyInput("fixture needs at least one value");
  }
  if (!(spec.log_sigma > 0.0)) {
    throw Error("log_sigma must be positive");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<double> values;
  values.reserve(spec.positives + spec.zeros);
  for (std::size_t i = 0; i < spec.positives; ++i) {
    values.push_back(std::exp(spec.log_mean + spec.log_sigma * next_normal(rng)));
  }
  values.insert(values.end(), spec.zeros, 0.0);
  return values;
}

}  // namespace zgm
