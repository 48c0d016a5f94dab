#pragma once

#include <optional>
#include <span>

#include "zgm/dataset.hpp"

namespace zgm {

struct SolverConfig;

/// Maximum tolerated relative deviation of the shifted geometric mean from
/// the standard geometric mean on the positive subset. Must lie in (0, 1).
class Epsilon {
 public:
  explicit Epsilon(double value);
  double value() const { return value_; }

 private:
  double value_;
};

/// The zero-capable geometric mean together with the shift that produced it.
/// delta is empty exactly when no finite shift supremum exists; the mean is
/// then the delta->infinity limit, i.e. the arithmetic mean.
struct ExtendedMeanResult {
  double mean;
  std::optional<double> delta;
  Epsilon epsilon;
  bool unbounded;     // true iff delta is empty
  bool trivial_case;  // all values equal, or no positive values
};

struct GsdResult {
  double gsd;  // >= 1
  double delta;
  Epsilon epsilon;
};

/// Habib's zero-extension: (n/(n+m)) * exp(S/(n+m)) with S the log sum over
/// the n positives. Returns 0 when there are no positives.
double habib_mean(const SplitView& s);

/// The add-one workaround: exp(mean log(x_i + 1)) - 1.
double plus_one_mean(const Dataset& d);

/// exp(mean log(x_i + delta)) - delta for a fixed shift delta > 0.
/// Strictly increasing in delta unless all values are equal. Evaluated as
/// delta * expm1(mean log1p(x_i/delta)) once delta exceeds max(x_i), where
/// the direct form loses all significant digits.
double shifted_geometric_mean(std::span<const double> values, double delta);
double shifted_geometric_mean(const Dataset& d, double delta);

/// Zero-capable geometric mean: the shifted mean at the largest shift that
/// keeps the positive subset within eps relative of its standard geometric
/// mean. All-equal datasets short-circuit to the common value; an unbounded
/// shift falls back to the arithmetic mean (the limiting value).
ExtendedMeanResult extended_geometric_mean(const Dataset& d, Epsilon eps);
ExtendedMeanResult extended_geometric_mean(const Dataset& d, Epsilon eps,
                                           const SolverConfig& cfg);

/// Root-mean-square log deviation of the shifted values from an unshifted
/// center, exponentiated. The body of the modified spread measure.
double modified_gsd(std::span<const double> values, double delta,
                    double center);

/// Modified geometric standard deviation at the same delta and mean as
/// extended_geometric_mean. Throws DegenerateDataset when all values are
/// equal and UnboundedDelta when no finite shift exists; in both cases the
/// measure is undefined rather than guessed.
GsdResult extended_geometric_sd(const Dataset& d, Epsilon eps);
GsdResult extended_geometric_sd(const Dataset& d, Epsilon eps,
                                const SolverConfig& cfg);

}  // namespace zgm
