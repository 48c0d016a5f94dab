#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zgm/dataset.hpp"
#include "zgm/delta_solver.hpp"
#include "zgm/estimators.hpp"

namespace zgm {

/// One row of a zero-append sweep: every estimator evaluated on the source
/// dataset with `zeros_added` extra zeros. `extended` is parallel to the
/// requested epsilon list; `gsd_extended` is evaluated at the first epsilon
/// and empty where the measure is undefined.
struct SweepRow {
  std::size_t zeros_added = 0;
  double habib = 0.0;
  double plus_one = 0.0;
  std::vector<double> extended;
  std::optional<double> gsd_extended;
};

struct SweepTable {
  std::vector<Epsilon> epsilons;
  std::vector<std::optional<double>> delta;  // per epsilon; constant across rows
  std::vector<SweepRow> rows;
};

/// Rows at zeros_added = 0, step, 2*step, ... capped at max_zeros, with a
/// final row at max_zeros itself when it is not a multiple of step. The
/// shift depends only on the positive subset, so it is solved once per
/// epsilon and reused for every row. Requires at least one positive value
/// and step >= 1.
SweepTable sweep_zeros(const Dataset& d, const std::vector<Epsilon>& epsilons,
                       std::size_t max_zeros, std::size_t step,
                       const SolverConfig& cfg = {});

}  // namespace zgm
