#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zgm/dataset.hpp"
#include "zgm/delta_solver.hpp"
#include "zgm/estimators.hpp"

namespace zgm {

struct LabeledDataset {
  std::string label;
  Dataset data;
};

struct ComparisonRow {
  std::string label;
  std::optional<double> delta;  // this dataset's own shift; empty = unbounded
  double unified_mean;          // shifted mean at the shared delta_min
  double own_mean;              // extended mean at the dataset's own shift
  bool trivial_case;
};

/// Several datasets summarized under one shared shift: the minimum of the
/// per-dataset shifts. Datasets whose own shift is unbounded satisfy the
/// relative-difference condition at any shift, so they impose no constraint
/// on the minimum.
struct ComparisonReport {
  Epsilon epsilon;
  std::optional<double> delta_min;  // empty only if every dataset is unbounded
  std::vector<ComparisonRow> per_dataset;
};

/// Throws NoConvergence tagged with the offending dataset's label.
ComparisonReport compare_datasets(const std::vector<LabeledDataset>& datasets,
                                  Epsilon eps, const SolverConfig& cfg = {});

/// Labels default to positional indices "0", "1", ...
ComparisonReport compare_datasets(const std::vector<Dataset>& datasets,
                                  Epsilon eps, const SolverConfig& cfg = {});

}  // namespace zgm
