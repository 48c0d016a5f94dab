#include "zgm/compare.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "zgm/errors.hpp"

namespace zgm {

ComparisonReport compare_datasets(const std::vector<LabeledDataset>& datasets,
                                  Epsilon eps, const SolverConfig& cfg) {
  if (datasets.empty()) {
    throw EmptyInput("need at least one dataset to compare");
  }
  ComparisonReport report{eps, std::nullopt, {}};
  report.per_dataset.reserve(datasets.size());

  std::vector<ExtendedMeanResult> own;
  own.reserve(datasets.size());
  for (const auto& [label, data] : datasets) {
    try {
      own.push_back(extended_geometric_mean(data, eps, cfg));
    } catch (const NoConvergence& e) {
      throw NoConvergence("dataset '" + label + "': " + e.what());
    }
  }

  // Unbounded datasets meet the condition at any shift, so only the finite
  // shifts constrain the shared minimum.
  for (const auto& r : own) {
    if (r.delta && (!report.delta_min || *r.delta < *report.delta_min)) {
      report.delta_min = *r.delta;
    }
  }

  for (std::size_t i = 0; i < datasets.size(); ++i) {
    const auto& r = own[i];
    double unified = report.delta_min
                         ? shifted_geometric_mean(datasets[i].data, *report.delta_min)
                         : r.mean;
    report.per_dataset.push_back(
        {datasets[i].label, r.delta, unified, r.mean, r.trivial_case});
  }
  return report;
}

ComparisonReport compare_datasets(const std::vector<Dataset>& datasets,
                                  Epsilon eps, const SolverConfig& cfg) {
  std::vector<LabeledDataset> labeled;
  labeled.reserve(datasets.size());
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    labeled.push_back({std::to_string(i), datasets[i]});
  }
  return compare_datasets(labeled, eps, cfg);
}

}  // namespace zgm
