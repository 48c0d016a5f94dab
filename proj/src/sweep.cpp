#include "zgm/sweep.hpp"

#include <algorithm>

#include "zgm/errors.hpp"
#include "zgm/stats.hpp"

namespace zgm {

SweepTable sweep_zeros(const Dataset& d, const std::vector<Epsilon>& epsilons,
                       std::size_t max_zeros, std::size_t step,
                       const SolverConfig& cfg) {
  if (epsilons.empty()) {
    throw EmptyInput("need at least one epsilon");
  }
  if (step < 1) {
    throw Error("step must be >= 1");
  }
  SplitView base = split(d);
  if (base.positives.empty()) {
    throw EmptyInput("sweep needs at least one positive value");
  }

  SweepTable table;
  table.epsilons = epsilons;
  // The shift depends only on the positive subset, which appending zeros
  // never changes; solve once per epsilon.
  const bool positives_equal =
      *std::min_element(base.positives.begin(), base.positives.end()) ==
      *std::max_element(base.positives.begin(), base.positives.end());
  for (Epsilon eps : epsilons) {
    if (positives_equal) {
      table.delta.push_back(std::nullopt);
    } else {
      DeltaSolution sol = solve_delta(base.positives, eps, cfg);
      table.delta.push_back(sol.delta);
    }
  }

  std::vector<std::size_t> counts;
  for (std::size_t k = 0;; k += step) {
    if (k >= max_zeros) {
      counts.push_back(max_zeros);
      break;
    }
    counts.push_back(k);
  }

  std::vector<double> values = d.values();
  values.reserve(d.size() + max_zeros);
  table.rows.reserve(counts.size());
  for (std::size_t k : counts) {
    values.insert(values.end(), k - (values.size() - d.size()), 0.0);
    SweepRow row;
    row.zeros_added = k;
    row.habib = habib_mean(SplitView{base.positives, base.zero_count + k});
    row.plus_one = shifted_geometric_mean(values, 1.0);

    bool row_all_equal =
        *std::min_element(values.begin(), values.end()) ==
        *std::max_element(values.begin(), values.end());
    for (std::size_t e = 0; e < epsilons.size(); ++e) {
      double mean;
      if (table.delta[e]) {
        mean = shifted_geometric_mean(values, *table.delta[e]);
      } else if (row_all_equal) {
        mean = values.front();
      } else {
        mean = arithmetic_mean(values);
      }
      row.extended.push_back(mean);
    }
    if (table.delta[0] && !row_all_equal) {
      row.gsd_extended =
          modified_gsd(values, *table.delta[0], row.extended[0]);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace zgm
