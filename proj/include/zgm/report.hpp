#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zgm/compare.hpp"
#include "zgm/dataset.hpp"
#include "zgm/delta_solver.hpp"
#include "zgm/estimators.hpp"
#include "zgm/sweep.hpp"

namespace zgm {

/// Everything the compute command reports for one epsilon.
struct EpsilonBlock {
  double epsilon;
  std::optional<double> delta;
  double extended_mean;
  bool unbounded;
  bool trivial_case;
  std::optional<double> extended_gsd;  // empty when unbounded or degenerate
};

/// Aggregated summary of one dataset: the classical statistics, the three
/// zero-handling baselines and the extension at each requested epsilon.
struct ComputeReport {
  std::size_t count = 0;
  std::size_t zero_count = 0;
  bool all_equal = false;
  double arithmetic_mean = 0.0;
  double geometric_mean = 0.0;  // 0 by definition when zeros are present
  std::optional<double> geometric_mean_positive;
  std::optional<double> geometric_sd_positive;
  std::optional<double> epsilon_threshold;  // (A-G)/G of the positives
  double habib_mean = 0.0;
  double plus_one_mean = 0.0;
  std::vector<EpsilonBlock> blocks;
};

ComputeReport compute_report(const Dataset& d,
                             const std::vector<Epsilon>& epsilons,
                             const SolverConfig& cfg = {});

/// %.12g formatting used for every number the CLI prints.
std::string format_sig(double v);

/// Epsilon rendered the same way everywhere (column labels, JSON keys).
std::string epsilon_label(double eps);

// Serializers. TSV is the human-readable default; JSON carries the same
// fields with explicit null + flag encoding for undefined values. Both are
// deterministic: identical input produces byte-identical output.
std::string to_tsv(const ComputeReport& r);
std::string to_json(const ComputeReport& r);
std::string to_tsv(const SweepTable& t);
std::string to_json(const SweepTable& t);
std::string to_tsv(const ComparisonReport& r);
std::string to_json(const ComparisonReport& r);

}  // namespace zgm
