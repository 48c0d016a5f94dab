#include "zgm/cli.hpp"

#include <cstdio>

#include "zgm/compare.hpp"
#include "zgm/csv.hpp"
#include "zgm/errors.hpp"
#include "zgm/report.hpp"
#include "zgm/sweep.hpp"

namespace zgm {
namespace {

std::vector<Epsilon> make_epsilons(const std::vector<double>& raw) {
  std::vector<Epsilon> eps;
  eps.reserve(raw.size());
  for (double e : raw) {
    eps.emplace_back(e);
  }
  return eps;
}

void require_inputs(const RunConfig& cfg, std::size_t n) {
  if (cfg.inputs.size() < n) {
    throw EmptyInput("expected at least " + std::to_string(n) +
                     " input file(s), got " + std::to_string(cfg.inputs.size()));
  }
}

}  // namespace

void run_compute(const RunConfig& cfg, std::ostream& out) {
  require_inputs(cfg, 1);
  Dataset d = read_dataset(cfg.inputs.front(), cfg.column);
  ComputeReport r = compute_report(d, make_epsilons(cfg.epsilons));
  out << (cfg.format == OutputFormat::json ? to_json(r) : to_tsv(r));
}

void run_sweep_zeros(const RunConfig& cfg, std::ostream& out) {
  require_inputs(cfg, 1);
  Dataset d = read_dataset(cfg.inputs.front(), cfg.column);
  SweepTable t =
      sweep_zeros(d, make_epsilons(cfg.epsilons), cfg.max_zeros, cfg.step);
  out << (cfg.format == OutputFormat::json ? to_json(t) : to_tsv(t));
}

void run_compare(const RunConfig& cfg, std::ostream& out) {
  require_inputs(cfg, 1);
  if (cfg.epsilons.size() != 1) {
    throw Error("compare takes exactly one epsilon");
  }
  std::vector<LabeledDataset> sets;
  sets.reserve(cfg.inputs.size());
  for (const auto& path : cfg.inputs) {
    sets.push_back({path.filename().string(), read_dataset(path, cfg.column)});
  }
  ComparisonReport r = compare_datasets(sets, Epsilon(cfg.epsilons.front()));
  out << (cfg.format == OutputFormat::json ? to_json(r) : to_tsv(r));
}

void run_gen_fixture(const FixtureSpec& spec, std::ostream& out) {
  std::vector<double> values = lognormal_fixture(spec);
  char buf[40];
  for (double v : values) {
    // Full round-trip precision so the fixture survives a CSV round trip.
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf << "\n";
  }
}

}  // namespace zgm
