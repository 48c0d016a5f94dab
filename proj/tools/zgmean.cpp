// zgmean — geometric-mean statistics for datasets that may contain zeros.
//
// Subcommands:
//   compute      one-shot summary of a dataset (all estimators, delta, GSD)
//   sweep-zeros  estimator table as zeros are appended to a dataset
//   compare      shared-delta comparison of several datasets
//   gen-fixture  seeded zero-inflated log-normal sample, one value per line
//
// Exit codes: 0 success, 1 input/validation error, 2 solver non-convergence.
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zgm/cli.hpp"
#include "zgm/errors.hpp"

namespace {

void add_common(CLI::App* cmd, zgm::RunConfig& cfg, std::string& column,
                std::string& format) {
  cmd->add_option("--column", column,
                  "CSV column to read (header name or 0-based index)");
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  cmd->add_option("file", cfg.inputs, "input file (one value per line or CSV)")
      ->expected(1)
      ->required();
}

void finish_config(zgm::RunConfig& cfg, const std::vector<double>& epsilons,
                   const std::string& column, const std::string& format) {
  if (!epsilons.empty()) {
    cfg.epsilons = epsilons;
  }
  if (!column.empty()) {
    cfg.column = column;
  }
  cfg.format =
      format == "json" ? zgm::OutputFormat::json : zgm::OutputFormat::tsv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric mean extension for datasets with zeros"};
  app.require_subcommand(1);

  zgm::RunConfig compute_cfg, sweep_cfg, compare_cfg;
  std::vector<double> compute_eps, sweep_eps;
  double compare_eps = 1e-5;
  std::string compute_col, sweep_col, compare_col;
  std::string compute_fmt = "tsv", sweep_fmt = "tsv", compare_fmt = "tsv";
  zgm::FixtureSpec fixture;

  CLI::App* compute = app.add_subcommand("compute", "summarize one dataset");
  compute->add_option("--epsilon", compute_eps,
                      "relative tolerance(s) in (0,1), repeatable");
  add_common(compute, compute_cfg, compute_col, compute_fmt);

  CLI::App* sweep =
      app.add_subcommand("sweep-zeros", "estimators vs. number of zeros added");
  sweep->add_option("--epsilon", sweep_eps,
                    "relative tolerance(s) in (0,1), repeatable");
  sweep->add_option("--max-zeros", sweep_cfg.max_zeros, "largest zero count")
      ->required();
  sweep->add_option("--step", sweep_cfg.step, "zero-count increment")
      ->capture_default_str();
  add_common(sweep, sweep_cfg, sweep_col, sweep_fmt);

  CLI::App* compare =
      app.add_subcommand("compare", "compare datasets at one shared delta");
  compare->add_option("--epsilon", compare_eps, "relative tolerance in (0,1)")
      ->capture_default_str();
  compare->add_option("--column", compare_col,
                      "CSV column to read (header name or 0-based index)");
  compare->add_option("--format", compare_fmt, "output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  compare->add_option("files", compare_cfg.inputs, "input files")
      ->expected(-1)
      ->required();

  CLI::App* gen = app.add_subcommand(
      "gen-fixture", "emit a seeded zero-inflated log-normal sample");
  gen->add_option("--n", fixture.positives, "number of positive values")
      ->required();
  gen->add_option("--mu", fixture.log_mean, "mean of log values")->required();
  gen->add_option("--sigma", fixture.log_sigma, "standard deviation of logs")
      ->required();
  gen->add_option("--zeros", fixture.zeros, "number of zeros to append")
      ->required();
  gen->add_option("--seed", fixture.seed, "RNG seed")->required();

  try {
    app.parse(argc, argv);
    if (*compute) {
      finish_config(compute_cfg, compute_eps, compute_col, compute_fmt);
      zgm::run_compute(compute_cfg, std::cout);
    } else if (*sweep) {
      finish_config(sweep_cfg, sweep_eps, sweep_col, sweep_fmt);
      zgm::run_sweep_zeros(sweep_cfg, std::cout);
    } else if (*compare) {
      finish_config(compare_cfg, {compare_eps}, compare_col, compare_fmt);
      zgm::run_compare(compare_cfg, std::cout);
    } else if (*gen) {
      zgm::run_gen_fixture(fixture, std::cout);
    }
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const zgm::NoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const zgm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
