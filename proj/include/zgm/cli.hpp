#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zgm/fixture.hpp"

namespace zgm {

enum class OutputFormat { tsv, json };

/// Options shared by the CLI commands. Epsilons default to {1e-5}.
struct RunConfig {
  std::vector<double> epsilons = {1e-5};
  std::vector<std::filesystem::path> inputs;
  std::optional<std::string> column;
  OutputFormat format = OutputFormat::tsv;
  std::size_t max_zeros = 0;
  std::size_t step = 1;
};

// Command bodies. They write the report to `out` and throw zgm errors on
// failure; exit-code mapping lives in the binary.
void run_compute(const RunConfig& cfg, std::ostream& out);
void run_sweep_zeros(const RunConfig& cfg, std::ostream& out);
void run_compare(const RunConfig& cfg, std::ostream& out);
void run_gen_fixture(const FixtureSpec& spec, std::ostream& out);

}  // namespace zgm
