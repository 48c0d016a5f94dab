#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "zgm/dataset.hpp"

namespace zgm {

/// Reads a dataset from a text file: one real per line, or one column of a
/// comma-separated file with a single header row. Without a column selector
/// a lone non-numeric first line is treated as a single-column header.
/// Blank lines are skipped. The selector matches a header name first, then
/// falls back to a 0-based column index.
///
/// Throws FileNotFound, ParseError (with line number and offending token),
/// NegativeValue / NonFiniteValue (with line number), EmptyInput.
Dataset read_dataset(const std::filesystem::path& path,
                     const std::optional<std::string>& column = {});

}  // namespace zgm
