#include "zgm/csv.hpp"

#include <charconv>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "zgm/errors.hpp"

namespace zgm {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_double(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') {
    token.remove_prefix(1);  // from_chars rejects an explicit plus
  }
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && !token.empty();
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

void check_value(double v, std::size_t line) {
  if (!std::isfinite(v)) {
    throw NonFiniteValue("line " + std::to_string(line) + ": value is not finite");
  }
  if (v < 0.0) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    throw NegativeValue("line " + std::to_string(line) + ": negative value " +
                        buf + "; only nonnegative data is supported");
  }
}

}  // namespace

Dataset read_dataset(const std::filesystem::path& path,
                     const std::optional<std::string>& column) {
  std::ifstream in(path);
  if (!in) {
    throw FileNotFound("cannot open '" + path.string() + "'");
  }

  std::vector<double> values;
  std::string raw;
  std::size_t line_no = 0;
  std::size_t col_index = 0;
  bool header_seen = false;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) {
      continue;
    }

    if (column) {
      auto fields = split_fields(line);
      if (!header_seen) {
        header_seen = true;
        bool found = false;
        for (std::size_t i = 0; i < fields.size(); ++i) {
          if (fields[i] == *column) {
            col_index = i;
            found = true;
            break;
          }
        }
        if (!found) {
          // Fall back to a 0-based index.
          std::size_t idx = 0;
          auto [ptr, ec] = std::from_chars(column->data(),
                                           column->data() + column->size(), idx);
          if (ec == std::errc() && ptr == column->data() + column->size() &&
              idx < fields.size()) {
            col_index = idx;
          } else {
            throw ParseError(line_no, "column '" + *column +
                                          "' not found in header '" +
                                          std::string(line) + "'");
          }
        }
        continue;  // header row carries no data
      }
      if (col_index >= fields.size()) {
        throw ParseError(line_no, "row has " + std::to_string(fields.size()) +
                                      " field(s), column index " +
                                      std::to_string(col_index) + " is out of range");
      }
      double v = 0.0;
      if (!parse_double(fields[col_index], v)) {
        throw ParseError(line_no, "'" + std::string(fields[col_index]) +
                                      "' is not a number");
      }
      check_value(v, line_no);
      values.push_back(v);
      continue;
    }

    double v = 0.0;
    if (parse_double(line, v)) {
      check_value(v, line_no);
      values.push_back(v);
      continue;
    }
    if (values.empty() && !header_seen &&
        line.find(',') == std::string_view::npos) {
      // Single-column file with a header row.
      header_seen = true;
      continue;
    }
    if (line.find(',') != std::string_view::npos) {
      throw ParseError(line_no, "'" + std::string(line) +
                                    "' is not a number (use --column to select "
                                    "a CSV column)");
    }
    throw ParseError(line_no, "'" + std::string(line) + "' is not a number");
  }

  if (values.empty()) {
    throw EmptyInput("no values in '" + path.string() + "'");
  }
  return Dataset(std::move(values));
}

}  // namespace zgm
