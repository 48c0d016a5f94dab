#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zgm {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dataset or value sequence was empty where at least one value is required.
class EmptyInput : public Error {
 public:
  using Error::Error;
};

/// A value was negative; the methods here are defined on nonnegative data only.
class NegativeValue : public Error {
 public:
  using Error::Error;
};

/// A value was NaN or infinite.
class NonFiniteValue : public Error {
 public:
  using Error::Error;
};

/// A value was zero or negative where strict positivity is required.
class NonPositiveValue : public Error {
 public:
  using Error::Error;
};

/// The shift supremum does not exist for this dataset/epsilon combination,
/// and the requested quantity is undefined without a finite shift.
class UnboundedDelta : public Error {
 public:
  using Error::Error;
};

/// All values of the dataset are equal; the modified spread measure needs a
/// shift that is never solved for in this case.
class DegenerateDataset : public Error {
 public:
  using Error::Error;
};

/// The bisection bracket failed to shrink below tolerance within the
/// iteration budget. Indicates pathological input.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

class FileNotFound : public Error {
 public:
  using Error::Error;
};

/// A malformed token or row in an input file. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace zgm
