#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asispanel {

// Data-shaped problems: unreadable files, malformed CSV cells, panel
// structure violations. The CLI maps these to exit code 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : DataError {
  using DataError::DataError;
};

struct ParseError : DataError {
  ParseError(std::size_t row_number, const std::string& message)
      : DataError("row " + std::to_string(row_number) + ": " + message),
        row(row_number) {}
  std::size_t row;
};

struct DuplicateCell : DataError {
  using DataError::DataError;
};

struct UnbalancedPanel : DataError {
  using DataError::DataError;
};

// Numerical problems: invalid parameter domains, dimension mismatches,
// degenerate inputs. The CLI maps these to exit code 3.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : NumericError {
  using NumericError::NumericError;
};

struct DimensionError : NumericError {
  using NumericError::NumericError;
};

struct CollinearCovariates : NumericError {
  using NumericError::NumericError;
};

struct ConstantChain : NumericError {
  using NumericError::NumericError;
};

struct ChainTooShort : NumericError {
  using NumericError::NumericError;
};

// Wraps a worker failure with the experiment configuration that produced it.
struct ExperimentError : NumericError {
  using NumericError::NumericError;
};

}  // namespace asispanel
