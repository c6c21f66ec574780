#pragma once

#include <stdexcept>
#include <string>

namespace qev {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad documents, inconsistent frames, invalid masses.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A pipeline stage could not produce a result.
class PipelineError : public Error {
 public:
  using Error::Error;
};

/// |1 - K| fell below the conflict tolerance during combination.
class TotalConflictError : public PipelineError {
 public:
  TotalConflictError(const std::string& msg, int step) : PipelineError(msg), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

/// All off-diagonal entries of a matrix were zero; normalization is undefined.
class DegenerateMatrixError : public PipelineError {
 public:
  using PipelineError::PipelineError;
};

}  // namespace qev
