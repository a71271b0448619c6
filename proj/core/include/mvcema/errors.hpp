#ifndef MVCEMA_ERRORS_HPP
#define MVCEMA_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mvcema {

// Three failure categories, mapped to distinct process exit codes by the CLI:
// validation -> 2, numerical -> 3, io -> 4.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
  using Error::Error;
};

class NumericalError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

class NonSymmetricError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class EmptyVectorError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class RankDeficientError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class DivergedError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

// Raised when the volume weight makes a G-row subproblem lose positive
// definiteness; the outer driver halves the weight for that iteration.
class IndefiniteQkError : public NumericalError {
public:
  IndefiniteQkError(int row, double min_eigenvalue)
      : NumericalError("G-row subproblem " + std::to_string(row) +
                       " is not positive definite (min eigenvalue " +
                       std::to_string(min_eigenvalue) + ")"),
        row_(row), min_eigenvalue_(min_eigenvalue) {}
  int row() const { return row_; }
  double min_eigenvalue() const { return min_eigenvalue_; }

private:
  int row_;
  double min_eigenvalue_;
};

class InitRankFailureError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class DegenerateInitVolumeError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class DegenerateSpecError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class InfeasibleFloorError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class ZeroRowError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// CSV parse failures carry 1-based line (and column where it applies).
class CsvError : public ValidationError {
public:
  CsvError(const std::string& what, std::size_t line, std::size_t column = 0)
      : ValidationError(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class MalformedCsvError : public CsvError {
public:
  using CsvError::CsvError;
};

class NegativeEntryError : public CsvError {
public:
  using CsvError::CsvError;
};

class RowSumOutOfToleranceError : public CsvError {
public:
  using CsvError::CsvError;
};

}  // namespace mvcema

#endif  // MVCEMA_ERRORS_HPP
