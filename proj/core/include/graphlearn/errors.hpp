#pragma once

#include <stdexcept>
#include <string>

namespace graphlearn {

/// Malformed or inconsistent input data (non-finite signals, dimension
/// mismatch between files, ...). Argument errors on plain parameters use
/// std::invalid_argument instead.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The solver produced non-finite or out-of-domain iterates. Carries the
/// iteration at which the failure was detected.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, int iteration)
      : std::runtime_error(what + " (iteration " + std::to_string(iteration) + ")"),
        iteration_(iteration) {}

  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

}  // namespace graphlearn
