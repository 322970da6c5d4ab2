#pragma once

#include <stdexcept>
#include <string>

namespace dqd {

// Invalid input: out-of-range parameter, bad bracket, non-finite entry.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation that could not produce a result for valid-looking input
// (non-convergence, indefinite matrix, no root in bracket).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dqd
