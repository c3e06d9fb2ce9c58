#pragma once

#include <stdexcept>
#include <string>

namespace emtrec {

/// Invalid input data: bad material constants, malformed descriptors or files.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation requested outside the domain where a formula is valid.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical step failed: singular system, inversion impossible for the data.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace emtrec
