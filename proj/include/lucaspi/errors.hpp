#pragma once

#include <stdexcept>
#include <string>

namespace lucaspi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precision or other run configuration outside the supported range.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// Operation called outside its parameter domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Internal invariant violated during a computation.
class ComputationError : public Error {
 public:
  using Error::Error;
};

}  // namespace lucaspi
