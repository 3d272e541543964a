#pragma once

#include <stdexcept>
#include <string>

namespace ptlab {

// Argument/validation problems throw std::invalid_argument. The two classes
// below distinguish failures that are not the caller's fault.

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ptlab
