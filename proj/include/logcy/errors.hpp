#pragma once

#include <stdexcept>
#include <string>

namespace logcy {

/// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is well formed but describes a structure the library does not model
/// (e.g. a disconnected stratum handed to the simplicial dual complex).
/// The CLI maps this to exit code 3.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace logcy
