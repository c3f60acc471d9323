#pragma once

#include <stdexcept>
#include <string>

namespace dblock {

// Invalid parameters or arguments (n < 3, unknown labels, malformed input).
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force operation was asked to run on a group larger than its cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data is inconsistent with the algebraic constraints it must satisfy.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A result that the theory guarantees did not materialize.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dblock

namespace dblock {

// Cyclotomic level above the configured bound.
class LevelOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace dblock
