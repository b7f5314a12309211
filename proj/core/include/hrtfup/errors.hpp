#pragma once

#include <stdexcept>
#include <string>

namespace hrtfup {

// Error taxonomy mirrored by the CLI exit codes: I/O = 2, validation = 3,
// numeric = 4.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hrtfup
