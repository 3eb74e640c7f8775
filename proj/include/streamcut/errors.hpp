#pragma once

#include <stdexcept>

namespace streamcut {

// Library code throws; the CLI maps each class to its process exit code.

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  static constexpr int exit_code = 2;
};

class StreamValidityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  static constexpr int exit_code = 3;
};

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  static constexpr int exit_code = 4;
};

}  // namespace streamcut
