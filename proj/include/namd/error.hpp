#pragma once

#include <stdexcept>
#include <string>

namespace namd {

/// Error raised by every module. `kind` is a short machine-readable tag
/// ("invalid_argument", "shape", "schema", "non_finite", "manifest", "io",
/// "config") that the CLI forwards in its JSON error payload.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& message) {
  throw Error(std::move(kind), message);
}

inline void require(bool condition, const char* kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace namd
