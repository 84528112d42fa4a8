#pragma once

#include <stdexcept>
#include <string>

namespace laysem {

// All recoverable failures carry a short machine-checkable kind
// ("IdealTooSmall", "ZeroSeries", ...) plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void raise(const std::string& kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace laysem
