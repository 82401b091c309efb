#pragma once

#include <stdexcept>
#include <string>

namespace swc {

// Caller broke a documented precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal consistency check failed; `property` names what broke.
class InvariantViolation : public std::runtime_error {
 public:
  InvariantViolation(std::string property, const std::string& detail)
      : std::runtime_error(property + ": " + detail), property_(std::move(property)) {}
  const std::string& property() const noexcept { return property_; }

 private:
  std::string property_;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const char* msg) {
  if (!cond) throw ContractError(msg);
}

inline void ensure(bool cond, const char* property, const std::string& detail = {}) {
  if (!cond) throw InvariantViolation(property, detail);
}

}  // namespace swc
