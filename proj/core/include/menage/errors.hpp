#pragma once

#include <stdexcept>
#include <string>

namespace menage {

// Raised when a request is outside the domain the tool can answer
// (no family blocks to build on, oracle cap or enumeration ceiling hit).
// Malformed inputs raise std::invalid_argument instead.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace menage
