#pragma once

#include <stdexcept>
#include <string>

namespace btx {

// A value lies outside the domain of an operation: division by zero,
// a pole of a sequence family, a series without the required constant term.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Malformed input from the user: bad grid, unknown identity id, unparsable
// sequence spec. Kept apart from DomainError so the CLI can map it to exit 2.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace btx
