#ifndef RRCOMB_ERRORS_HPP
#define RRCOMB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rrcomb {

// Malformed input value (non-monotone parts, decomposition that does not fit).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what, std::ptrdiff_t index = -1)
      : std::invalid_argument(what), index_(index) {}

  // Offending position, or -1 when the error is not tied to one entry.
  std::ptrdiff_t index() const noexcept { return index_; }

 private:
  std::ptrdiff_t index_;
};

// Input outside the domain of a map or statistic (e.g. phi on a
// Rogers-Ramanujan partition, psi with an unsupported (m, r)).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested work exceeds a configured bound.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A consistency assertion failed; indicates a bug, never a bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rrcomb

#endif  // RRCOMB_ERRORS_HPP
