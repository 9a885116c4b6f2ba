#pragma once

#include <stdexcept>
#include <string>

namespace flatperm {

/// Raised when an exact identity that must hold does not: a nonzero remainder
/// in an exact division, two algebraic routes that disagree, a cleared
/// denominator recurrence that fails.
class IdentityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed the configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, int requested, int cap, const std::string& label = "n")
      : std::runtime_error(what + ": " + label + "=" + std::to_string(requested) +
                           " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  int requested() const { return requested_; }
  int cap() const { return cap_; }

 private:
  int requested_;
  int cap_;
};

/// Input outside an operation's domain (e.g. a bijection applied to a
/// permutation that does not avoid the required pattern).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace flatperm
