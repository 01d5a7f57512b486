#pragma once

#include <stdexcept>
#include <string>

namespace skeinlab {

/// Malformed user input (PD text, polynomial JSON, fixture files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed a configured resource cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold (e.g. degree of zero).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A checked identity failed during verification.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant was breached. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace skeinlab
