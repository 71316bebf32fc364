#pragma once

#include <stdexcept>
#include <string>

namespace lgmf {

// Arithmetic between values over different base fields.
class FieldMismatch : public std::invalid_argument {
 public:
  explicit FieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Arithmetic between polynomials living in different rings (n or field).
class RingMismatch : public std::invalid_argument {
 public:
  explicit RingMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// An argument outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Malformed text or JSON input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Fan data violating a structural requirement.
class FanError : public std::runtime_error {
 public:
  explicit FanError(const std::string& what) : std::runtime_error(what) {}
};

// An identity that must hold by construction failed to verify.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lgmf
