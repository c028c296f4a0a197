#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "ultrauniform/validation.hpp"

namespace ultrauniform {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live on carriers of different size.
class CarrierMismatch : public Error {
 public:
  CarrierMismatch(std::size_t a, std::size_t b)
      : Error("carrier mismatch: " + std::to_string(a) + " vs " + std::to_string(b) + " points") {}
};

/// A value violates its structural invariants (bad index, empty block, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operation was called on input that fails its precondition. When the
/// precondition is an axiom check the failing report is attached.
class PreconditionFailed : public Error {
 public:
  explicit PreconditionFailed(const std::string& what, ValidationReport report = {})
      : Error(what), report_(std::move(report)) {}

  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

inline void require_same_carrier(std::size_t a, std::size_t b) {
  if (a != b) throw CarrierMismatch(a, b);
}

}  // namespace ultrauniform
