#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gpnef {

// Error taxonomy, mirrored by the CLI exit-code contract:
// ConfigError/UsageError -> 2, PreconditionError -> 1, CapError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid construction data: unknown family, rank out of range, bad node set.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Well-formed objects used incorrectly: ambient mismatch, unknown ids,
// malformed bundle expressions, out-of-range exponents.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A mathematical hypothesis of the requested computation fails to hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Instance refused: the fixed-point count exceeds the enumeration cap.
class CapError : public Error {
 public:
  CapError(const std::string& msg, std::string order)
      : Error(msg), order_(std::move(order)) {}

  // Exact decimal value of |W/W_P| that triggered the refusal.
  const std::string& coset_order() const { return order_; }

 private:
  std::string order_;
};

}  // namespace gpnef
