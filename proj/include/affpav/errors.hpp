#ifndef AFFPAV_ERRORS_HPP
#define AFFPAV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace affpav {

// Bad input from a caller or the command line; CLI exit code 1.
class UserError : public std::runtime_error {
 public:
  explicit UserError(const std::string& msg) : std::runtime_error(msg) {}
};

// A verified internal identity failed (inexact division, non-constant
// double-coset coefficients, route disagreement); CLI exit code 2.
class InternalCheckError : public std::logic_error {
 public:
  explicit InternalCheckError(const std::string& msg) : std::logic_error(msg) {}
};

// A bounded enumeration exceeded its cap (e.g. W_P closure not finite).
class CapExceeded : public UserError {
 public:
  explicit CapExceeded(const std::string& msg) : UserError(msg) {}
};

}  // namespace affpav

#endif
