#ifndef SWCURV_ERRORS_HPP
#define SWCURV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace swcurv {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

struct JacobiError : std::runtime_error {
  explicit JacobiError(const std::string& m) : std::runtime_error(m) {}
};

struct DegenerateMetricError : std::runtime_error {
  explicit DegenerateMetricError(const std::string& m) : std::runtime_error(m) {}
};

struct BadParamError : std::runtime_error {
  explicit BadParamError(const std::string& m) : std::runtime_error(m) {}
};

struct UnsupportedTypeError : std::runtime_error {
  explicit UnsupportedTypeError(const std::string& m) : std::runtime_error(m) {}
};

struct BudgetExhaustedError : std::runtime_error {
  explicit BudgetExhaustedError(const std::string& m) : std::runtime_error(m) {}
};

// Two eigenvalue clusters sit between tol and 10*tol apart: refuse to guess.
struct IndeterminateError : std::runtime_error {
  explicit IndeterminateError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace swcurv

#endif
