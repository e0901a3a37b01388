#pragma once

#include <stdexcept>
#include <string>

namespace hypershadow {

// Argument outside the mathematical domain of an operation (including
// non-finite input). The CLI maps this to exit code 2.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A numerical routine failed to converge or a result is not representable.
// The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

void require_finite(double x, const char* where);

}  // namespace detail
}  // namespace hypershadow
