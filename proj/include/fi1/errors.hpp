#pragma once

#include <stdexcept>
#include <cstdint>
#include <string>

namespace fi1 {

// Raised when an argument violates an operation's precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when checked 64-bit arithmetic would overflow.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw RangeError("integer overflow in addition");
  }
  return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) {
    throw RangeError("integer overflow in subtraction");
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw RangeError("integer overflow in multiplication");
  }
  return r;
}

}  // namespace detail
}  // namespace fi1
