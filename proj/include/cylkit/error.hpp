#pragma once

// Error types shared by every cylkit module, plus checked integer helpers.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cylkit {

using Int = std::int64_t;

/// Base class of everything cylkit throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An input exceeds a configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic left the range of Int.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw InternalError(message);
}

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

/// Floor division for a positive divisor.
constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

/// Non-negative remainder for a positive modulus.
constexpr Int mod(Int a, Int b) {
  Int r = a % b;
  return r < 0 ? r + b : r;
}

}  // namespace cylkit
