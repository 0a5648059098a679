// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace tl {

/// Error for invalid inputs and violated mathematical preconditions.
/// The CLI maps this to exit code 1 with a one-line diagnostic.
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Error for internal invariant violations (never expected on valid inputs).
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Exact signed arithmetic that refuses to wrap: all coefficient math in this
/// library goes through these so results are exact or an error, never silently
/// truncated.
inline long long add_checked(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw domain_error("integer overflow in exact arithmetic");
  return r;
}

inline long long sub_checked(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r))
    throw domain_error("integer overflow in exact arithmetic");
  return r;
}

inline long long mul_checked(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw domain_error("integer overflow in exact arithmetic");
  return r;
}

}  // namespace tl
