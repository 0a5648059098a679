// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <string>

#include "tl/common.hpp"

namespace tl {

/// Exact integer Laurent polynomial in one indeterminate.
///
/// Coefficients are overflow-checked 64-bit integers; exponents may be
/// negative.  The indeterminate is anonymous: the same type serves for the
/// loop parameter (rendered as "d") and for the quantum parameter (rendered
/// as "q").  Zero coefficients are never stored, so equality of the
/// coefficient maps is equality of polynomials.
class LaurentInt {
public:
  LaurentInt() = default;

  static LaurentInt constant(long long c) {
    LaurentInt p;
    if (c != 0) p.coeffs_[0] = c;
    return p;
  }

  /// c * x^e
  static LaurentInt monomial(long long c, long long e) {
    LaurentInt p;
    if (c != 0) p.coeffs_[e] = c;
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second == 1;
  }

  /// The coefficient of x^e (zero if absent).
  long long coeff(long long e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? 0 : it->second;
  }

  const std::map<long long, long long>& terms() const { return coeffs_; }

  LaurentInt& operator+=(const LaurentInt& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  LaurentInt& operator-=(const LaurentInt& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, sub_checked(0, c));
    return *this;
  }

  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) {
    a += b;
    return a;
  }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) {
    a -= b;
    return a;
  }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
    LaurentInt r;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_)
        r.add_term(add_checked(ea, eb), mul_checked(ca, cb));
    return r;
  }
  LaurentInt& operator*=(const LaurentInt& o) { return *this = *this * o; }

  LaurentInt operator-() const {
    LaurentInt r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = sub_checked(0, c);
    return r;
  }

  /// Multiply by x^e.
  LaurentInt shifted(long long e) const {
    LaurentInt r;
    for (const auto& [ex, c] : coeffs_) r.coeffs_[add_checked(ex, e)] = c;
    return r;
  }

  friend bool operator==(const LaurentInt& a, const LaurentInt& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentInt& a, const LaurentInt& b) {
    return !(a == b);
  }
  friend bool operator<(const LaurentInt& a, const LaurentInt& b) {
    return a.coeffs_ < b.coeffs_;
  }

  /// Render with the given variable symbol, e.g. "2d^2-1" or "q^-1".
  /// Terms are listed by decreasing exponent.
  std::string format(char var) const;

  /// Render as a coefficient token: plain integers stay bare ("3", "-1");
  /// anything involving the variable is parenthesized ("(2d^2-1)").
  std::string format_coeff(char var) const;

  /// Parse what `format` produces (optionally parenthesized).
  static LaurentInt parse(const std::string& text, char var);

private:
  void add_term(long long e, long long c) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      if (c != 0) coeffs_[e] = c;
    } else {
      it->second = add_checked(it->second, c);
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  std::map<long long, long long> coeffs_;
};

}  // namespace tl
