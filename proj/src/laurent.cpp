// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
#include "tl/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace tl {

namespace {

// Appends one monomial c*x^e to `out`, with `lead` telling whether this is the
// first term (controls how the sign is rendered).
void append_term(std::ostringstream& out, long long c, long long e, char var,
                 bool lead) {
  if (c < 0) {
    out << '-';
  } else if (!lead) {
    out << '+';
  }
  const unsigned long long mag =
      c < 0 ? 0ULL - static_cast<unsigned long long>(c)
            : static_cast<unsigned long long>(c);
  if (e == 0) {
    out << mag;
  } else {
    if (mag != 1) out << mag;
    out << var;
    if (e != 1) out << '^' << e;
  }
}

}  // namespace

std::string LaurentInt::format(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool lead = true;
  // Decreasing exponents read most naturally: 2d^2-1, q+q^-1, ...
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    append_term(out, it->second, it->first, var, lead);
    lead = false;
  }
  return out.str();
}

std::string LaurentInt::format_coeff(char var) const {
  if (coeffs_.empty()) return "0";
  if (coeffs_.size() == 1 && coeffs_.begin()->first == 0) {
    std::ostringstream out;
    out << coeffs_.begin()->second;
    return out.str();
  }
  return "(" + format(var) + ")";
}

LaurentInt LaurentInt::parse(const std::string& text, char var) {
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  const auto fail = [&](const std::string& why) -> void {
    throw domain_error("bad coefficient '" + text + "' at position " +
                       std::to_string(pos + 1) + ": " + why);
  };

  skip_ws();
  bool parenthesized = false;
  if (pos < text.size() && text[pos] == '(') {
    parenthesized = true;
    ++pos;
  }

  const auto parse_int = [&]() -> long long {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == digits) fail("expected an integer");
    errno = 0;
    long long v = std::strtoll(text.substr(start, pos - start).c_str(), nullptr, 10);
    if (errno != 0) fail("integer out of range");
    return v;
  };

  LaurentInt result;
  bool first = true;
  for (;;) {
    skip_ws();
    if (pos >= text.size()) {
      if (first) fail("empty coefficient");
      break;
    }
    if (text[pos] == ')') break;

    long long sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }

    long long c = 1;
    bool saw_number = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      c = parse_int();
      saw_number = true;
    }
    long long e = 0;
    skip_ws();
    if (pos < text.size() && text[pos] == var) {
      ++pos;
      e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        e = parse_int();
      }
    } else if (!saw_number) {
      fail(std::string("expected a number or '") + var + "'");
    }
    result += LaurentInt::monomial(mul_checked(sign, c), e);
    first = false;
  }

  if (parenthesized) {
    skip_ws();
    if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
    ++pos;
  }
  skip_ws();
  if (pos != text.size()) fail("trailing characters");
  return result;
}

}  // namespace tl
