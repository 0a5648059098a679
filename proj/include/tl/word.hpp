// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <string>
#include <vector>

#include "tl/diagram.hpp"
#include "tl/laurent.hpp"

namespace tl {

/// A letter of the presented algebra: 0 encodes the loop scalar "d", and
/// i >= 1 encodes the generator "e<i>".
using Letter = int;
inline constexpr Letter kDelta = 0;

/// A word in the free monoid on { d, e1, ..., e(n-1) }.
using Word = std::vector<Letter>;

/// A finite Z[d, d^-1]-linear combination of words.  The map never stores
/// zero coefficients.
using LinComb = std::map<Word, LaurentInt>;

/// "d e1 e2"; the empty word renders as "".
std::string format_word(const Word& w);

/// Parse whitespace-separated tokens "d" and "e<INT>"; generator indices are
/// validated against n (need 1 <= i <= n-1).
Word parse_word(const std::string& text, int n);

/// "2 * e1 e2 + (d^2-1) * e1"; monomials separated by top-level '+', each as
/// COEFF '*' WORD.  A bare integer or a parenthesized Laurent polynomial in
/// 'd' is accepted as COEFF.  Renders zero as "0".
std::string format_lincomb(const LinComb& c);
LinComb parse_lincomb(const std::string& text, int n);

/// Erase zero coefficients in place (the invariant all operations keep).
void prune_zeros(LinComb& c);

LinComb add(const LinComb& a, const LinComb& b);
LinComb scale(const LinComb& a, const LaurentInt& s);

/// Multiply by concatenation of words, bilinearly.
LinComb multiply(const LinComb& a, const LinComb& b);

/// Interpret a word as a product of hook diagrams: d contributes one loop
/// power, e_i the hook generator.  The empty word is the identity diagram.
ScaledDiagram evaluate(const Word& w, int n);

/// Evaluate a combination: collect delta powers into the coefficients, so the
/// result maps plain diagrams to Laurent polynomials in d.
std::map<Diagram, LaurentInt> evaluate(const LinComb& c, int n);

}  // namespace tl
