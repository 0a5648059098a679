// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tl/category.hpp"
#include "tl/laurent.hpp"

namespace tl {

/// An orientation frame: one symbol per strand.  The oriented algebra on n
/// strands with k up-strands uses frames with exactly k vees.
using Frame = std::vector<Sym>;

/// All length-n frames with exactly k vees, in lexicographic order with
/// v < ^.
std::vector<Frame> frames_with(int n, int k);

/// Number of (wedge, vee) inversions: pairs a < b with w[a] = ^ and
/// w[b] = v.  This grades the frames; an admissible swap changes it by 1.
int inversions(const Frame& w);

/// Whether strands i, i+1 (1-based) carry opposite symbols.
bool admissible(const Frame& w, int i);

/// The frame with strands i, i+1 exchanged; requires admissibility.
Frame swapped(const Frame& w, int i);

/// A seamed word: frames alternating with generators,
/// 1_f0 e_(g1) 1_f1 ... e_(gr) 1_fr.  Idempotents are the r = 0 case.
struct OrientedWord {
  std::vector<Frame> frames;  // gens.size() + 1 of them
  std::vector<int> gens;

  friend bool operator==(const OrientedWord& a, const OrientedWord& b) {
    return a.frames == b.frames && a.gens == b.gens;
  }
  friend bool operator!=(const OrientedWord& a, const OrientedWord& b) {
    return !(a == b);
  }
  friend bool operator<(const OrientedWord& a, const OrientedWord& b) {
    if (a.gens != b.gens) return a.gens < b.gens;
    return a.frames < b.frames;
  }
};

OrientedWord idempotent(Frame f);

/// A Z[q, q^-1]-linear combination of seamed words (zero coefficients never
/// stored; the empty map is zero).
using OrientedComb = std::map<OrientedWord, LaurentInt>;

/// One ground rewrite rule on seamed words.
struct ORule {
  std::string id;
  OrientedWord lhs;
  bool to_zero = false;
  OrientedWord rhs;      // unused when to_zero
  long long qshift = 0;  // lhs rewrites to q^qshift * rhs
};

struct ORuleSystem {
  int n = 0;
  int k = 0;
  BubbleConvention conv = BubbleConvention::positive;
  std::vector<ORule> rules;
};

/// The ground rewriting system for n strands, k vees: annihilation of
/// malformed factors, squares (with the q^(+-1) bubble exponent read off the
/// frame), seamed braid moves, seamed distant commutation, and the two
/// seamed ladder families.  Every instantiated rule is verified against the
/// categorical evaluation during construction; an unsound instance aborts.
ORuleSystem oriented_rules(int n, int k,
                           BubbleConvention conv = BubbleConvention::positive);

/// Evaluate a seamed word through the oriented category: each factor
/// 1_f e_i 1_g becomes an oriented cap over a cup.  nullopt means the word
/// is zero (some factor is malformed).  The scalar exponent rides in the
/// net.
std::optional<ONet> oriented_eval(const OrientedWord& w,
                                  BubbleConvention conv = BubbleConvention::positive);

/// Structural product: concatenate when the junction frames agree, vanish
/// otherwise; bilinear on combinations.  The result is not normalized.
std::optional<OrientedWord> concat(const OrientedWord& a,
                                   const OrientedWord& b);
OrientedComb mul(const OrientedComb& a, const OrientedComb& b);

struct OrientedTraceStep {
  std::size_t rule_index = 0;
  std::size_t pos = 0;  // 0-based generator position of the redex
  OrientedWord before;
  bool vanished = false;
  OrientedWord after;  // unused when vanished
  long long qshift = 0;
};

/// Leftmost-redex normalization (ties broken by rule order), applied to each
/// monomial, accumulating q-shifts into the coefficients.
OrientedComb normalize_oriented(const ORuleSystem& sys, const OrientedComb& c,
                                std::vector<OrientedTraceStep>* trace = nullptr,
                                std::size_t max_steps = 1000000);

/// Dimension of the sector from frame `bottom` to frame `top`: the number of
/// rule-free seamed words with those end frames, enumerated by depth-first
/// extension.  Throws if the search exceeds the n(n-1)/2 generator bound.
long long sector_dimension(const ORuleSystem& sys, const Frame& bottom,
                           const Frame& top);

// --- text forms ----------------------------------------------------------

/// "v^v^"
std::string format_frame(const Frame& f);
/// Validates length n and vee count k (pass k = -1 to skip the count check).
Frame parse_frame(const std::string& text, int n, int k);

/// "1[v^] e1 1[^v]"
std::string format_oriented_word(const OrientedWord& w);

/// "(q) * 1[v^] e1 1[v^] + 1 * 1[v^]"; zero renders as "0".
std::string format_oriented_comb(const OrientedComb& c);

/// TERM ('+' TERM)*, TERM = [COEFF '*'] FACTOR+, FACTOR = "1[FRAME]" or
/// "e<INT>".  Generators must be flanked by idempotents; adjacent
/// idempotents contract (vanishing unless equal).
OrientedComb parse_oriented_expr(const std::string& text, int n, int k);

}  // namespace tl
