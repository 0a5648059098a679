// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "tl/diagram.hpp"
#include "tl/word.hpp"

namespace tl {

/// Plain: objects are finite strands (only the count matters).  Oriented:
/// objects are words in the two strand orientations.
enum class Mode { plain, oriented };

/// Strand orientation symbols; rendered 'v' and '^'.
enum class Sym : unsigned char { vee, wedge };

inline Sym flipped(Sym s) { return s == Sym::vee ? Sym::wedge : Sym::vee; }

/// Sign of a closed loop: under `positive`, a loop whose closing cap reads
/// (v, ^) contributes exponent +1 and a (^, v) cap contributes -1; `negative`
/// swaps the two.  Plain loops always contribute +1.
enum class BubbleConvention { positive, negative };

/// An object of the strict monoidal category: a finite word of strand
/// symbols.  Plain objects use all-vee words, so only the length matters.
struct ObjectWord {
  Mode mode = Mode::plain;
  std::vector<Sym> syms;

  static ObjectWord plain(int size);
  static ObjectWord oriented(std::vector<Sym> syms);

  int size() const { return static_cast<int>(syms.size()); }

  friend bool operator==(const ObjectWord& a, const ObjectWord& b) {
    return a.mode == b.mode && a.syms == b.syms;
  }
  friend bool operator!=(const ObjectWord& a, const ObjectWord& b) {
    return !(a == b);
  }
  friend bool operator<(const ObjectWord& a, const ObjectWord& b) {
    if (a.mode != b.mode) return a.mode < b.mode;
    return a.syms < b.syms;
  }
};

enum class GenKind : unsigned char { cap, cup };

/// A generating arrow: cap joins two adjacent strands downward (domain has
/// the two symbols, codomain none), cup births them upward.  `first` and
/// `second` are the two symbols at the 2-strand end, read left to right:
///   cap(v,^) : v^ -> empty     cup(v,^) : empty -> v^
///   cap(^,v) : ^v -> empty     cup(^,v) : empty -> ^v
/// In plain mode both symbols are vee.
struct GenArrow {
  GenKind kind = GenKind::cap;
  Sym first = Sym::vee;
  Sym second = Sym::vee;

  friend bool operator==(const GenArrow& a, const GenArrow& b) {
    return a.kind == b.kind && a.first == b.first && a.second == b.second;
  }
  friend bool operator!=(const GenArrow& a, const GenArrow& b) {
    return !(a == b);
  }
};

/// One layer of a term: the generator acting at `left` (the number of
/// untouched strands to its left; everything to the right also passes
/// through).  A cap consumes boundary positions left+1, left+2 (1-based); a
/// cup inserts its strands there.
struct Slice {
  int left = 0;
  GenArrow gen;

  friend bool operator==(const Slice& a, const Slice& b) {
    return a.left == b.left && a.gen == b.gen;
  }
  friend bool operator!=(const Slice& a, const Slice& b) { return !(a == b); }
};

/// A term of the free strict monoidal category on caps and cups: a domain
/// object and a chain of slices.  Exchange of horizontally disjoint slices
/// is the structural congruence; terms are compared modulo it.
struct MTerm {
  ObjectWord dom;
  std::vector<Slice> slices;

  friend bool operator==(const MTerm& a, const MTerm& b) {
    return a.dom == b.dom && a.slices == b.slices;
  }
  friend bool operator!=(const MTerm& a, const MTerm& b) { return !(a == b); }
};

/// All boundaries of the term: element 0 is dom, element i the boundary
/// after slice i.  Throws domain_error when a slice does not typecheck
/// (position out of range, or cap symbols disagreeing with the boundary).
std::vector<ObjectWord> typecheck(const MTerm& term);

/// The codomain (last boundary).
ObjectWord cod(const MTerm& term);

MTerm identity_term(const ObjectWord& obj);

/// b stacked on top of a; requires cod(a) == dom(b).
MTerm compose_terms(const MTerm& a, const MTerm& b);

/// a placed left of b.
MTerm tensor_terms(const MTerm& a, const MTerm& b);

/// A planar pairing between a bottom and a top object, plus a scalar
/// exponent.  Points are numbered along the boundary circle: bottom points
/// 0..B-1 left to right, then top points B..B+T-1 continuing RIGHT to left
/// (top position p, 1-based left to right, is point B + T - p).
struct ONet {
  ObjectWord bottom;
  ObjectWord top;
  std::vector<int> pairing;  // size B+T, an involution
  long long scalar_exp = 0;

  friend bool operator==(const ONet& a, const ONet& b) {
    return a.bottom == b.bottom && a.top == b.top && a.pairing == b.pairing &&
           a.scalar_exp == b.scalar_exp;
  }
  friend bool operator!=(const ONet& a, const ONet& b) { return !(a == b); }
  friend bool operator<(const ONet& a, const ONet& b);
};

/// Evaluate a term to its net by tracing strands and counting closed loops
/// with the convention's signs.
ONet eval_net(const MTerm& term, BubbleConvention conv = BubbleConvention::positive);

/// A planar diagram as a plain net (the two numbering conventions agree).
ONet diagram_net(const Diagram& d);

struct NormalizeTermResult {
  long long scalar_exp = 0;
  MTerm term;
  std::size_t steps = 0;  // each step removes one cup-cap pair
};

/// Rewrite modulo exchange: repeatedly bring a cup and the cap that consumes
/// its strands together (moving slices past each other only when they are
/// horizontally disjoint) and cancel the pair — a closed bubble adds its
/// sign to the scalar, a zigzag straightens silently.  The result has no
/// cancellable pair left in any exchange representative; each step removes
/// exactly two generators.
NormalizeTermResult normalize_term(const MTerm& term,
                                   BubbleConvention conv = BubbleConvention::positive,
                                   std::vector<MTerm>* stages = nullptr);

/// Deterministic representative of a term's exchange class (greedy smallest
/// linear extension); two terms are exchange-equivalent iff their canonical
/// forms are equal.
MTerm exchange_canonical(const MTerm& term);

/// One overlapping-redex configuration of the modulo-exchange rewriting,
/// with both one-step branches normalized to completion.
struct CatCriticalPair {
  std::string family;  // "cup-cap-cup" or "cap-cup-cap"
  MTerm source;
  NormalizeTermResult branch_a;
  NormalizeTermResult branch_b;
  bool joined = false;
};

/// The two families of overlapping redexes (two cups feeding one cap; one
/// cup split between two caps), instantiated over all orientations in the
/// given mode.  Cup-cup pairs never overlap, a cap's two strands meet at
/// most one cup per strand, and a bubble shares neither its cup nor its cap
/// with any other redex, so these families are exhaustive.
std::vector<CatCriticalPair> modulo_critical_pairs(
    Mode mode, BubbleConvention conv = BubbleConvention::positive);

/// The snake identities (cap over cup in both bends, all orientations):
/// every one must evaluate to an identity net.
std::vector<MTerm> zigzag_terms(Mode mode);

/// Rebuild a term from a loop-free net: caps close the bottom arcs innermost
/// first, cups open the top arcs outermost first.  The result is normal and
/// evaluates back to the net.
MTerm net_to_term(const ONet& net);

/// All loop-free nets from `bottom` to `top`: noncrossing perfect matchings
/// of the boundary circle, in oriented mode keeping arcs on opposite symbols
/// and through-strands on equal ones.
std::vector<ONet> hom_basis(const ObjectWord& bottom, const ObjectWord& top);

/// The term of the hook generator E_i = cup_i over cap_i on n plain strands.
MTerm hook_term(int n, int i);

/// A term multiplying out to the given diagram (via its normal-form word).
MTerm diagram_term(const Diagram& d);

/// Exhaustively verify that the category reproduces the diagram algebra at
/// size n: for every pair of basis diagrams, composing their terms and
/// normalizing yields exactly the loop count and net of the diagram product.
/// Returns the number of pairs checked; throws on any mismatch.
std::size_t end_algebra_check(int n);

// --- text forms ----------------------------------------------------------

/// plain: the strand count, "3"; oriented: the symbol word, "v^v", or "-"
/// when empty.
std::string format_object(const ObjectWord& obj);
ObjectWord parse_object(const std::string& text, Mode mode);

/// "cap", "cup" (plain); "cap+", "cap-", "cup+", "cup-" (oriented, sign +
/// meaning the (v,^) end).
std::string format_gen(const GenArrow& gen, Mode mode);
GenArrow parse_gen(const std::string& text, Mode mode);

/// Slices joined by " ; ", each "id LEFT | GEN | id RIGHT" where LEFT and
/// RIGHT are the untouched boundary parts; the identity term is "id".
std::string format_term(const MTerm& term);

/// Parse against a known domain; every slice's LEFT and RIGHT parts are
/// checked against the running boundary.
MTerm parse_term(const std::string& text, Mode mode, const ObjectWord& dom);

/// "[(1,2),(3,4)]": the 1-based circle pairing.
std::string format_net_pairing(const ONet& net);

}  // namespace tl
