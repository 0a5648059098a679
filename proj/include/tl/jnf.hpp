// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <vector>

#include "tl/diagram.hpp"
#include "tl/word.hpp"

namespace tl {

/// One descending block e_i e_(i-1) ... e_j (so j <= i).
struct JnfBlock {
  int i = 0;
  int j = 0;

  friend bool operator==(const JnfBlock& a, const JnfBlock& b) {
    return a.i == b.i && a.j == b.j;
  }
  friend bool operator!=(const JnfBlock& a, const JnfBlock& b) {
    return !(a == b);
  }
};

/// Jones normal form: d^power times a product of descending blocks whose
/// tops i_1 < i_2 < ... and bottoms j_1 < j_2 < ... both strictly increase.
/// These words are exactly the normal forms of the confluent rewriting
/// system, and the power-0 ones biject with planar diagrams.
struct JnfWord {
  long long delta_power = 0;
  std::vector<JnfBlock> blocks;

  friend bool operator==(const JnfWord& a, const JnfWord& b) {
    return a.delta_power == b.delta_power && a.blocks == b.blocks;
  }
  friend bool operator!=(const JnfWord& a, const JnfWord& b) {
    return !(a == b);
  }
};

/// Spell out as a word: d^power, then each block top-down.
Word to_word(const JnfWord& w);

/// Recognize a word in Jones normal form (leading d's, then maximal
/// descending runs with strictly increasing tops and bottoms); nullopt if the
/// word is not of that shape.  Letters must be valid for size n.
std::optional<JnfWord> is_jnf(const Word& w, int n);

/// All power-0 normal forms for size n, in a fixed deterministic order
/// (blocks chosen left to right, smallest admissible (i, j) first).  Their
/// number is the n-th Catalan number.
std::vector<JnfWord> enumerate_jnf(int n, int max_n = 8);

/// The diagram of one block: evaluate(e_i e_(i-1) ... e_j).  Concretely, a
/// bottom cap at (i, i+1), a top cup at positions (j, j+1), bottom b routed
/// to top b+2 for j <= b <= i-1, everything else straight.
Diagram staircase(int n, int i, int j);

/// Invert evaluation: the unique power-0 normal form whose product of hooks
/// is the given diagram.  Works by peeling the last block: j is the
/// rightmost top cup, i+1 the rightmost position whose strand is not
/// straight, and the remaining diagram is reconstructed by routing strands
/// back through the block and verified by composing forward again.
JnfWord diagram_to_jnf(const Diagram& d);

}  // namespace tl
