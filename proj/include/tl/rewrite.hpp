// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "tl/word.hpp"

namespace tl {

/// One oriented rewrite rule lhs -> rhs on words.
struct Rule {
  Word lhs;
  Word rhs;
  std::string id;  // stable human-readable label, e.g. "3-.2" or "kb.5"

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

/// A rewriting system for the algebra on generators e1..e(n-1) and the
/// central loop letter d.  Rule order matters: the deterministic strategy
/// breaks position ties by taking the earliest rule in this list.
struct RuleSystem {
  int n = 0;
  std::vector<Rule> rules;
};

enum class RuleSet {
  base,       // the defining relations, oriented left-to-right
  completed,  // base plus the two ladder families that make it confluent
};

/// The rewriting system for size n.
///
/// Base rules (all i in range):
///   1.i    : e_i d            -> d e_i
///   2.i    : e_i e_i          -> d e_i
///   3+.i   : e_i e_(i+1) e_i  -> e_i
///   3-.i   : e_i e_(i-1) e_i  -> e_i
///   4.i.j  : e_i e_j          -> e_j e_i          (j <= i-2)
///
/// The completed set adds, for every k >= 2 with all indices in range:
///   5.i.k  : e_i e_(i-1) ... e_(i-k) e_i  -> e_(i-2) ... e_(i-k) e_i
///   6.i.k  : e_i e_(i+k) ... e_(i+1) e_i  -> e_i e_(i+k) ... e_(i+2)
RuleSystem tl_rules(int n, RuleSet which);

/// Shortlex: compare by length, then lexicographically with d < e1 < e2 < ...
bool shortlex_less(const Word& a, const Word& b);

/// Verify every rule strictly decreases in shortlex; throws naming the first
/// offender.  This is the termination certificate for the systems above.
void check_termination_order(const RuleSystem& sys);

struct TraceStep {
  std::size_t rule_index = 0;  // index into RuleSystem::rules
  std::size_t pos = 0;         // 0-based letter position of the redex
  Word before;
  Word after;
};

/// Deterministic normalization: repeatedly rewrite the leftmost redex,
/// breaking ties at the same position by the earliest rule.  Throws if
/// max_steps rewrites do not reach a normal form.
Word normalize(const RuleSystem& sys, Word w,
               std::vector<TraceStep>* trace = nullptr,
               std::size_t max_steps = 1000000);

/// Normalization under a uniformly random choice of redex at every step.
/// For a convergent system this must agree with `normalize`; tests use it to
/// probe confluence.
Word normalize_random(const RuleSystem& sys, Word w, std::mt19937& rng,
                      std::size_t max_steps = 1000000);

/// A critical pair: one word `source` carrying two overlapping redexes whose
/// one-step results are `branch_a` (rule_a at position 0 or spanning) and
/// `branch_b` (rule_b at pos_b).
struct CriticalPair {
  std::size_t rule_a = 0;
  std::size_t rule_b = 0;
  std::size_t pos_b = 0;
  Word source;
  Word branch_a;
  Word branch_b;
};

/// All critical pairs: proper overlaps (a nonempty proper suffix of one lhs
/// equals a proper prefix of the other) and containments (one lhs inside the
/// other, including equal left sides of distinct rules).  Disjoint redexes
/// are not critical and are excluded by construction.
std::vector<CriticalPair> critical_pairs(const RuleSystem& sys);

struct ConfluenceWitness {
  CriticalPair pair;
  Word nf_a;
  Word nf_b;
};

struct ConfluenceReport {
  std::size_t pair_count = 0;
  std::vector<ConfluenceWitness> unjoinable;
  bool confluent() const { return unjoinable.empty(); }
};

/// Normalize both branches of every critical pair and report the ones that
/// disagree.  Also certifies the termination order first.
ConfluenceReport check_confluence(const RuleSystem& sys);

struct CompletionResult {
  RuleSystem system;
  std::vector<Rule> added;  // rules created during completion, in order
};

/// Knuth–Bendix completion with shortlex orientation: repeatedly turn a
/// non-joinable critical pair into a new rule (greater side -> smaller side),
/// then interreduce.  Throws if more than max_new_rules get created.
CompletionResult knuth_bendix(const RuleSystem& start,
                              std::size_t max_new_rules = 1000);

/// Equality of the underlying rule sets (ignoring ids and order).
bool same_rules(const RuleSystem& a, const RuleSystem& b);

}  // namespace tl
