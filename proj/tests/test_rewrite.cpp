// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <random>
#include <set>

#include "tl/common.hpp"
#include "tl/rewrite.hpp"
#include "tl/word.hpp"

using tl::RuleSet;
using tl::RuleSystem;
using tl::Word;

namespace {
Word W(const char* s, int n) { return tl::parse_word(s, n); }
}  // namespace

TEST_CASE("rule inventory") {
  // family sizes: (n-1) loop moves, (n-1) squares, (n-2)+(n-2) hooks,
  // (n-2)(n-1)/2... the totals below are what the schemas produce
  CHECK(tl::tl_rules(4, RuleSet::base).rules.size() == 11);
  CHECK(tl::tl_rules(4, RuleSet::completed).rules.size() == 13);
  CHECK(tl::tl_rules(6, RuleSet::base).rules.size() == 24);
  CHECK(tl::tl_rules(6, RuleSet::completed).rules.size() == 36);
  CHECK(tl::tl_rules(2, RuleSet::base).rules.size() ==
        tl::tl_rules(2, RuleSet::completed).rules.size());

  // spot-check the two ladder schemas by id
  const RuleSystem c4 = tl::tl_rules(4, RuleSet::completed);
  bool saw5 = false;
  bool saw6 = false;
  for (const tl::Rule& r : c4.rules) {
    if (r.id == "5.3.2") {
      saw5 = true;
      CHECK(r.lhs == W("e3 e2 e1 e3", 4));
      CHECK(r.rhs == W("e1 e3", 4));
    }
    if (r.id == "6.1.2") {
      saw6 = true;
      CHECK(r.lhs == W("e1 e3 e2 e1", 4));
      CHECK(r.rhs == W("e1 e3", 4));
    }
  }
  CHECK(saw5);
  CHECK(saw6);
}

TEST_CASE("shortlex termination order certifies every system") {
  for (int n = 2; n <= 6; ++n) {
    CHECK_NOTHROW(tl::check_termination_order(tl::tl_rules(n, RuleSet::base)));
    CHECK_NOTHROW(
        tl::check_termination_order(tl::tl_rules(n, RuleSet::completed)));
  }
  // shortlex basics: length first, then position by position with d smallest
  CHECK(tl::shortlex_less(W("e2", 3), W("e1 e1", 3)));
  CHECK(tl::shortlex_less(W("d", 3), W("e1", 3)));
  CHECK(tl::shortlex_less(W("e1 e2", 3), W("e2 e1", 3)));
  CHECK_FALSE(tl::shortlex_less(W("e1", 3), W("e1", 3)));

  RuleSystem bad;
  bad.n = 2;
  bad.rules.push_back({W("e1", 2), W("e1 e1", 2), "grow"});
  CHECK_THROWS_AS(tl::check_termination_order(bad), tl::domain_error);
}

TEST_CASE("deterministic normalization") {
  const RuleSystem sys = tl::tl_rules(4, RuleSet::completed);
  const auto nf = [&](const char* s) {
    return tl::format_word(tl::normalize(sys, W(s, 4)));
  };
  CHECK(nf("") == "");
  CHECK(nf("e1") == "e1");
  CHECK(nf("e1 e1") == "d e1");
  CHECK(nf("e1 e2 e1") == "e1");
  CHECK(nf("e2 e1 d") == "d e2 e1");
  CHECK(nf("e3 e1") == "e1 e3");
  CHECK(nf("e3 e2 e3 e1") == "e1 e3");
  CHECK(nf("e3 e2 e1 e3") == "e1 e3");
  CHECK(nf("e1 e1 e1") == "d d e1");
  CHECK(nf("e1 e2 e3 e1 e2 e1") == "e1 e3");

  SUBCASE("trace records a coherent chain") {
    std::vector<tl::TraceStep> steps;
    Word in = W("e1 e1 e2 e2", 4);
    Word out = tl::normalize(sys, in, &steps);
    CHECK(!steps.empty());
    CHECK(steps.front().before == in);
    CHECK(steps.back().after == out);
    for (std::size_t i = 0; i + 1 < steps.size(); ++i)
      CHECK(steps[i].after == steps[i + 1].before);
    // leftmost redex first: the e1 e1 square at position 0
    CHECK(steps.front().pos == 0);
    CHECK(sys.rules[steps.front().rule_index].id == "2.1");
  }

  SUBCASE("step budget is enforced") {
    CHECK_THROWS_AS(tl::normalize(sys, W("e1 e1 e1 e1 e1 e1", 4), nullptr, 3),
                    tl::domain_error);
  }
}

TEST_CASE("the defining relations alone are not confluent") {
  const RuleSystem base = tl::tl_rules(4, RuleSet::base);
  // one word, two irreconcilable descendants
  CHECK(tl::format_word(tl::normalize(base, W("e3 e2 e3 e1", 4))) == "e1 e3");
  // the other branch of the same overlap is already stuck under base rules
  CHECK(tl::format_word(tl::normalize(base, W("e3 e2 e1 e3", 4))) ==
        "e3 e2 e1 e3");

  const tl::ConfluenceReport rep = tl::check_confluence(base);
  CHECK_FALSE(rep.confluent());
  CHECK(rep.pair_count > 0);
  bool found = false;
  for (const tl::ConfluenceWitness& w : rep.unjoinable) {
    if (w.pair.source == W("e3 e2 e3 e1", 4)) {
      found = true;
      std::set<Word> nfs{w.nf_a, w.nf_b};
      CHECK(nfs == std::set<Word>{W("e1 e3", 4), W("e3 e2 e1 e3", 4)});
    }
  }
  CHECK(found);
}

TEST_CASE("the completed systems are confluent") {
  for (int n = 2; n <= 6; ++n) {
    const tl::ConfluenceReport rep =
        tl::check_confluence(tl::tl_rules(n, RuleSet::completed));
    CHECK(rep.confluent());
    if (n >= 3) CHECK(rep.pair_count > 0);
  }
}

TEST_CASE("critical pairs really are one-word forks") {
  const RuleSystem sys = tl::tl_rules(4, RuleSet::base);
  const auto pairs = tl::critical_pairs(sys);
  CHECK(pairs.size() == 33);
  for (const tl::CriticalPair& p : pairs) {
    // branch_a: rule_a applied at position 0 must reproduce branch_a
    const tl::Rule& ra = sys.rules[p.rule_a];
    const tl::Rule& rb = sys.rules[p.rule_b];
    REQUIRE(p.source.size() >= ra.lhs.size());
    REQUIRE(p.pos_b + rb.lhs.size() <= p.source.size());
    Word wa(p.source);
    CHECK(Word(wa.begin(), wa.begin() + ra.lhs.size()) == ra.lhs);
    wa.erase(wa.begin(), wa.begin() + ra.lhs.size());
    wa.insert(wa.begin(), ra.rhs.begin(), ra.rhs.end());
    CHECK(wa == p.branch_a);
    Word wb(p.source);
    CHECK(Word(wb.begin() + p.pos_b, wb.begin() + p.pos_b + rb.lhs.size()) ==
          rb.lhs);
    wb.erase(wb.begin() + p.pos_b, wb.begin() + p.pos_b + rb.lhs.size());
    wb.insert(wb.begin() + p.pos_b, rb.rhs.begin(), rb.rhs.end());
    CHECK(wb == p.branch_b);
  }
}

TEST_CASE("completion recreates the ladder families") {
  for (int n = 2; n <= 5; ++n) {
    const tl::CompletionResult res =
        tl::knuth_bendix(tl::tl_rules(n, RuleSet::base));
    CHECK(tl::same_rules(res.system, tl::tl_rules(n, RuleSet::completed)));
  }
  // n=4 adds exactly the two four-letter ladder rules
  const tl::CompletionResult r4 =
      tl::knuth_bendix(tl::tl_rules(4, RuleSet::base));
  CHECK(r4.added.size() == 2);
  std::set<std::pair<Word, Word>> added;
  for (const tl::Rule& r : r4.added) added.insert({r.lhs, r.rhs});
  CHECK(added == std::set<std::pair<Word, Word>>{
                     {W("e3 e2 e1 e3", 4), W("e1 e3", 4)},
                     {W("e1 e3 e2 e1", 4), W("e1 e3", 4)}});
  // the additions budget aborts hopeless runs
  CHECK_THROWS_AS(tl::knuth_bendix(tl::tl_rules(6, RuleSet::base), 2),
                  tl::domain_error);
}

TEST_CASE("random strategies agree with the deterministic one") {
  const RuleSystem sys = tl::tl_rules(5, RuleSet::completed);
  std::mt19937 rng(20260822);
  std::uniform_int_distribution<int> letter(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    Word w;
    for (int len = 0; len < 9; ++len) w.push_back(letter(rng));
    const Word det = tl::normalize(sys, w);
    for (int run = 0; run < 25; ++run)
      CHECK(tl::normalize_random(sys, w, rng) == det);
  }
}
