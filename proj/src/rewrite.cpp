// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
#include "tl/rewrite.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace tl {

namespace {

std::string rule_id(const std::string& family, int i) {
  return family + "." + std::to_string(i);
}

std::string rule_id(const std::string& family, int i, int j) {
  return family + "." + std::to_string(i) + "." + std::to_string(j);
}

bool matches_at(const Word& w, const Word& lhs, std::size_t pos) {
  if (pos + lhs.size() > w.size()) return false;
  return std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<long>(pos));
}

Word apply_at(const Word& w, const Rule& r, std::size_t pos) {
  Word out;
  out.reserve(w.size() - r.lhs.size() + r.rhs.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(pos));
  out.insert(out.end(), r.rhs.begin(), r.rhs.end());
  out.insert(out.end(), w.begin() + static_cast<long>(pos + r.lhs.size()),
             w.end());
  return out;
}

}  // namespace

RuleSystem tl_rules(int n, RuleSet which) {
  if (n < 0) throw domain_error("algebra size must be nonnegative");
  RuleSystem sys;
  sys.n = n;
  auto add = [&](Word lhs, Word rhs, std::string id) {
    sys.rules.push_back(Rule{std::move(lhs), std::move(rhs), std::move(id)});
  };

  for (int i = 1; i <= n - 1; ++i)
    add({i, kDelta}, {kDelta, i}, rule_id("1", i));
  for (int i = 1; i <= n - 1; ++i)
    add({i, i}, {kDelta, i}, rule_id("2", i));
  for (int i = 1; i <= n - 2; ++i)
    add({i, i + 1, i}, {i}, rule_id("3+", i));
  for (int i = 2; i <= n - 1; ++i)
    add({i, i - 1, i}, {i}, rule_id("3-", i));
  for (int i = 3; i <= n - 1; ++i)
    for (int j = 1; j <= i - 2; ++j)
      add({i, j}, {j, i}, rule_id("4", i, j));

  if (which == RuleSet::completed) {
    // Ladder collapses: e_i, a consecutive run down to e_(i-k), then e_i
    // again; the leading e_i e_(i-1) pair cancels against the trailing e_i.
    for (int i = 1; i <= n - 1; ++i) {
      for (int k = 2; i - k >= 1; ++k) {
        Word lhs, rhs;
        for (int a = i; a >= i - k; --a) lhs.push_back(a);
        lhs.push_back(i);
        for (int a = i - 2; a >= i - k; --a) rhs.push_back(a);
        rhs.push_back(i);
        add(std::move(lhs), std::move(rhs), rule_id("5", i, k));
      }
    }
    // Mirror family going up: e_i, a jump to e_(i+k), a run down to e_(i+1),
    // then e_i; the trailing e_(i+1) e_i pair cancels against the leading e_i.
    for (int i = 1; i <= n - 1; ++i) {
      for (int k = 2; i + k <= n - 1; ++k) {
        Word lhs, rhs;
        lhs.push_back(i);
        for (int a = i + k; a >= i + 1; --a) lhs.push_back(a);
        lhs.push_back(i);
        rhs.push_back(i);
        for (int a = i + k; a >= i + 2; --a) rhs.push_back(a);
        add(std::move(lhs), std::move(rhs), rule_id("6", i, k));
      }
    }
  }
  return sys;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;  // letters are ints with d=0 below every generator
}

void check_termination_order(const RuleSystem& sys) {
  for (const Rule& r : sys.rules)
    if (!shortlex_less(r.rhs, r.lhs))
      throw domain_error("rule " + r.id + " does not decrease: " +
                         format_word(r.lhs) + " -> " + format_word(r.rhs));
}

Word normalize(const RuleSystem& sys, Word w, std::vector<TraceStep>* trace,
               std::size_t max_steps) {
  for (std::size_t step = 0; step < max_steps; ++step) {
    bool fired = false;
    for (std::size_t pos = 0; pos < w.size() && !fired; ++pos) {
      for (std::size_t ri = 0; ri < sys.rules.size() && !fired; ++ri) {
        const Rule& r = sys.rules[ri];
        if (!matches_at(w, r.lhs, pos)) continue;
        Word next = apply_at(w, r, pos);
        if (trace)
          trace->push_back(TraceStep{ri, pos, w, next});
        w = std::move(next);
        fired = true;
      }
    }
    if (!fired) return w;
  }
  throw domain_error("rewriting did not terminate within " +
                     std::to_string(max_steps) + " steps");
}

Word normalize_random(const RuleSystem& sys, Word w, std::mt19937& rng,
                      std::size_t max_steps) {
  for (std::size_t step = 0; step < max_steps; ++step) {
    std::vector<std::pair<std::size_t, std::size_t>> redexes;
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      for (std::size_t ri = 0; ri < sys.rules.size(); ++ri)
        if (matches_at(w, sys.rules[ri].lhs, pos)) redexes.emplace_back(pos, ri);
    if (redexes.empty()) return w;
    std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
    auto [pos, ri] = redexes[pick(rng)];
    w = apply_at(w, sys.rules[ri], pos);
  }
  throw domain_error("rewriting did not terminate within " +
                     std::to_string(max_steps) + " steps");
}

std::vector<CriticalPair> critical_pairs(const RuleSystem& sys) {
  std::vector<CriticalPair> out;
  const auto& rules = sys.rules;
  for (std::size_t a = 0; a < rules.size(); ++a) {
    for (std::size_t b = 0; b < rules.size(); ++b) {
      const Word& la = rules[a].lhs;
      const Word& lb = rules[b].lhs;

      // Proper overlap: suffix of la of length o equals prefix of lb,
      // 0 < o < min(|la|, |lb|).  The source is la glued to lb on o letters.
      for (std::size_t o = 1; o < la.size() && o < lb.size(); ++o) {
        if (!std::equal(la.end() - static_cast<long>(o), la.end(), lb.begin()))
          continue;
        Word source(la.begin(), la.end());
        source.insert(source.end(), lb.begin() + static_cast<long>(o),
                      lb.end());
        CriticalPair cp;
        cp.rule_a = a;
        cp.rule_b = b;
        cp.pos_b = la.size() - o;
        cp.source = source;
        cp.branch_a = apply_at(source, rules[a], 0);
        cp.branch_b = apply_at(source, rules[b], cp.pos_b);
        out.push_back(std::move(cp));
      }

      // Containment: lb occurs inside la.  Equal left sides only count once
      // per unordered pair of distinct rules.
      if (lb.size() < la.size() || (lb.size() == la.size() && a < b)) {
        for (std::size_t p = 0; p + lb.size() <= la.size(); ++p) {
          if (!matches_at(la, lb, p)) continue;
          CriticalPair cp;
          cp.rule_a = a;
          cp.rule_b = b;
          cp.pos_b = p;
          cp.source = la;
          cp.branch_a = rules[a].rhs;
          cp.branch_b = apply_at(la, rules[b], p);
          out.push_back(std::move(cp));
        }
      }
    }
  }
  return out;
}

ConfluenceReport check_confluence(const RuleSystem& sys) {
  check_termination_order(sys);
  ConfluenceReport report;
  for (const CriticalPair& cp : critical_pairs(sys)) {
    ++report.pair_count;
    Word na = normalize(sys, cp.branch_a);
    Word nb = normalize(sys, cp.branch_b);
    if (na != nb)
      report.unjoinable.push_back(ConfluenceWitness{cp, std::move(na),
                                                    std::move(nb)});
  }
  return report;
}

namespace {

// Canonical interreduction: drop any rule whose left side another rule can
// rewrite, and normalize every right side with the full system.  For a
// convergent system this is the unique reduced presentation.
void interreduce(RuleSystem& sys) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t r = 0; r < sys.rules.size(); ++r) {
      RuleSystem others;
      others.n = sys.n;
      for (std::size_t s = 0; s < sys.rules.size(); ++s)
        if (s != r) others.rules.push_back(sys.rules[s]);
      bool reducible = false;
      for (std::size_t pos = 0; pos < sys.rules[r].lhs.size() && !reducible;
           ++pos)
        for (const Rule& o : others.rules)
          if (matches_at(sys.rules[r].lhs, o.lhs, pos)) {
            reducible = true;
            break;
          }
      if (reducible) {
        sys.rules.erase(sys.rules.begin() + static_cast<long>(r));
        changed = true;
        break;
      }
      Word nf = normalize(sys, sys.rules[r].rhs);
      if (nf != sys.rules[r].rhs) {
        sys.rules[r].rhs = std::move(nf);
        changed = true;
      }
    }
  }
}

}  // namespace

CompletionResult knuth_bendix(const RuleSystem& start,
                              std::size_t max_new_rules) {
  CompletionResult result;
  result.system = start;
  check_termination_order(result.system);

  for (;;) {
    bool added_one = false;
    for (const CriticalPair& cp : critical_pairs(result.system)) {
      Word na = normalize(result.system, cp.branch_a);
      Word nb = normalize(result.system, cp.branch_b);
      if (na == nb) continue;
      Rule fresh;
      if (shortlex_less(na, nb)) {
        fresh.lhs = std::move(nb);
        fresh.rhs = std::move(na);
      } else {
        fresh.lhs = std::move(na);
        fresh.rhs = std::move(nb);
      }
      fresh.id = "kb." + std::to_string(result.added.size() + 1);
      if (result.added.size() >= max_new_rules)
        throw domain_error("completion exceeded the budget of " +
                           std::to_string(max_new_rules) + " new rules");
      result.added.push_back(fresh);
      result.system.rules.push_back(std::move(fresh));
      added_one = true;
      break;  // restart the pair scan against the enlarged system
    }
    if (!added_one) break;
  }
  interreduce(result.system);
  return result;
}

bool same_rules(const RuleSystem& a, const RuleSystem& b) {
  std::set<std::pair<Word, Word>> sa, sb;
  for (const Rule& r : a.rules) sa.emplace(r.lhs, r.rhs);
  for (const Rule& r : b.rules) sb.emplace(r.lhs, r.rhs);
  return a.n == b.n && sa == sb;
}

}  // namespace tl
