// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
#include "tl/jnf.hpp"

#include <algorithm>

namespace tl {

Word to_word(const JnfWord& w) {
  Word out;
  for (long long p = 0; p < w.delta_power; ++p) out.push_back(kDelta);
  for (const JnfBlock& b : w.blocks)
    for (int a = b.i; a >= b.j; --a) out.push_back(a);
  return out;
}

std::optional<JnfWord> is_jnf(const Word& w, int n) {
  JnfWord result;
  std::size_t pos = 0;
  while (pos < w.size() && w[pos] == kDelta) {
    ++result.delta_power;
    ++pos;
  }
  int last_i = 0;
  int last_j = 0;
  while (pos < w.size()) {
    Letter top = w[pos];
    if (top == kDelta) return std::nullopt;  // d after a generator
    if (top < 1 || top > n - 1) return std::nullopt;
    // Take the maximal consecutive descending run starting here.  In a
    // normal form the next block starts strictly higher, so the greedy run
    // is exactly one block.
    int cur = top;
    ++pos;
    while (pos < w.size() && cur > 1 && w[pos] == cur - 1) {
      --cur;
      ++pos;
    }
    if (!result.blocks.empty() && (top <= last_i || cur <= last_j))
      return std::nullopt;
    result.blocks.push_back(JnfBlock{top, cur});
    last_i = top;
    last_j = cur;
  }
  return result;
}

std::vector<JnfWord> enumerate_jnf(int n, int max_n) {
  if (n < 0) throw domain_error("algebra size must be nonnegative");
  if (n > max_n)
    throw domain_error("enumeration guarded at n <= " + std::to_string(max_n) +
                       " (got n=" + std::to_string(n) + ")");
  std::vector<JnfWord> out;
  std::vector<JnfBlock> blocks;
  auto rec = [&](auto&& self, int min_i, int min_j) -> void {
    out.push_back(JnfWord{0, blocks});
    for (int i = min_i; i <= n - 1; ++i) {
      for (int j = min_j; j <= i; ++j) {
        blocks.push_back(JnfBlock{i, j});
        self(self, i + 1, j + 1);
        blocks.pop_back();
      }
    }
  };
  rec(rec, 1, 1);
  return out;
}

Diagram staircase(int n, int i, int j) {
  if (i < 1 || i > n - 1)
    throw domain_error("block top " + std::to_string(i) +
                       " out of range 1.." + std::to_string(n - 1));
  if (j < 1 || j > i)
    throw domain_error("block bottom " + std::to_string(j) +
                       " out of range 1.." + std::to_string(i));
  std::vector<int> match(static_cast<std::size_t>(2 * n), -1);
  auto join = [&](int a, int b) {
    match[static_cast<std::size_t>(a)] = b;
    match[static_cast<std::size_t>(b)] = a;
  };
  join(i - 1, i);                  // bottom cap at (i, i+1)
  join(2 * n - j, 2 * n - j - 1);  // top cup at positions (j, j+1)
  for (int b = 1; b <= n; ++b) {
    if (b == i || b == i + 1) continue;
    if (b >= j && b <= i - 1)
      join(b - 1, 2 * n - (b + 2));  // shifted two positions right
    else
      join(b - 1, 2 * n - b);  // straight
  }
  return Diagram::from_match(n, std::move(match));
}

namespace {

// Rightmost top position p such that positions (p, p+1) carry a cup, or -1.
int rightmost_top_cup(const Diagram& d) {
  int best = -1;
  for (int p = 1; p <= d.n() - 1; ++p)
    if (d.partner(d.top_point(p)) == d.top_point(p + 1)) best = p;
  return best;
}

// Largest top position whose strand is not the straight one to bottom p,
// or -1 for the identity.
int max_bent_position(const Diagram& d) {
  int best = -1;
  for (int p = 1; p <= d.n(); ++p)
    if (d.partner(p - 1) != d.top_point(p)) best = p;
  return best;
}

// Solve compose(prev, staircase(n, i, j)) == d (with no loops) for prev.
//
// Through the staircase, d's top position p corresponds to prev's top
// position sigma(p); the staircase's bottom cap sits at prev's top positions
// (i, i+1), and exactly one strand of d routes through it, contributing two
// arcs of prev.  We try every pairing of d through the cap and keep the
// unique candidate that composes back to d, has its own rightmost cup left
// of j, and peels down (its own bent region stays below i).
Diagram peel_block(const Diagram& d, int i, int j) {
  const int n = d.n();
  const Diagram stair = staircase(n, i, j);

  auto sigma = [&](int p) -> int {
    if (p < j) return p;
    if (p >= j + 2 && p <= i + 1) return p - 2;
    if (p > i + 1) return p;
    throw internal_error("cup position has no image under the through map");
  };
  // d endpoint (0-based) -> prev endpoint (0-based)
  auto map_endpoint = [&](int x) -> int {
    if (x < n) return x;
    return 2 * n - sigma(d.top_position(x));
  };

  const int cup_hi = d.top_point(j);      // 0-based points of d's cup
  const int cup_lo = d.top_point(j + 1);
  std::vector<std::pair<int, int>> strands;
  for (const auto& [x, y] : d.pairs())
    if (!(x == std::min(cup_hi, cup_lo) && y == std::max(cup_hi, cup_lo)))
      strands.emplace_back(x, y);

  std::vector<Diagram> found;
  for (std::size_t routed = 0; routed < strands.size(); ++routed) {
    for (int orient = 0; orient < 2; ++orient) {
      std::vector<int> match(static_cast<std::size_t>(2 * n), -1);
      auto join = [&](int a, int b) {
        match[static_cast<std::size_t>(a)] = b;
        match[static_cast<std::size_t>(b)] = a;
      };
      bool clash = false;
      for (std::size_t s = 0; s < strands.size(); ++s) {
        if (s == routed) continue;
        int a = map_endpoint(strands[s].first);
        int b = map_endpoint(strands[s].second);
        if (match[static_cast<std::size_t>(a)] != -1 ||
            match[static_cast<std::size_t>(b)] != -1 || a == b) {
          clash = true;
          break;
        }
        join(a, b);
      }
      if (clash) continue;
      // The routed strand enters the cap: its endpoints attach to prev's top
      // positions i and i+1 (points 2n-i and 2n-i-1), in either order.
      int a = map_endpoint(strands[routed].first);
      int b = map_endpoint(strands[routed].second);
      int ka = orient == 0 ? 2 * n - i : 2 * n - i - 1;
      int kb = orient == 0 ? 2 * n - i - 1 : 2 * n - i;
      if (match[static_cast<std::size_t>(a)] != -1 ||
          match[static_cast<std::size_t>(b)] != -1 ||
          match[static_cast<std::size_t>(ka)] != -1 ||
          match[static_cast<std::size_t>(kb)] != -1) {
        continue;
      }
      join(a, ka);
      join(b, kb);

      Diagram cand = Diagram::identity(n);
      try {
        cand = Diagram::from_match(n, std::move(match));
      } catch (const domain_error&) {
        continue;  // crossing or incomplete: not a planar candidate
      }
      ScaledDiagram back = compose(cand, stair);
      if (back.power != 0 || back.diagram != d) continue;
      int cup = rightmost_top_cup(cand);
      if (cup >= j) continue;  // peeling must move the cup strictly left
      int bent = max_bent_position(cand);
      if (bent != -1 && bent - 1 >= i) continue;  // block tops must descend
      found.push_back(std::move(cand));
    }
  }
  if (found.size() != 1)
    throw internal_error("block peeling found " +
                         std::to_string(found.size()) +
                         " candidates instead of exactly one");
  return found.front();
}

}  // namespace

JnfWord diagram_to_jnf(const Diagram& d) {
  const int n = d.n();
  JnfWord result;
  std::vector<JnfBlock> reversed;
  Diagram cur = d;
  int last_j = n + 1;
  int guard = 0;
  while (!cur.is_identity()) {
    if (++guard > n * n + 1)
      throw internal_error("block peeling failed to terminate");
    int j = rightmost_top_cup(cur);
    if (j < 1) throw internal_error("non-identity diagram without a top cup");
    int m = max_bent_position(cur);
    int i = m - 1;
    if (j > i || i > n - 1)
      throw internal_error("inconsistent block indices while peeling");
    if (j >= last_j) throw internal_error("cup positions fail to decrease");
    Diagram prev = peel_block(cur, i, j);
    reversed.push_back(JnfBlock{i, j});
    last_j = j;
    cur = std::move(prev);
  }
  result.blocks.assign(reversed.rbegin(), reversed.rend());

  // The factorization is rebuilt forward as a final self-check.
  ScaledDiagram back = evaluate(to_word(result), n);
  if (back.power != 0 || back.diagram != d)
    throw internal_error("normal form fails to evaluate back to its diagram");
  return result;
}

}  // namespace tl
