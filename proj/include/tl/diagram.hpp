// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tl/common.hpp"

namespace tl {

/// A planar (n,n)-diagram: a fixed-point-free noncrossing perfect matching of
/// 2n boundary points.
///
/// Boundary numbering follows the circle convention that makes planarity a
/// single stack scan: points 1..n run along the bottom from left to right,
/// and points n+1..2n continue along the top from RIGHT to left.  Thus the
/// top endpoint directly above bottom point i is point 2n+1-i, and "top
/// position p" (counted left to right, 1-based) is point 2n+1-p.
///
/// Internally points are 0-based (0..2n-1); the 1-based convention appears in
/// the text format, e.g. "n=4 [(1,2),(3,8),(4,7),(5,6)]".
class Diagram {
public:
  /// Build from 1-based pairs; validates everything and reports the first
  /// offending pair in errors.
  static Diagram make(int n, const std::vector<std::pair<int, int>>& pairs);

  /// Build from a 0-based partner array of size 2n; validates involution,
  /// fixed-point-freeness and planarity.
  static Diagram from_match(int n, std::vector<int> match);

  /// The identity diagram: bottom i joined straight up to point 2n+1-i.
  static Diagram identity(int n);

  /// The hook generator E_i (1 <= i <= n-1): a cap joining bottom points
  /// (i, i+1), a cup joining top positions (i, i+1), all else straight.
  static Diagram generator(int n, int i);

  int n() const { return n_; }

  /// 0-based partner of 0-based point p.
  int partner(int p) const { return match_[static_cast<std::size_t>(p)]; }

  /// 0-based point sitting at top position pos (1-based, left to right).
  int top_point(int pos) const { return 2 * n_ - pos; }

  /// 1-based top position of a 0-based top point (p >= n).
  int top_position(int p) const { return 2 * n_ - p; }

  bool is_identity() const;

  /// All pairs as 0-based (a,b) with a<b, sorted by a.
  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.n_ == b.n_ && a.match_ == b.match_;
  }
  friend bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }
  friend bool operator<(const Diagram& a, const Diagram& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.match_ < b.match_;
  }

private:
  Diagram(int n, std::vector<int> match) : n_(n), match_(std::move(match)) {}

  int n_ = 0;
  std::vector<int> match_;  // size 2n, match_[match_[p]] == p, match_[p] != p
};

/// A diagram with a power of the loop parameter: delta^power * diagram.
struct ScaledDiagram {
  long long power = 0;
  Diagram diagram;

  friend bool operator==(const ScaledDiagram& a, const ScaledDiagram& b) {
    return a.power == b.power && a.diagram == b.diagram;
  }
  friend bool operator!=(const ScaledDiagram& a, const ScaledDiagram& b) {
    return !(a == b);
  }
};

/// Stack b on top of a, trace strands through the interface, and erase closed
/// loops, each contributing one factor of the loop parameter.
ScaledDiagram compose(const Diagram& a, const Diagram& b);
ScaledDiagram compose(const ScaledDiagram& a, const ScaledDiagram& b);

/// Number of (n,n)-diagrams: the n-th Catalan number, via the convolution
/// recurrence u_n = sum_k u_k * u_{n-1-k}.  Throws on 64-bit overflow.
unsigned long long count_diagrams(int n);

/// All (n,n)-diagrams in a fixed deterministic order.  Guarded by `max_n`
/// because the count grows as the Catalan numbers.
std::vector<Diagram> enumerate_diagrams(int n, int max_n = 8);

/// Balanced-path encoding: walking the boundary circle 0..2n-1, write 'R'
/// where a strand opens (partner lies ahead) and 'U' where it closes.
std::string to_dyck(const Diagram& d);

/// Inverse of to_dyck: each 'U' closes the most recently opened strand.
Diagram from_dyck(const std::string& path);

/// Reflect top-to-bottom: partner'(x) = t(partner(t(x))) for the flip
/// t(x) = 2n+1-x.  Anti-automorphism of composition.
Diagram transpose(const Diagram& d);

/// "n=4 [(1,2),(3,8),(4,7),(5,6)]" with 1-based pairs sorted by first entry.
std::string format_diagram(const Diagram& d);

/// "delta^2 * n=4 [...]" (the power is always printed, including 0).
std::string format_scaled(const ScaledDiagram& s);

/// Parse the output of format_diagram; errors cite the 1-based character
/// position of the problem.
Diagram parse_diagram(const std::string& text);

}  // namespace tl
