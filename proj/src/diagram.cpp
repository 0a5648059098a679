// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
#include "tl/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tl {

namespace {

std::string point_str(int p0) { return std::to_string(p0 + 1); }

}  // namespace

Diagram Diagram::make(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw domain_error("diagram size must be nonnegative");
  std::vector<int> match(static_cast<std::size_t>(2 * n), -1);
  if (pairs.size() != static_cast<std::size_t>(n))
    throw domain_error("expected " + std::to_string(n) + " pairs, got " +
                       std::to_string(pairs.size()));
  for (const auto& [a, b] : pairs) {
    for (int x : {a, b})
      if (x < 1 || x > 2 * n)
        throw domain_error("point " + std::to_string(x) +
                           " out of range 1.." + std::to_string(2 * n));
    if (a == b)
      throw domain_error("point " + std::to_string(a) + " paired with itself");
    for (int x : {a, b})
      if (match[static_cast<std::size_t>(x - 1)] != -1)
        throw domain_error("point " + std::to_string(x) +
                           " appears in more than one pair");
    match[static_cast<std::size_t>(a - 1)] = b - 1;
    match[static_cast<std::size_t>(b - 1)] = a - 1;
  }
  return from_match(n, std::move(match));
}

Diagram Diagram::from_match(int n, std::vector<int> match) {
  if (n < 0) throw domain_error("diagram size must be nonnegative");
  if (match.size() != static_cast<std::size_t>(2 * n))
    throw domain_error("partner array has wrong length");
  for (int p = 0; p < 2 * n; ++p) {
    int q = match[static_cast<std::size_t>(p)];
    if (q < 0 || q >= 2 * n)
      throw domain_error("point " + point_str(p) + " is unmatched");
    if (q == p)
      throw domain_error("point " + point_str(p) + " paired with itself");
    if (match[static_cast<std::size_t>(q)] != p)
      throw internal_error("partner array is not an involution");
  }
  // Planarity: in the circular order 0..2n-1 every strand must close the most
  // recently opened one, i.e. the parenthesis string must balance.
  std::vector<int> stack;
  for (int p = 0; p < 2 * n; ++p) {
    int q = match[static_cast<std::size_t>(p)];
    if (q > p) {
      stack.push_back(p);
    } else {
      if (stack.empty() || stack.back() != q)
        throw domain_error("pair (" + point_str(std::min(p, q)) + "," +
                           point_str(std::max(p, q)) +
                           ") crosses another pair");
      stack.pop_back();
    }
  }
  return Diagram(n, std::move(match));
}

Diagram Diagram::identity(int n) {
  if (n < 0) throw domain_error("diagram size must be nonnegative");
  std::vector<int> match(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    match[static_cast<std::size_t>(i)] = 2 * n - 1 - i;
    match[static_cast<std::size_t>(2 * n - 1 - i)] = i;
  }
  return Diagram(n, std::move(match));
}

Diagram Diagram::generator(int n, int i) {
  if (n < 2 || i < 1 || i > n - 1)
    throw domain_error("generator index " + std::to_string(i) +
                       " out of range 1.." + std::to_string(n - 1));
  std::vector<int> match(static_cast<std::size_t>(2 * n), -1);
  auto join = [&](int a, int b) {
    match[static_cast<std::size_t>(a)] = b;
    match[static_cast<std::size_t>(b)] = a;
  };
  join(i - 1, i);                  // bottom cap at (i, i+1)
  join(2 * n - i, 2 * n - i - 1);  // top cup at positions (i, i+1)
  for (int b = 1; b <= n; ++b)
    if (b != i && b != i + 1) join(b - 1, 2 * n - b);
  return Diagram(n, std::move(match));
}

bool Diagram::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (match_[static_cast<std::size_t>(i)] != 2 * n_ - 1 - i) return false;
  return true;
}

std::vector<std::pair<int, int>> Diagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int p = 0; p < 2 * n_; ++p) {
    int q = match_[static_cast<std::size_t>(p)];
    if (q > p) out.emplace_back(p, q);
  }
  return out;
}

ScaledDiagram compose(const Diagram& a, const Diagram& b) {
  if (a.n() != b.n())
    throw domain_error("cannot compose diagrams of sizes " +
                       std::to_string(a.n()) + " and " + std::to_string(b.n()));
  const int n = a.n();
  const int m = 2 * n;

  // Walk a strand: each step crosses one pair edge, then (if the endpoint is
  // interior) one glue edge.  Glue identifies a's top position p with b's
  // bottom position p, i.e. a-point 2n-p with b-point p-1.
  std::vector<bool> va(static_cast<std::size_t>(m), false);
  std::vector<bool> vb(static_cast<std::size_t>(m), false);

  // state: (in_a, point); returns the composite endpoint reached.
  // Composite points: bottoms are a-points 0..n-1, tops are b-points n..2n-1.
  auto walk = [&](bool in_a, int p) {
    for (;;) {
      if (in_a) {
        int q = a.partner(p);
        va[static_cast<std::size_t>(p)] = va[static_cast<std::size_t>(q)] = true;
        if (q < n) return std::pair<bool, int>(true, q);  // composite bottom
        p = (2 * n - q) - 1;  // a top position 2n-q -> b bottom point
        in_a = false;
      } else {
        int q = b.partner(p);
        vb[static_cast<std::size_t>(p)] = vb[static_cast<std::size_t>(q)] = true;
        if (q >= n) return std::pair<bool, int>(false, q);  // composite top
        p = 2 * n - 1 - q;  // b bottom position q+1 -> a top point
        in_a = true;
      }
    }
  };

  // Composite point p is a-point p for p < n (bottom) and b-point p for
  // p >= n (top); both sides use the same index, so endpoints map directly.
  std::vector<int> match(static_cast<std::size_t>(m), -1);
  for (int start = 0; start < m; ++start) {
    bool in_a = start < n;
    if (in_a ? va[static_cast<std::size_t>(start)]
             : vb[static_cast<std::size_t>(start)])
      continue;
    auto [end_in_a, end_p] = walk(in_a, start);
    (void)end_in_a;
    match[static_cast<std::size_t>(start)] = end_p;
    match[static_cast<std::size_t>(end_p)] = start;
  }

  // Interior loops: cycles that never touch the composite boundary.  Every
  // such cycle alternates a-pairs and b-pairs, so it is found from an
  // unvisited a-pair.
  long long loops = 0;
  for (int p = 0; p < m; ++p) {
    if (va[static_cast<std::size_t>(p)]) continue;
    ++loops;
    bool in_a = true;
    int cur = p;
    do {
      if (in_a) {
        int q = a.partner(cur);
        va[static_cast<std::size_t>(cur)] = va[static_cast<std::size_t>(q)] = true;
        cur = (2 * n - q) - 1;
        in_a = false;
      } else {
        int q = b.partner(cur);
        vb[static_cast<std::size_t>(cur)] = vb[static_cast<std::size_t>(q)] = true;
        cur = 2 * n - 1 - q;
        in_a = true;
      }
    } while (!(in_a && cur == p));
  }

  return ScaledDiagram{loops, Diagram::from_match(n, std::move(match))};
}

ScaledDiagram compose(const ScaledDiagram& a, const ScaledDiagram& b) {
  ScaledDiagram r = compose(a.diagram, b.diagram);
  r.power = add_checked(r.power, add_checked(a.power, b.power));
  return r;
}

unsigned long long count_diagrams(int n) {
  if (n < 0) throw domain_error("diagram size must be nonnegative");
  std::vector<unsigned long long> u(static_cast<std::size_t>(n) + 1, 0);
  u[0] = 1;
  for (int m = 1; m <= n; ++m) {
    unsigned long long total = 0;
    for (int k = 0; k < m; ++k) {
      unsigned long long prod;
      if (__builtin_mul_overflow(u[static_cast<std::size_t>(k)],
                                 u[static_cast<std::size_t>(m - 1 - k)], &prod) ||
          __builtin_add_overflow(total, prod, &total))
        throw domain_error("diagram count overflows 64 bits at n=" +
                           std::to_string(m));
    }
    u[static_cast<std::size_t>(m)] = total;
  }
  return u[static_cast<std::size_t>(n)];
}

std::vector<Diagram> enumerate_diagrams(int n, int max_n) {
  if (n < 0) throw domain_error("diagram size must be nonnegative");
  if (n > max_n)
    throw domain_error("enumeration guarded at n <= " + std::to_string(max_n) +
                       " (got n=" + std::to_string(n) + ")");
  std::vector<Diagram> out;
  out.reserve(static_cast<std::size_t>(count_diagrams(n)));
  std::vector<int> match(static_cast<std::size_t>(2 * n), -1);

  // Enumerate noncrossing matchings segment by segment: take the next open
  // segment [lo, hi), pair lo with each point at odd distance, and recurse on
  // the inside and outside sub-segments.  A worklist of segments keeps the
  // "emit when everything is matched" logic in one place.
  auto fill = [&](auto&& self, std::vector<std::pair<int, int>> segments) -> void {
    while (!segments.empty() && segments.back().first >= segments.back().second)
      segments.pop_back();
    if (segments.empty()) {
      out.push_back(Diagram::from_match(n, match));
      return;
    }
    auto [lo, hi] = segments.back();
    segments.pop_back();
    for (int q = lo + 1; q < hi; q += 2) {
      match[static_cast<std::size_t>(lo)] = q;
      match[static_cast<std::size_t>(q)] = lo;
      auto next = segments;
      next.emplace_back(q + 1, hi);   // outside
      next.emplace_back(lo + 1, q);   // inside (filled first)
      self(self, std::move(next));
      match[static_cast<std::size_t>(lo)] = -1;
      match[static_cast<std::size_t>(q)] = -1;
    }
  };
  fill(fill, {{0, 2 * n}});
  return out;
}

std::string to_dyck(const Diagram& d) {
  std::string path;
  path.reserve(static_cast<std::size_t>(2 * d.n()));
  for (int p = 0; p < 2 * d.n(); ++p)
    path.push_back(d.partner(p) > p ? 'R' : 'U');
  return path;
}

Diagram from_dyck(const std::string& path) {
  for (std::size_t i = 0; i < path.size(); ++i)
    if (path[i] != 'R' && path[i] != 'U')
      throw domain_error("bad step '" + std::string(1, path[i]) +
                         "' at position " + std::to_string(i + 1) +
                         ": expected 'R' or 'U'");
  if (path.size() % 2 != 0)
    throw domain_error("path length must be even, got " +
                       std::to_string(path.size()));
  const int n = static_cast<int>(path.size() / 2);
  std::vector<int> match(path.size(), -1);
  std::vector<int> stack;
  for (int p = 0; p < 2 * n; ++p) {
    if (path[static_cast<std::size_t>(p)] == 'R') {
      stack.push_back(p);
    } else {
      if (stack.empty())
        throw domain_error("step 'U' at position " + std::to_string(p + 1) +
                           " closes nothing");
      match[static_cast<std::size_t>(p)] = stack.back();
      match[static_cast<std::size_t>(stack.back())] = p;
      stack.pop_back();
    }
  }
  if (!stack.empty())
    throw domain_error("path leaves " + std::to_string(stack.size()) +
                       " step(s) unclosed");
  return Diagram::from_match(n, std::move(match));
}

Diagram transpose(const Diagram& d) {
  const int m = 2 * d.n();
  std::vector<int> match(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p)
    match[static_cast<std::size_t>(p)] = m - 1 - d.partner(m - 1 - p);
  return Diagram::from_match(d.n(), std::move(match));
}

std::string format_diagram(const Diagram& d) {
  std::ostringstream out;
  out << "n=" << d.n() << " [";
  bool first = true;
  for (const auto& [a, b] : d.pairs()) {
    if (!first) out << ",";
    out << "(" << a + 1 << "," << b + 1 << ")";
    first = false;
  }
  out << "]";
  return out.str();
}

std::string format_scaled(const ScaledDiagram& s) {
  std::ostringstream out;
  out << "delta^" << s.power << " * " << format_diagram(s.diagram);
  return out.str();
}

Diagram parse_diagram(const std::string& text) {
  std::size_t pos = 0;
  const auto fail = [&](const std::string& why) -> void {
    throw domain_error("bad diagram at position " + std::to_string(pos + 1) +
                       ": " + why);
  };
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  const auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  };
  const auto parse_int = [&]() -> int {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected an integer");
    long v = std::strtol(text.substr(start, pos - start).c_str(), nullptr, 10);
    if (v > 1000000) fail("integer too large");
    return static_cast<int>(v);
  };

  skip_ws();
  expect('n');
  expect('=');
  int n = parse_int();
  expect('[');
  std::vector<std::pair<int, int>> pairs;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      expect('(');
      int a = parse_int();
      expect(',');
      int b = parse_int();
      expect(')');
      pairs.emplace_back(a, b);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect(']');
      break;
    }
  }
  skip_ws();
  if (pos != text.size()) fail("trailing characters");
  return Diagram::make(n, pairs);
}

}  // namespace tl
