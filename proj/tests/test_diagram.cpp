// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <algorithm>
#include <set>

#include "tl/common.hpp"
#include "tl/diagram.hpp"

using tl::Diagram;

namespace {
Diagram D(int n, const std::vector<std::pair<int, int>>& pairs) {
  return Diagram::make(n, pairs);
}
}  // namespace

TEST_CASE("construction validates the matching") {
  CHECK_NOTHROW(D(2, {{1, 2}, {3, 4}}));
  CHECK_NOTHROW(D(1, {{1, 2}}));

  // not a perfect matching
  CHECK_THROWS_AS(D(2, {{1, 2}}), tl::domain_error);
  // repeated point
  CHECK_THROWS_AS(D(2, {{1, 2}, {2, 3}}), tl::domain_error);
  // fixed point
  CHECK_THROWS_AS(D(2, {{1, 1}, {2, 3}}), tl::domain_error);
  // out of range
  CHECK_THROWS_AS(D(2, {{1, 2}, {3, 5}}), tl::domain_error);
  CHECK_THROWS_AS(D(2, {{0, 1}, {2, 3}}), tl::domain_error);
  // crossing: 1-3 over 2-4 in circle order
  CHECK_THROWS_AS(D(2, {{1, 3}, {2, 4}}), tl::domain_error);

  CHECK_THROWS_AS(Diagram::from_match(1, {1, 0, 3, 2}), tl::domain_error);
  CHECK_THROWS_AS(Diagram::from_match(1, {0, 1}), tl::domain_error);
  CHECK_NOTHROW(Diagram::from_match(1, {1, 0}));
}

TEST_CASE("identity and hook generators") {
  const Diagram id3 = Diagram::identity(3);
  CHECK(id3.is_identity());
  CHECK(id3 == D(3, {{1, 6}, {2, 5}, {3, 4}}));

  // E_1 on two strands: bottom cap (1,2), top cup (3,4)
  CHECK(Diagram::generator(2, 1) == D(2, {{1, 2}, {3, 4}}));
  CHECK_FALSE(Diagram::generator(2, 1).is_identity());

  // E_2 on four strands: cap (2,3), cup at top positions (2,3) = points 7,6
  CHECK(Diagram::generator(4, 2) == D(4, {{1, 8}, {2, 3}, {4, 5}, {6, 7}}));

  CHECK_THROWS_AS(Diagram::generator(2, 0), tl::domain_error);
  CHECK_THROWS_AS(Diagram::generator(2, 2), tl::domain_error);
}

TEST_CASE("boundary numbering helpers") {
  const Diagram id4 = Diagram::identity(4);
  // top position 1 (leftmost) is point 2n = 8, i.e. 0-based 7
  CHECK(id4.top_point(1) == 7);
  CHECK(id4.top_point(4) == 4);
  CHECK(id4.top_position(7) == 1);
  CHECK(id4.top_position(4) == 4);
  // identity joins bottom i (0-based i-1) straight up
  for (int i = 0; i < 4; ++i) CHECK(id4.partner(i) == id4.top_point(i + 1));
}

TEST_CASE("composition stacks and counts loops") {
  const Diagram e1 = Diagram::generator(2, 1);
  // E_1 E_1 closes one loop and returns E_1
  CHECK(tl::compose(e1, e1) == tl::ScaledDiagram{1, e1});
  // identity absorbs
  CHECK(tl::compose(Diagram::identity(2), e1) == tl::ScaledDiagram{0, e1});
  CHECK(tl::compose(e1, Diagram::identity(2)) == tl::ScaledDiagram{0, e1});

  // hand-traced products on three strands
  const Diagram a1 = Diagram::generator(3, 1);
  const Diagram a2 = Diagram::generator(3, 2);
  CHECK(tl::compose(a1, a2) ==
        tl::ScaledDiagram{0, D(3, {{1, 2}, {3, 6}, {4, 5}})});
  CHECK(tl::compose(a2, a1) ==
        tl::ScaledDiagram{0, D(3, {{1, 4}, {2, 3}, {5, 6}})});
  // E_1 E_2 E_1 = E_1: the hook relation as diagrams
  CHECK(tl::compose(tl::compose(a1, a2).diagram, a1) ==
        tl::ScaledDiagram{0, a1});

  // scaled composition adds powers
  CHECK(tl::compose(tl::ScaledDiagram{2, e1}, tl::ScaledDiagram{3, e1}) ==
        tl::ScaledDiagram{6, e1});

  CHECK_THROWS_AS(tl::compose(e1, a1), tl::domain_error);  // size mismatch
}

TEST_CASE("diagram counts are the Catalan numbers") {
  const unsigned long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n <= 8; ++n) CHECK(tl::count_diagrams(n) == catalan[n]);
  CHECK(tl::count_diagrams(30) == 3814986502092304ULL);
  CHECK_THROWS_AS(tl::count_diagrams(-1), tl::domain_error);
}

TEST_CASE("enumeration is complete, valid, and duplicate-free") {
  for (int n = 0; n <= 6; ++n) {
    const std::vector<Diagram> all = tl::enumerate_diagrams(n);
    CHECK(all.size() == tl::count_diagrams(n));
    std::set<Diagram> dedup(all.begin(), all.end());
    CHECK(dedup.size() == all.size());
    for (const Diagram& d : all) {
      // re-validate through the checking constructor
      std::vector<int> match;
      for (int p = 0; p < 2 * n; ++p) match.push_back(d.partner(p));
      CHECK_NOTHROW(Diagram::from_match(n, match));
    }
  }
  CHECK_THROWS_AS(tl::enumerate_diagrams(9), tl::domain_error);
}

TEST_CASE("balanced-path bijection") {
  CHECK(tl::to_dyck(Diagram::generator(2, 1)) == "RURU");
  CHECK(tl::to_dyck(Diagram::identity(2)) == "RRUU");
  CHECK(tl::from_dyck("RURU") == Diagram::generator(2, 1));
  CHECK(tl::from_dyck("RRUU") == Diagram::identity(2));

  for (int n = 0; n <= 6; ++n) {
    std::set<std::string> paths;
    for (const Diagram& d : tl::enumerate_diagrams(n)) {
      const std::string p = tl::to_dyck(d);
      CHECK(p.size() == 2 * static_cast<std::size_t>(n));
      CHECK(tl::from_dyck(p) == d);
      paths.insert(p);
    }
    CHECK(paths.size() == tl::count_diagrams(n));
  }

  CHECK_THROWS_AS(tl::from_dyck("RRU"), tl::domain_error);   // odd length
  CHECK_THROWS_AS(tl::from_dyck("UU"), tl::domain_error);    // closes nothing
  CHECK_THROWS_AS(tl::from_dyck("RR"), tl::domain_error);    // left open
  CHECK_THROWS_AS(tl::from_dyck("RXRU"), tl::domain_error);  // bad letter
}

TEST_CASE("transpose flips top and bottom") {
  const Diagram a1 = Diagram::generator(3, 1);
  const Diagram a2 = Diagram::generator(3, 2);
  CHECK(tl::transpose(a1) == a1);
  CHECK(tl::transpose(Diagram::identity(5)) == Diagram::identity(5));
  // (E_1 E_2)^T = E_2 E_1
  CHECK(tl::transpose(tl::compose(a1, a2).diagram) ==
        tl::compose(a2, a1).diagram);
  for (const Diagram& d : tl::enumerate_diagrams(5))
    CHECK(tl::transpose(tl::transpose(d)) == d);
}

TEST_CASE("text format round-trips") {
  const Diagram e2 = Diagram::generator(4, 2);
  CHECK(tl::format_diagram(e2) == "n=4 [(1,8),(2,3),(4,5),(6,7)]");
  CHECK(tl::parse_diagram("n=4 [(1,8),(2,3),(4,5),(6,7)]") == e2);
  CHECK(tl::parse_diagram(" n=4  [ (2,3), (1,8), (6,7), (4,5) ] ") == e2);
  CHECK(tl::format_scaled({0, e2}) == "delta^0 * n=4 [(1,8),(2,3),(4,5),(6,7)]");
  CHECK(tl::format_scaled({3, Diagram::identity(1)}) == "delta^3 * n=1 [(1,2)]");
  CHECK(tl::format_diagram(Diagram::identity(0)) == "n=0 []");
  CHECK(tl::parse_diagram("n=0 []") == Diagram::identity(0));

  for (const Diagram& d : tl::enumerate_diagrams(5))
    CHECK(tl::parse_diagram(tl::format_diagram(d)) == d);

  CHECK_THROWS_AS(tl::parse_diagram(""), tl::domain_error);
  CHECK_THROWS_AS(tl::parse_diagram("n=2"), tl::domain_error);
  CHECK_THROWS_AS(tl::parse_diagram("m=2 [(1,2),(3,4)]"), tl::domain_error);
  CHECK_THROWS_AS(tl::parse_diagram("n=2 [(1,2),(3,4)"), tl::domain_error);
  CHECK_THROWS_AS(tl::parse_diagram("n=2 [(1,2)(3,4)]"), tl::domain_error);
  CHECK_THROWS_AS(tl::parse_diagram("n=2 [(1,2),(3,x)]"), tl::domain_error);
  // the position of the offense is cited
  try {
    tl::parse_diagram("n=2 [(1,2),(3,x)]");
    CHECK(false);
  } catch (const tl::domain_error& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}
