// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
#include "tl/category.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <tuple>

#include "tl/jnf.hpp"

namespace tl {

ObjectWord ObjectWord::plain(int size) {
  if (size < 0) throw domain_error("object size must be nonnegative");
  ObjectWord o;
  o.mode = Mode::plain;
  o.syms.assign(static_cast<std::size_t>(size), Sym::vee);
  return o;
}

ObjectWord ObjectWord::oriented(std::vector<Sym> syms) {
  ObjectWord o;
  o.mode = Mode::oriented;
  o.syms = std::move(syms);
  return o;
}

bool operator<(const ONet& a, const ONet& b) {
  return std::tie(a.bottom, a.top, a.pairing, a.scalar_exp) <
         std::tie(b.bottom, b.top, b.pairing, b.scalar_exp);
}

namespace {

std::string slice_label(std::size_t i) {
  return "slice " + std::to_string(i + 1);
}

void validate_gen(const GenArrow& gen, Mode mode, std::size_t slice_index) {
  if (mode == Mode::plain) {
    if (gen.first != Sym::vee || gen.second != Sym::vee)
      throw domain_error(slice_label(slice_index) +
                         ": plain generators carry no orientation");
  } else {
    if (gen.first == gen.second)
      throw domain_error(slice_label(slice_index) +
                         ": oriented generators need opposite symbols");
  }
}

long long loop_contribution(const GenArrow& cap, Mode mode,
                            BubbleConvention conv) {
  if (mode == Mode::plain) return 1;
  long long sign =
      (cap.first == Sym::vee && cap.second == Sym::wedge) ? 1 : -1;
  return conv == BubbleConvention::positive ? sign : -sign;
}

}  // namespace

std::vector<ObjectWord> typecheck(const MTerm& term) {
  std::vector<ObjectWord> bounds;
  bounds.push_back(term.dom);
  ObjectWord cur = term.dom;
  for (std::size_t i = 0; i < term.slices.size(); ++i) {
    const Slice& s = term.slices[i];
    validate_gen(s.gen, term.dom.mode, i);
    if (s.left < 0)
      throw domain_error(slice_label(i) + ": negative position");
    const std::size_t l = static_cast<std::size_t>(s.left);
    if (s.gen.kind == GenKind::cap) {
      if (l + 2 > cur.syms.size())
        throw domain_error(slice_label(i) + ": cap needs strands " +
                           std::to_string(s.left + 1) + "," +
                           std::to_string(s.left + 2) + " but the boundary has " +
                           std::to_string(cur.syms.size()));
      if (term.dom.mode == Mode::oriented &&
          (cur.syms[l] != s.gen.first || cur.syms[l + 1] != s.gen.second))
        throw domain_error(slice_label(i) +
                           ": cap orientation disagrees with the boundary");
      cur.syms.erase(cur.syms.begin() + static_cast<long>(l),
                     cur.syms.begin() + static_cast<long>(l) + 2);
    } else {
      if (l > cur.syms.size())
        throw domain_error(slice_label(i) + ": cup position " +
                           std::to_string(s.left) + " exceeds the boundary (" +
                           std::to_string(cur.syms.size()) + " strands)");
      cur.syms.insert(cur.syms.begin() + static_cast<long>(l),
                      {s.gen.first, s.gen.second});
    }
    bounds.push_back(cur);
  }
  return bounds;
}

ObjectWord cod(const MTerm& term) { return typecheck(term).back(); }

MTerm identity_term(const ObjectWord& obj) { return MTerm{obj, {}}; }

MTerm compose_terms(const MTerm& a, const MTerm& b) {
  ObjectWord mid = cod(a);
  if (mid != b.dom)
    throw domain_error("composition mismatch: codomain " + format_object(mid) +
                       " vs domain " + format_object(b.dom));
  MTerm r = a;
  r.slices.insert(r.slices.end(), b.slices.begin(), b.slices.end());
  return r;
}

MTerm tensor_terms(const MTerm& a, const MTerm& b) {
  if (a.dom.mode != b.dom.mode)
    throw domain_error("cannot tensor terms of different modes");
  MTerm r;
  r.dom = a.dom;
  r.dom.syms.insert(r.dom.syms.end(), b.dom.syms.begin(), b.dom.syms.end());
  r.slices = a.slices;
  const int offset = cod(a).size();
  for (Slice s : b.slices) {
    s.left += offset;
    r.slices.push_back(s);
  }
  return r;
}

ONet eval_net(const MTerm& term, BubbleConvention conv) {
  typecheck(term);
  const Mode mode = term.dom.mode;
  const int B = term.dom.size();

  // Strand ends: a through end remembers its bottom point, an arc end its
  // partner end.  Boundary holds the live ends left to right.
  struct End {
    bool through = false;
    int bottom = -1;
    int partner = -1;
    Sym sym = Sym::vee;
  };
  std::vector<End> arena;
  std::vector<int> boundary;
  for (int i = 0; i < B; ++i) {
    arena.push_back(End{true, i, -1, term.dom.syms[static_cast<std::size_t>(i)]});
    boundary.push_back(i);
  }
  std::vector<std::pair<int, int>> bottom_pairs;
  long long scalar = 0;

  for (const Slice& s : term.slices) {
    const std::size_t l = static_cast<std::size_t>(s.left);
    if (s.gen.kind == GenKind::cup) {
      const int ia = static_cast<int>(arena.size());
      const int ib = ia + 1;
      arena.push_back(End{false, -1, ib, s.gen.first});
      arena.push_back(End{false, -1, ia, s.gen.second});
      boundary.insert(boundary.begin() + static_cast<long>(l), {ia, ib});
    } else {
      const int x = boundary[l];
      const int y = boundary[l + 1];
      if (!arena[static_cast<std::size_t>(x)].through &&
          arena[static_cast<std::size_t>(x)].partner == y) {
        scalar = add_checked(scalar, loop_contribution(s.gen, mode, conv));
      } else {
        End& ex = arena[static_cast<std::size_t>(x)];
        End& ey = arena[static_cast<std::size_t>(y)];
        if (ex.through && ey.through) {
          bottom_pairs.emplace_back(ex.bottom, ey.bottom);
        } else if (ex.through) {
          End& far = arena[static_cast<std::size_t>(ey.partner)];
          far.through = true;
          far.bottom = ex.bottom;
          far.partner = -1;
        } else if (ey.through) {
          End& far = arena[static_cast<std::size_t>(ex.partner)];
          far.through = true;
          far.bottom = ey.bottom;
          far.partner = -1;
        } else {
          arena[static_cast<std::size_t>(ex.partner)].partner = ey.partner;
          arena[static_cast<std::size_t>(ey.partner)].partner = ex.partner;
        }
      }
      boundary.erase(boundary.begin() + static_cast<long>(l),
                     boundary.begin() + static_cast<long>(l) + 2);
    }
  }

  const int T = static_cast<int>(boundary.size());
  ONet net;
  net.bottom = term.dom;
  net.top.mode = mode;
  net.scalar_exp = scalar;
  net.pairing.assign(static_cast<std::size_t>(B + T), -1);

  // Boundary slot t (left to right) is top position t+1, i.e. circle point
  // B + T - 1 - t.
  std::vector<int> slot_of_end(arena.size(), -1);
  for (int t = 0; t < T; ++t)
    slot_of_end[static_cast<std::size_t>(boundary[static_cast<std::size_t>(t)])] = t;
  auto circle_of_slot = [&](int t) { return B + T - 1 - t; };

  net.top.syms.resize(static_cast<std::size_t>(T));
  for (int t = 0; t < T; ++t)
    net.top.syms[static_cast<std::size_t>(t)] =
        arena[static_cast<std::size_t>(boundary[static_cast<std::size_t>(t)])].sym;

  auto link = [&](int u, int v) {
    net.pairing[static_cast<std::size_t>(u)] = v;
    net.pairing[static_cast<std::size_t>(v)] = u;
  };
  for (int t = 0; t < T; ++t) {
    const End& e = arena[static_cast<std::size_t>(boundary[static_cast<std::size_t>(t)])];
    if (e.through) {
      link(e.bottom, circle_of_slot(t));
    } else {
      int u = slot_of_end[static_cast<std::size_t>(e.partner)];
      if (u < 0) throw internal_error("arc end lost its partner");
      if (u > t) link(circle_of_slot(t), circle_of_slot(u));
    }
  }
  for (const auto& [b1, b2] : bottom_pairs) link(b1, b2);

  for (int p = 0; p < B + T; ++p)
    if (net.pairing[static_cast<std::size_t>(p)] < 0)
      throw internal_error("net pairing is incomplete");
  return net;
}

ONet diagram_net(const Diagram& d) {
  ONet net;
  net.bottom = ObjectWord::plain(d.n());
  net.top = ObjectWord::plain(d.n());
  net.pairing.resize(static_cast<std::size_t>(2 * d.n()));
  for (int p = 0; p < 2 * d.n(); ++p)
    net.pairing[static_cast<std::size_t>(p)] = d.partner(p);
  return net;
}

namespace {

// Exchange two adjacent slices when they are horizontally disjoint,
// adjusting positions; returns false when one depends on the other.
// slices[t] runs first; after a successful swap the old slices[t+1] runs
// first at index t.
bool try_swap_adjacent(std::vector<Slice>& slices, std::size_t t) {
  Slice c = slices[t];
  Slice d = slices[t + 1];
  const int lc = c.left;
  const int ld = d.left;
  const bool c_cup = c.gen.kind == GenKind::cup;
  const bool d_cup = d.gen.kind == GenKind::cup;
  int nc = 0;
  int nd = 0;
  if (c_cup && d_cup) {
    if (ld <= lc) {
      nd = ld;
      nc = lc + 2;
    } else if (ld >= lc + 2) {
      nd = ld - 2;
      nc = lc;
    } else {
      return false;  // d would insert between c's two strands
    }
  } else if (c_cup && !d_cup) {
    // d consumes positions {ld+1, ld+2}; c created {lc+1, lc+2}.
    if (ld + 2 <= lc) {
      nd = ld;
      nc = lc - 2;
    } else if (ld >= lc + 2) {
      nd = ld - 2;
      nc = lc;
    } else {
      return false;  // overlapping: that is a redex, not an exchange
    }
  } else if (!c_cup && d_cup) {
    // Inserting at the consumed gap (ld == lc) lands left of the doomed
    // pair; both sides are exchange-equal, and left keeps this total.
    if (ld <= lc) {
      nd = ld;
      nc = lc + 2;
    } else {
      nd = ld + 2;
      nc = lc;
    }
  } else {
    if (ld + 2 <= lc) {
      nd = ld;
      nc = lc - 2;
    } else if (ld >= lc) {
      nd = ld + 2;
      nc = lc;
    } else {
      return false;  // ld == lc-1: d's strands straddle c's pair
    }
  }
  d.left = nd;
  c.left = nc;
  slices[t] = d;
  slices[t + 1] = c;
  return true;
}

struct Candidate {
  std::size_t cup = 0;
  std::size_t cap = 0;
  int hits = 0;  // 1 = zigzag, 2 = bubble
};

// Track each cup's two created strand positions forward; a later cap whose
// consumed window touches them is a cancellable pair modulo exchange.
std::vector<Candidate> find_candidates(const std::vector<Slice>& slices) {
  std::vector<Candidate> out;
  for (std::size_t a = 0; a < slices.size(); ++a) {
    if (slices[a].gen.kind != GenKind::cup) continue;
    int p1 = slices[a].left + 1;
    int p2 = slices[a].left + 2;
    bool live1 = true;
    bool live2 = true;
    for (std::size_t b = a + 1; b < slices.size() && (live1 || live2); ++b) {
      const int l = slices[b].left;
      if (slices[b].gen.kind == GenKind::cup) {
        if (live1 && p1 >= l + 1) p1 += 2;
        if (live2 && p2 >= l + 1) p2 += 2;
      } else {
        const bool hit1 = live1 && (p1 == l + 1 || p1 == l + 2);
        const bool hit2 = live2 && (p2 == l + 1 || p2 == l + 2);
        if (hit1 || hit2)
          out.push_back(Candidate{a, b, (hit1 ? 1 : 0) + (hit2 ? 1 : 0)});
        if (hit1)
          live1 = false;
        else if (live1 && p1 > l + 2)
          p1 -= 2;
        if (hit2)
          live2 = false;
        else if (live2 && p2 > l + 2)
          p2 -= 2;
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Candidate& x, const Candidate& y) {
                     return std::tie(x.cup, x.cap) < std::tie(y.cup, y.cap);
                   });
  return out;
}

// Bring the candidate pair together by exchanges and cancel it.  Returns
// false when every exchange route is blocked.
bool fire_candidate(MTerm& term, long long& scalar, const Candidate& cand,
                    BubbleConvention conv) {
  std::vector<Slice> work = term.slices;
  std::size_t a = cand.cup;
  std::size_t b = cand.cap;
  bool ok = true;
  for (std::size_t t = b; t > a + 1 && ok; --t)
    ok = try_swap_adjacent(work, t - 1);
  if (ok) {
    b = a + 1;
  } else {
    work = term.slices;
    ok = true;
    for (std::size_t t = a; t + 1 < b && ok; ++t)
      ok = try_swap_adjacent(work, t);
    a = b - 1;
  }
  if (!ok) return false;

  const Slice& cup = work[a];
  const Slice& cap = work[a + 1];
  if (cup.gen.kind != GenKind::cup || cap.gen.kind != GenKind::cap)
    throw internal_error("cancellable pair lost its shape while moving");
  if (cap.left == cup.left) {
    scalar = add_checked(scalar,
                         loop_contribution(cap.gen, term.dom.mode, conv));
  } else if (cap.left != cup.left - 1 && cap.left != cup.left + 1) {
    throw internal_error("cancelled pair is neither a bubble nor a zigzag");
  }
  work.erase(work.begin() + static_cast<long>(a),
             work.begin() + static_cast<long>(a) + 2);
  term.slices = std::move(work);
  return true;
}

}  // namespace

NormalizeTermResult normalize_term(const MTerm& term, BubbleConvention conv,
                                   std::vector<MTerm>* stages) {
  typecheck(term);
  NormalizeTermResult res;
  res.term = term;
  for (;;) {
    const std::vector<Candidate> cands = find_candidates(res.term.slices);
    if (cands.empty()) break;
    bool fired = false;
    for (const Candidate& cand : cands) {
      if (!fire_candidate(res.term, res.scalar_exp, cand, conv)) continue;
      ++res.steps;
      if (stages) stages->push_back(res.term);
      fired = true;
      break;
    }
    if (!fired)
      throw internal_error("a cancellable pair resisted every exchange move");
  }

  // Soundness check: the evaluated net, scalar included, is unchanged, and
  // nothing in the normal term still closes a loop.
  const ONet before = eval_net(term, conv);
  const ONet after = eval_net(res.term, conv);
  if (after.scalar_exp != 0)
    throw internal_error("normal term still closes a loop");
  if (before.pairing != after.pairing || before.top != after.top ||
      before.bottom != after.bottom ||
      before.scalar_exp != add_checked(after.scalar_exp, res.scalar_exp))
    throw internal_error("normalization changed the evaluated net");
  return res;
}

MTerm exchange_canonical(const MTerm& term) {
  typecheck(term);
  MTerm out;
  out.dom = term.dom;
  std::vector<Slice> rest = term.slices;
  while (!rest.empty()) {
    using Key = std::tuple<int, int, int, int>;
    std::optional<Key> best;
    std::vector<Slice> best_work;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      std::vector<Slice> work = rest;
      bool ok = true;
      for (std::size_t t = i; t > 0 && ok; --t)
        ok = try_swap_adjacent(work, t - 1);
      if (!ok) continue;
      Key key{work[0].left, static_cast<int>(work[0].gen.kind),
              static_cast<int>(work[0].gen.first),
              static_cast<int>(work[0].gen.second)};
      if (!best || key < *best) {
        best = key;
        best_work = std::move(work);
      }
    }
    if (!best) throw internal_error("no slice can reach the front");
    out.slices.push_back(best_work.front());
    rest.assign(best_work.begin() + 1, best_work.end());
  }
  return out;
}

std::vector<CatCriticalPair> modulo_critical_pairs(Mode mode,
                                                   BubbleConvention conv) {
  std::vector<CatCriticalPair> out;

  auto settle = [&](const std::string& family, const MTerm& source,
                    std::size_t redex_a, std::size_t redex_b) {
    const std::vector<Candidate> cands = find_candidates(source.slices);
    if (cands.size() != 2)
      throw internal_error("overlap source has " +
                           std::to_string(cands.size()) +
                           " cancellable pairs instead of 2");
    CatCriticalPair cp;
    cp.family = family;
    cp.source = source;
    for (int side = 0; side < 2; ++side) {
      const Candidate& cand = cands[side == 0 ? redex_a : redex_b];
      MTerm t = source;
      long long scalar = 0;
      if (!fire_candidate(t, scalar, cand, conv))
        throw internal_error("overlap redex is blocked");
      NormalizeTermResult nf = normalize_term(t, conv);
      nf.scalar_exp = add_checked(nf.scalar_exp, scalar);
      nf.steps += 1;
      (side == 0 ? cp.branch_a : cp.branch_b) = std::move(nf);
    }
    cp.joined =
        cp.branch_a.scalar_exp == cp.branch_b.scalar_exp &&
        exchange_canonical(cp.branch_a.term) == exchange_canonical(cp.branch_b.term);
    out.push_back(std::move(cp));
  };

  auto cup_gen = [&](Sym a, Sym b) { return GenArrow{GenKind::cup, a, b}; };
  auto cap_gen = [&](Sym a, Sym b) { return GenArrow{GenKind::cap, a, b}; };

  if (mode == Mode::plain) {
    const Sym v = Sym::vee;
    // Two cups feeding one cap.
    MTerm a{ObjectWord::plain(0),
            {Slice{0, cup_gen(v, v)}, Slice{2, cup_gen(v, v)},
             Slice{1, cap_gen(v, v)}}};
    settle("cup-cap-cup", a, 0, 1);
    // One cup split between two caps.
    MTerm b{ObjectWord::plain(2),
            {Slice{1, cup_gen(v, v)}, Slice{0, cap_gen(v, v)},
             Slice{0, cap_gen(v, v)}}};
    settle("cap-cup-cap", b, 0, 1);
  } else {
    for (Sym s : {Sym::vee, Sym::wedge}) {
      // Middle cap reads (s, flipped(s)); the cups supply the outer strands.
      const Sym f = flipped(s);
      MTerm a{ObjectWord::oriented({}),
              {Slice{0, cup_gen(f, s)}, Slice{2, cup_gen(f, s)},
               Slice{1, cap_gen(s, f)}}};
      settle("cup-cap-cup", a, 0, 1);
      MTerm b{ObjectWord::oriented({f, s}),
              {Slice{1, cup_gen(s, f)}, Slice{0, cap_gen(f, s)},
               Slice{0, cap_gen(f, s)}}};
      settle("cap-cup-cap", b, 0, 1);
    }
  }
  return out;
}

std::vector<MTerm> zigzag_terms(Mode mode) {
  std::vector<MTerm> out;
  auto cup_gen = [&](Sym a, Sym b) { return GenArrow{GenKind::cup, a, b}; };
  auto cap_gen = [&](Sym a, Sym b) { return GenArrow{GenKind::cap, a, b}; };
  if (mode == Mode::plain) {
    const Sym v = Sym::vee;
    out.push_back(MTerm{ObjectWord::plain(1),
                        {Slice{1, cup_gen(v, v)}, Slice{0, cap_gen(v, v)}}});
    out.push_back(MTerm{ObjectWord::plain(1),
                        {Slice{0, cup_gen(v, v)}, Slice{1, cap_gen(v, v)}}});
  } else {
    for (Sym s : {Sym::vee, Sym::wedge}) {
      const Sym f = flipped(s);
      // Right bend: strand s, cup to its right, cap closing leftward.
      out.push_back(MTerm{ObjectWord::oriented({s}),
                          {Slice{1, cup_gen(f, s)}, Slice{0, cap_gen(s, f)}}});
      // Left bend: cup to the left, cap closing rightward.
      out.push_back(MTerm{ObjectWord::oriented({s}),
                          {Slice{0, cup_gen(s, f)}, Slice{1, cap_gen(f, s)}}});
    }
  }
  return out;
}

MTerm net_to_term(const ONet& net) {
  if (net.scalar_exp != 0)
    throw domain_error("only scalar-free nets rebuild into terms");
  const int B = net.bottom.size();
  const int T = net.top.size();
  const int total = B + T;
  if (static_cast<int>(net.pairing.size()) != total)
    throw domain_error("net pairing has the wrong size");
  for (int p = 0; p < total; ++p) {
    const int q = net.pairing[static_cast<std::size_t>(p)];
    if (q < 0 || q >= total || q == p ||
        net.pairing[static_cast<std::size_t>(q)] != p)
      throw domain_error("net pairing is not a fixed-point-free involution");
  }
  std::vector<int> stack;
  for (int p = 0; p < total; ++p) {
    const int q = net.pairing[static_cast<std::size_t>(p)];
    if (q > p) {
      stack.push_back(p);
    } else {
      if (stack.empty() || stack.back() != q)
        throw domain_error("net pairing crosses itself");
      stack.pop_back();
    }
  }
  auto sym_at = [&](int c) {
    return c < B ? net.bottom.syms[static_cast<std::size_t>(c)]
                 : net.top.syms[static_cast<std::size_t>(B + T - c - 1)];
  };
  if (net.bottom.mode != net.top.mode)
    throw domain_error("net boundaries disagree on mode");
  if (net.bottom.mode == Mode::oriented) {
    for (int p = 0; p < total; ++p) {
      const int q = net.pairing[static_cast<std::size_t>(p)];
      const bool arc = (p < B) == (q < B);
      if (arc ? sym_at(p) == sym_at(q) : sym_at(p) != sym_at(q))
        throw domain_error("net orientations are inconsistent");
    }
  }

  MTerm term;
  term.dom = net.bottom;

  // Caps close bottom arcs, innermost (adjacent) pair first.
  std::vector<int> ports;
  for (int b = 0; b < B; ++b) ports.push_back(b);
  for (;;) {
    int found = -1;
    for (std::size_t u = 0; u + 1 < ports.size(); ++u) {
      const int x = ports[u];
      const int y = ports[u + 1];
      if (y < B && net.pairing[static_cast<std::size_t>(x)] == y) {
        found = static_cast<int>(u);
        break;
      }
    }
    if (found < 0) break;
    const int x = ports[static_cast<std::size_t>(found)];
    const int y = ports[static_cast<std::size_t>(found) + 1];
    term.slices.push_back(Slice{
        found, GenArrow{GenKind::cap, sym_at(x), sym_at(y)}});
    ports.erase(ports.begin() + found, ports.begin() + found + 2);
  }
  for (int p : ports)
    if (net.pairing[static_cast<std::size_t>(p)] < B)
      throw internal_error("bottom arcs remain after closing caps");

  // Current strands now head to their top positions, in increasing order.
  std::vector<int> tops;
  for (int p : ports)
    tops.push_back(B + T - net.pairing[static_cast<std::size_t>(p)]);
  for (std::size_t u = 0; u + 1 < tops.size(); ++u)
    if (tops[u] >= tops[u + 1])
      throw internal_error("through strands emerged out of order");

  // Cups open top arcs, outermost (leftmost left endpoint) first.
  std::vector<std::pair<int, int>> arcs;  // (u, w) top positions, u < w
  for (int c = B; c < total; ++c) {
    const int q = net.pairing[static_cast<std::size_t>(c)];
    if (q > c) arcs.emplace_back(B + T - q, B + T - c);
  }
  std::sort(arcs.begin(), arcs.end());
  for (const auto& [u, w] : arcs) {
    int left = 0;
    for (int t : tops)
      if (t < u) ++left;
    term.slices.push_back(Slice{
        left, GenArrow{GenKind::cup,
                       net.top.syms[static_cast<std::size_t>(u - 1)],
                       net.top.syms[static_cast<std::size_t>(w - 1)]}});
    tops.insert(tops.begin() + left, {u, w});
  }

  const ONet back = eval_net(term);
  if (back.pairing != net.pairing || back.top != net.top ||
      back.bottom != net.bottom || back.scalar_exp != 0)
    throw internal_error("rebuilt term evaluates to a different net");
  return term;
}

std::vector<ONet> hom_basis(const ObjectWord& bottom, const ObjectWord& top) {
  if (bottom.mode != top.mode)
    throw domain_error("hom boundaries disagree on mode");
  const int B = bottom.size();
  const int T = top.size();
  const int total = B + T;
  std::vector<ONet> out;
  if (total % 2 != 0) return out;

  auto sym_at = [&](int c) {
    return c < B ? bottom.syms[static_cast<std::size_t>(c)]
                 : top.syms[static_cast<std::size_t>(B + T - c - 1)];
  };
  auto compatible = [&](int p, int q) {
    if (bottom.mode == Mode::plain) return true;
    const bool arc = (p < B) == (q < B);
    return arc ? sym_at(p) != sym_at(q) : sym_at(p) == sym_at(q);
  };

  std::vector<int> pairing(static_cast<std::size_t>(total), -1);
  auto fill = [&](auto&& self, std::vector<std::pair<int, int>> segments) -> void {
    while (!segments.empty() && segments.back().first >= segments.back().second)
      segments.pop_back();
    if (segments.empty()) {
      ONet net;
      net.bottom = bottom;
      net.top = top;
      net.pairing = pairing;
      out.push_back(std::move(net));
      return;
    }
    auto [lo, hi] = segments.back();
    segments.pop_back();
    for (int q = lo + 1; q < hi; q += 2) {
      if (!compatible(lo, q)) continue;
      pairing[static_cast<std::size_t>(lo)] = q;
      pairing[static_cast<std::size_t>(q)] = lo;
      auto next = segments;
      next.emplace_back(q + 1, hi);
      next.emplace_back(lo + 1, q);
      self(self, std::move(next));
      pairing[static_cast<std::size_t>(lo)] = -1;
      pairing[static_cast<std::size_t>(q)] = -1;
    }
  };
  fill(fill, {{0, total}});
  return out;
}

MTerm hook_term(int n, int i) {
  if (n < 2 || i < 1 || i > n - 1)
    throw domain_error("generator index " + std::to_string(i) +
                       " out of range 1.." + std::to_string(n - 1));
  MTerm t;
  t.dom = ObjectWord::plain(n);
  t.slices.push_back(Slice{i - 1, GenArrow{GenKind::cap, Sym::vee, Sym::vee}});
  t.slices.push_back(Slice{i - 1, GenArrow{GenKind::cup, Sym::vee, Sym::vee}});
  return t;
}

MTerm diagram_term(const Diagram& d) {
  const JnfWord nf = diagram_to_jnf(d);
  MTerm t = identity_term(ObjectWord::plain(d.n()));
  for (Letter l : to_word(nf)) {
    if (l == kDelta)
      throw internal_error("diagram normal form contains a loop letter");
    const MTerm hook = hook_term(d.n(), l);
    t.slices.insert(t.slices.end(), hook.slices.begin(), hook.slices.end());
  }
  return t;
}

std::size_t end_algebra_check(int n) {
  const std::vector<Diagram> basis = enumerate_diagrams(n);
  std::size_t pairs = 0;
  for (const Diagram& d1 : basis) {
    for (const Diagram& d2 : basis) {
      const MTerm t = compose_terms(diagram_term(d1), diagram_term(d2));
      const NormalizeTermResult nf = normalize_term(t);
      const ScaledDiagram prod = compose(d1, d2);
      if (nf.scalar_exp != prod.power)
        throw internal_error(
            "term normalization and diagram composition disagree on loops "
            "for " + format_diagram(d1) + " times " + format_diagram(d2));
      if (eval_net(nf.term).pairing != diagram_net(prod.diagram).pairing)
        throw internal_error(
            "term normalization and diagram composition disagree on strands "
            "for " + format_diagram(d1) + " times " + format_diagram(d2));
      ++pairs;
    }
  }
  return pairs;
}

// --- text forms ----------------------------------------------------------

std::string format_object(const ObjectWord& obj) {
  if (obj.mode == Mode::plain) return std::to_string(obj.size());
  if (obj.syms.empty()) return "-";
  std::string s;
  for (Sym x : obj.syms) s.push_back(x == Sym::vee ? 'v' : '^');
  return s;
}

ObjectWord parse_object(const std::string& text, Mode mode) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (mode == Mode::plain) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      throw domain_error("bad plain object '" + text +
                         "': expected a strand count");
    return ObjectWord::plain(static_cast<int>(std::strtol(t.c_str(), nullptr, 10)));
  }
  if (t == "-") return ObjectWord::oriented({});
  std::vector<Sym> syms;
  for (char c : t) {
    if (c == 'v')
      syms.push_back(Sym::vee);
    else if (c == '^')
      syms.push_back(Sym::wedge);
    else
      throw domain_error("bad orientation '" + std::string(1, c) +
                         "' in object '" + text + "': expected 'v' or '^'");
  }
  return ObjectWord::oriented(std::move(syms));
}

std::string format_gen(const GenArrow& gen, Mode mode) {
  std::string s = gen.kind == GenKind::cap ? "cap" : "cup";
  if (mode == Mode::oriented)
    s.push_back(gen.first == Sym::vee ? '+' : '-');
  return s;
}

GenArrow parse_gen(const std::string& text, Mode mode) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (mode == Mode::plain) {
    if (t == "cap") return GenArrow{GenKind::cap, Sym::vee, Sym::vee};
    if (t == "cup") return GenArrow{GenKind::cup, Sym::vee, Sym::vee};
    throw domain_error("bad generator '" + text + "': expected cap or cup");
  }
  GenKind kind;
  if (t.rfind("cap", 0) == 0)
    kind = GenKind::cap;
  else if (t.rfind("cup", 0) == 0)
    kind = GenKind::cup;
  else
    throw domain_error("bad generator '" + text +
                       "': expected cap+/cap-/cup+/cup-");
  if (t.size() != 4 || (t[3] != '+' && t[3] != '-'))
    throw domain_error("bad generator '" + text +
                       "': expected a '+' or '-' sign");
  const Sym first = t[3] == '+' ? Sym::vee : Sym::wedge;
  return GenArrow{kind, first, flipped(first)};
}

std::string format_term(const MTerm& term) {
  if (term.slices.empty()) return "id";
  const std::vector<ObjectWord> bounds = typecheck(term);
  std::ostringstream out;
  for (std::size_t i = 0; i < term.slices.size(); ++i) {
    const Slice& s = term.slices[i];
    const ObjectWord& before = bounds[i];
    const std::size_t l = static_cast<std::size_t>(s.left);
    ObjectWord left{before.mode, {before.syms.begin(),
                                  before.syms.begin() + static_cast<long>(l)}};
    const std::size_t skip = s.gen.kind == GenKind::cap ? l + 2 : l;
    ObjectWord right{before.mode, {before.syms.begin() + static_cast<long>(skip),
                                   before.syms.end()}};
    if (i > 0) out << " ; ";
    out << "id " << format_object(left) << " | "
        << format_gen(s.gen, term.dom.mode) << " | id "
        << format_object(right);
  }
  return out.str();
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

MTerm parse_term(const std::string& text, Mode mode, const ObjectWord& dom) {
  if (dom.mode != mode) throw domain_error("domain disagrees with mode");
  MTerm term;
  term.dom = dom;
  const std::string body = trim(text);
  if (body == "id" || body.empty()) return term;

  ObjectWord cur = dom;
  const std::vector<std::string> slice_texts = split(body, ';');
  for (std::size_t i = 0; i < slice_texts.size(); ++i) {
    const std::vector<std::string> parts = split(slice_texts[i], '|');
    if (parts.size() != 3)
      throw domain_error(slice_label(i) +
                         ": expected 'id LEFT | GEN | id RIGHT'");
    auto strip_id = [&](const std::string& part) -> std::string {
      const std::string p = trim(part);
      if (p.rfind("id", 0) != 0)
        throw domain_error(slice_label(i) + ": expected 'id' in '" + part +
                           "'");
      return trim(p.substr(2));
    };
    const ObjectWord left = parse_object(strip_id(parts[0]), mode);
    const GenArrow gen = parse_gen(trim(parts[1]), mode);
    const ObjectWord right = parse_object(strip_id(parts[2]), mode);

    Slice s{left.size(), gen};
    term.slices.push_back(s);

    // Check the declared flanks against the running boundary.
    const std::size_t l = static_cast<std::size_t>(s.left);
    if (gen.kind == GenKind::cap) {
      if (l + 2 > cur.syms.size())
        throw domain_error(slice_label(i) + ": cap exceeds the boundary");
    } else if (l > cur.syms.size()) {
      throw domain_error(slice_label(i) + ": cup exceeds the boundary");
    }
    const std::vector<Sym> left_expect(cur.syms.begin(),
                                       cur.syms.begin() + static_cast<long>(l));
    const std::size_t skip = gen.kind == GenKind::cap ? l + 2 : l;
    const std::vector<Sym> right_expect(cur.syms.begin() + static_cast<long>(skip),
                                        cur.syms.end());
    auto agree = [&](const ObjectWord& got, const std::vector<Sym>& want) {
      if (mode == Mode::plain)
        return got.syms.size() == want.size();
      return got.syms == want;
    };
    if (!agree(left, left_expect) || !agree(right, right_expect))
      throw domain_error(slice_label(i) +
                         ": declared flanks disagree with the boundary");
    // Advance the boundary (typecheck repeats the full validation).
    if (gen.kind == GenKind::cap) {
      if (mode == Mode::oriented &&
          (cur.syms[l] != gen.first || cur.syms[l + 1] != gen.second))
        throw domain_error(slice_label(i) +
                           ": cap orientation disagrees with the boundary");
      cur.syms.erase(cur.syms.begin() + static_cast<long>(l),
                     cur.syms.begin() + static_cast<long>(l) + 2);
    } else {
      cur.syms.insert(cur.syms.begin() + static_cast<long>(l),
                      {gen.first, gen.second});
    }
  }
  typecheck(term);
  return term;
}

std::string format_net_pairing(const ONet& net) {
  std::ostringstream out;
  out << "[";
  bool first = true;
  for (std::size_t p = 0; p < net.pairing.size(); ++p) {
    const int q = net.pairing[p];
    if (q < static_cast<int>(p)) continue;
    if (!first) out << ",";
    out << "(" << p + 1 << "," << q + 1 << ")";
    first = false;
  }
  out << "]";
  return out.str();
}

}  // namespace tl
