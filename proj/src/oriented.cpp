// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
#include "tl/oriented.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "tl/common.hpp"

namespace tl {

std::vector<Frame> frames_with(int n, int k) {
  if (n < 0) throw domain_error("strand count must be nonnegative");
  if (k < 0 || k > n)
    throw domain_error("vee count must lie between 0 and the strand count");
  std::vector<Frame> out;
  Frame cur;
  // Lexicographic with v < ^: at each position try vee first.
  std::function<void(int, int)> rec = [&](int pos, int vees) {
    if (pos == n) {
      if (vees == k) out.push_back(cur);
      return;
    }
    int left = n - pos;
    if (vees < k && k - vees <= left) {
      cur.push_back(Sym::vee);
      rec(pos + 1, vees + 1);
      cur.pop_back();
    }
    if (left - 1 >= k - vees) {
      cur.push_back(Sym::wedge);
      rec(pos + 1, vees);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

int inversions(const Frame& w) {
  int count = 0;
  int wedges_seen = 0;
  for (Sym s : w) {
    if (s == Sym::wedge)
      ++wedges_seen;
    else
      count += wedges_seen;
  }
  return count;
}

bool admissible(const Frame& w, int i) {
  if (i < 1 || i + 1 > static_cast<int>(w.size()))
    throw domain_error("generator index " + std::to_string(i) +
                       " out of range for a frame of length " +
                       std::to_string(w.size()));
  return w[i - 1] != w[i];
}

Frame swapped(const Frame& w, int i) {
  if (!admissible(w, i))
    throw domain_error("cannot swap equal symbols at strands " +
                       std::to_string(i) + ", " + std::to_string(i + 1));
  Frame out = w;
  std::swap(out[i - 1], out[i]);
  return out;
}

OrientedWord idempotent(Frame f) {
  OrientedWord w;
  w.frames.push_back(std::move(f));
  return w;
}

std::optional<ONet> oriented_eval(const OrientedWord& w, BubbleConvention conv) {
  if (w.frames.empty() || w.frames.size() != w.gens.size() + 1)
    throw internal_error("seamed word with mismatched frame/generator counts");
  const int n = static_cast<int>(w.frames[0].size());
  MTerm term;
  term.dom = ObjectWord::oriented(w.frames[0]);
  for (std::size_t t = 0; t < w.gens.size(); ++t) {
    const int i = w.gens[t];
    const Frame& lo = w.frames[t];
    const Frame& hi = w.frames[t + 1];
    if (static_cast<int>(lo.size()) != n || static_cast<int>(hi.size()) != n)
      throw domain_error("frames of unequal length in one seamed word");
    if (i < 1 || i > n - 1)
      throw domain_error("generator index " + std::to_string(i) +
                         " out of range for " + std::to_string(n) + " strands");
    // The factor 1_lo e_i 1_hi vanishes unless the capped pair is opposite,
    // the cupped pair is opposite, and the spectator strands agree.
    if (lo[i - 1] == lo[i] || hi[i - 1] == hi[i]) return std::nullopt;
    for (int p = 0; p < n; ++p) {
      if (p == i - 1 || p == i) continue;
      if (lo[p] != hi[p]) return std::nullopt;
    }
    term.slices.push_back({i - 1, {GenKind::cap, lo[i - 1], lo[i]}});
    term.slices.push_back({i - 1, {GenKind::cup, hi[i - 1], hi[i]}});
  }
  return eval_net(term, conv);
}

std::optional<OrientedWord> concat(const OrientedWord& a, const OrientedWord& b) {
  if (a.frames.empty() || b.frames.empty())
    throw internal_error("seamed word with no frames");
  if (a.frames.back() != b.frames.front()) return std::nullopt;
  OrientedWord out = a;
  out.frames.insert(out.frames.end(), b.frames.begin() + 1, b.frames.end());
  out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
  return out;
}

OrientedComb mul(const OrientedComb& a, const OrientedComb& b) {
  OrientedComb out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      auto w = concat(wa, wb);
      if (!w) continue;
      LaurentInt c = ca * cb;
      auto it = out.find(*w);
      if (it == out.end()) {
        if (!c.is_zero()) out[*w] = c;
      } else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

namespace {

// All decorations of a generator sequence by frames, starting from `first`;
// every factor of every returned chain is nonvanishing.
std::vector<std::vector<Frame>> frame_chains(const std::vector<int>& gens,
                                            const Frame& first) {
  std::vector<std::vector<Frame>> out;
  std::vector<Frame> cur{first};
  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == gens.size()) {
      out.push_back(cur);
      return;
    }
    const Frame f = cur.back();  // copy: cur reallocates below
    const int i = gens[t];
    if (f[i - 1] == f[i]) return;  // inadmissible: no nonzero continuation
    for (bool swap_it : {false, true}) {
      cur.push_back(swap_it ? swapped(f, i) : f);
      rec(t + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::string chain_id(const OrientedWord& w) {
  return format_oriented_word(w);
}

}  // namespace

ORuleSystem oriented_rules(int n, int k, BubbleConvention conv) {
  if (n < 0) throw domain_error("strand count must be nonnegative");
  if (k < 0 || k > n)
    throw domain_error("vee count must lie between 0 and the strand count");
  ORuleSystem sys;
  sys.n = n;
  sys.k = k;
  sys.conv = conv;

  const std::vector<Frame> frames = frames_with(n, k);

  const auto validate = [&](const ORule& r) {
    // Soundness: both sides must evaluate to the same strand net, with the
    // scalar exponents differing by exactly the declared shift.
    auto le = oriented_eval(r.lhs, conv);
    if (r.to_zero) {
      if (le.has_value())
        throw internal_error("rule " + r.id + " annihilates the nonzero word " +
                             chain_id(r.lhs));
      return;
    }
    auto re = oriented_eval(r.rhs, conv);
    if (!le.has_value() || !re.has_value())
      throw internal_error("rule " + r.id + " relates vanishing words");
    if (le->bottom != re->bottom || le->top != re->top ||
        le->pairing != re->pairing)
      throw internal_error("rule " + r.id + " does not preserve the net: " +
                           chain_id(r.lhs) + " vs " + chain_id(r.rhs));
    if (le->scalar_exp != re->scalar_exp + r.qshift)
      throw internal_error("rule " + r.id + " carries the wrong q-shift");
    // Termination: generator sequences shrink, or commute toward smaller
    // indices at equal length.
    if (r.rhs.gens.size() > r.lhs.gens.size() ||
        (r.rhs.gens.size() == r.lhs.gens.size() && !(r.rhs.gens < r.lhs.gens)))
      throw internal_error("rule " + r.id + " does not decrease its word");
  };

  const auto add = [&](const std::string& family, long long& counter, ORule r) {
    r.id = family + "." + std::to_string(++counter);
    validate(r);
    sys.rules.push_back(std::move(r));
  };

  // Annihilation: 1_a e_i 1_b -> 0 whenever the factor is malformed.
  long long n_zero = 0;
  for (const Frame& a : frames) {
    for (int i = 1; i <= n - 1; ++i) {
      const bool adm = admissible(a, i);
      for (const Frame& b : frames) {
        const bool ok = adm && (b == a || b == swapped(a, i));
        if (ok) continue;
        ORule r;
        r.lhs = {{a, b}, {i}};
        r.to_zero = true;
        add("zero", n_zero, std::move(r));
      }
    }
  }

  // Squares: 1_m e_i 1_a e_i 1_b -> q^s 1_m e_i 1_b, where s reads the
  // inversion change of the middle frame under the swap at i (sign set by
  // the bubble convention).
  long long n_square = 0;
  for (const Frame& a : frames) {
    for (int i = 1; i <= n - 1; ++i) {
      if (!admissible(a, i)) continue;
      const Frame as = swapped(a, i);
      const long long eps = inversions(as) - inversions(a);
      for (const Frame& m : {a, as}) {
        for (const Frame& b : {a, as}) {
          ORule r;
          r.lhs = {{m, a, b}, {i, i}};
          r.rhs = {{m, b}, {i}};
          r.qshift = conv == BubbleConvention::positive ? eps : -eps;
          add("square", n_square, std::move(r));
        }
      }
    }
  }

  // Braid moves: 1_m e_i 1_a e_j 1_a e_i 1_b -> 1_m e_i 1_b for |i-j| = 1.
  // (A middle factor that swaps its frame makes the third factor malformed,
  // so the unswapped decoration is the only nonvanishing one.)
  long long n_braid = 0;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j > n - 1) continue;
      for (const Frame& m : frames) {
        if (!admissible(m, i)) continue;
        for (const Frame& a : {m, swapped(m, i)}) {
          if (!admissible(a, j)) continue;
          for (const Frame& b : {a, swapped(a, i)}) {
            ORule r;
            r.lhs = {{m, a, a, b}, {i, j, i}};
            r.rhs = {{m, b}, {i}};
            add("braid", n_braid, std::move(r));
          }
        }
      }
    }
  }

  // Distant commutation: 1_a e_i 1_m e_j 1_b -> 1_a e_j 1_m' e_i 1_b for
  // j <= i-2, where m' carries a's strands except at (j, j+1), which it
  // takes from b.
  long long n_comm = 0;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= i - 2; ++j) {
      for (const Frame& a : frames) {
        if (!admissible(a, i)) continue;
        for (const Frame& m : {a, swapped(a, i)}) {
          if (!admissible(m, j)) continue;
          for (const Frame& b : {m, swapped(m, j)}) {
            Frame mid = a;
            mid[j - 1] = b[j - 1];
            mid[j] = b[j];
            ORule r;
            r.lhs = {{a, m, b}, {i, j}};
            r.rhs = {{a, mid, b}, {j, i}};
            add("comm", n_comm, std::move(r));
          }
        }
      }
    }
  }

  // The two ladder families.  For each frame decoration of the left side,
  // the right side's interior frames are recovered by matching nets; the
  // lexicographically least matching decoration is taken.
  const auto add_ladder = [&](const std::string& family, long long& counter,
                              const std::vector<int>& lhs_gens,
                              const std::vector<int>& rhs_gens) {
    for (const Frame& f0 : frames) {
      for (const auto& chain : frame_chains(lhs_gens, f0)) {
        OrientedWord lhs{chain, lhs_gens};
        auto lnet = oriented_eval(lhs, conv);
        if (!lnet.has_value())
          throw internal_error("a fully admissible chain evaluated to zero");
        std::vector<std::vector<Frame>> matches;
        long long rexp = 0;
        for (const auto& rchain : frame_chains(rhs_gens, f0)) {
          if (rchain.back() != chain.back()) continue;
          OrientedWord rhs{rchain, rhs_gens};
          auto rnet = oriented_eval(rhs, conv);
          if (!rnet.has_value())
            throw internal_error("a fully admissible chain evaluated to zero");
          if (rnet->pairing != lnet->pairing || rnet->bottom != lnet->bottom ||
              rnet->top != lnet->top)
            continue;
          if (!matches.empty() && rnet->scalar_exp != rexp)
            throw internal_error(
                "ladder right-hand sides with one net but different scalars");
          rexp = rnet->scalar_exp;
          matches.push_back(rchain);
        }
        if (matches.empty())
          throw internal_error("no seamed right-hand side realizes the ladder " +
                               chain_id(lhs));
        std::sort(matches.begin(), matches.end());
        ORule r;
        r.lhs = std::move(lhs);
        r.rhs = {matches.front(), rhs_gens};
        r.qshift = lnet->scalar_exp - rexp;
        add(family, counter, std::move(r));
      }
    }
  };

  long long n_down = 0;
  for (int i = 3; i <= n - 1; ++i) {
    for (int m = 2; i - m >= 1; ++m) {
      std::vector<int> lhs_gens{i};
      for (int a = i - 1; a >= i - m; --a) lhs_gens.push_back(a);
      lhs_gens.push_back(i);
      std::vector<int> rhs_gens;
      for (int a = i - 2; a >= i - m; --a) rhs_gens.push_back(a);
      rhs_gens.push_back(i);
      add_ladder("down", n_down, lhs_gens, rhs_gens);
    }
  }

  long long n_up = 0;
  for (int i = 1; i <= n - 1; ++i) {
    for (int m = 2; i + m <= n - 1; ++m) {
      std::vector<int> lhs_gens{i};
      for (int a = i + m; a >= i + 1; --a) lhs_gens.push_back(a);
      lhs_gens.push_back(i);
      std::vector<int> rhs_gens{i};
      for (int a = i + m; a >= i + 2; --a) rhs_gens.push_back(a);
      add_ladder("up", n_up, lhs_gens, rhs_gens);
    }
  }

  return sys;
}

namespace {

// Leftmost redex, ties broken by rule order.  Returns (gen position, rule
// index) or nullopt when the word is in normal form.
std::optional<std::pair<std::size_t, std::size_t>> find_oriented_redex(
    const ORuleSystem& sys, const OrientedWord& w) {
  for (std::size_t t = 0; t < w.gens.size(); ++t) {
    for (std::size_t r = 0; r < sys.rules.size(); ++r) {
      const OrientedWord& lhs = sys.rules[r].lhs;
      const std::size_t len = lhs.gens.size();
      if (t + len > w.gens.size()) continue;
      if (!std::equal(lhs.gens.begin(), lhs.gens.end(), w.gens.begin() + t))
        continue;
      if (!std::equal(lhs.frames.begin(), lhs.frames.end(),
                      w.frames.begin() + t))
        continue;
      return std::make_pair(t, r);
    }
  }
  return std::nullopt;
}

OrientedWord splice_oriented(const OrientedWord& w, std::size_t t,
                             const ORule& rule) {
  const std::size_t len = rule.lhs.gens.size();
  OrientedWord out;
  out.gens.assign(w.gens.begin(), w.gens.begin() + t);
  out.gens.insert(out.gens.end(), rule.rhs.gens.begin(), rule.rhs.gens.end());
  out.gens.insert(out.gens.end(), w.gens.begin() + t + len, w.gens.end());
  out.frames.assign(w.frames.begin(), w.frames.begin() + t);
  out.frames.insert(out.frames.end(), rule.rhs.frames.begin(),
                    rule.rhs.frames.end());
  out.frames.insert(out.frames.end(), w.frames.begin() + t + len + 1,
                    w.frames.end());
  return out;
}

}  // namespace

OrientedComb normalize_oriented(const ORuleSystem& sys, const OrientedComb& c,
                                std::vector<OrientedTraceStep>* trace,
                                std::size_t max_steps) {
  OrientedComb out;
  std::size_t steps = 0;
  for (const auto& [w0, c0] : c) {
    OrientedWord w = w0;
    LaurentInt coeff = c0;
    bool alive = true;
    while (alive) {
      auto hit = find_oriented_redex(sys, w);
      if (!hit) break;
      if (++steps > max_steps)
        throw domain_error("normalization exceeded the step budget");
      const auto [t, r] = *hit;
      const ORule& rule = sys.rules[r];
      OrientedTraceStep st;
      st.rule_index = r;
      st.pos = t;
      st.before = w;
      st.qshift = rule.qshift;
      if (rule.to_zero) {
        st.vanished = true;
        alive = false;
      } else {
        w = splice_oriented(w, t, rule);
        coeff = coeff.shifted(rule.qshift);
        st.after = w;
      }
      if (trace) trace->push_back(std::move(st));
    }
    if (!alive || coeff.is_zero()) continue;
    auto it = out.find(w);
    if (it == out.end()) {
      out[w] = coeff;
    } else {
      it->second += coeff;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

long long sector_dimension(const ORuleSystem& sys, const Frame& bottom,
                           const Frame& top) {
  const auto check_frame = [&](const Frame& f, const char* which) {
    if (static_cast<int>(f.size()) != sys.n)
      throw domain_error(std::string(which) + " frame has the wrong length");
    int vees = 0;
    for (Sym s : f)
      if (s == Sym::vee) ++vees;
    if (vees != sys.k)
      throw domain_error(std::string(which) + " frame has the wrong vee count");
  };
  check_frame(bottom, "bottom");
  check_frame(top, "top");

  const std::size_t max_len =
      static_cast<std::size_t>(sys.n) * (sys.n - 1) / 2;

  const auto tail_redex = [&](const OrientedWord& w) {
    // Only redexes ending at the freshly appended generator can be new.
    for (const ORule& rule : sys.rules) {
      const std::size_t len = rule.lhs.gens.size();
      if (len > w.gens.size()) continue;
      const std::size_t t = w.gens.size() - len;
      if (!std::equal(rule.lhs.gens.begin(), rule.lhs.gens.end(),
                      w.gens.begin() + t))
        continue;
      if (std::equal(rule.lhs.frames.begin(), rule.lhs.frames.end(),
                     w.frames.begin() + t))
        return true;
    }
    return false;
  };

  long long count = 0;
  OrientedWord cur = idempotent(bottom);
  std::function<void()> rec = [&] {
    if (cur.frames.back() == top) ++count;
    const Frame f = cur.frames.back();
    for (int i = 1; i <= sys.n - 1; ++i) {
      if (!admissible(f, i)) continue;
      for (const Frame& nu : {f, swapped(f, i)}) {
        cur.gens.push_back(i);
        cur.frames.push_back(nu);
        if (!tail_redex(cur)) {
          if (cur.gens.size() > max_len)
            throw domain_error(
                "normal-form enumeration exceeded the length bound; "
                "the rule system is incomplete");
          rec();
        }
        cur.gens.pop_back();
        cur.frames.pop_back();
      }
    }
  };
  rec();
  return count;
}

// --- text forms ----------------------------------------------------------

std::string format_frame(const Frame& f) {
  std::string out;
  for (Sym s : f) out.push_back(s == Sym::vee ? 'v' : '^');
  return out;
}

Frame parse_frame(const std::string& text, int n, int k) {
  Frame f;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'v')
      f.push_back(Sym::vee);
    else if (text[i] == '^')
      f.push_back(Sym::wedge);
    else
      throw domain_error("bad frame '" + text + "' at position " +
                         std::to_string(i + 1) + ": expected 'v' or '^'");
  }
  if (n >= 0 && static_cast<int>(f.size()) != n)
    throw domain_error("frame '" + text + "' has length " +
                       std::to_string(f.size()) + ", expected " +
                       std::to_string(n));
  if (k >= 0) {
    int vees = 0;
    for (Sym s : f)
      if (s == Sym::vee) ++vees;
    if (vees != k)
      throw domain_error("frame '" + text + "' has " + std::to_string(vees) +
                         " vees, expected " + std::to_string(k));
  }
  return f;
}

std::string format_oriented_word(const OrientedWord& w) {
  std::ostringstream out;
  out << "1[" << format_frame(w.frames[0]) << "]";
  for (std::size_t t = 0; t < w.gens.size(); ++t)
    out << " e" << w.gens[t] << " 1[" << format_frame(w.frames[t + 1]) << "]";
  return out.str();
}

std::string format_oriented_comb(const OrientedComb& c) {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, coeff] : c) {
    if (!first) out << " + ";
    first = false;
    out << coeff.format_coeff('q') << " * " << format_oriented_word(w);
  }
  return out.str();
}

OrientedComb parse_oriented_expr(const std::string& text, int n, int k) {
  OrientedComb result;

  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == '+' && depth == 0) {
      terms.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  terms.push_back(cur);

  for (const std::string& term : terms) {
    std::size_t star = std::string::npos;
    int d = 0;
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (term[i] == '(' || term[i] == '[') ++d;
      if (term[i] == ')' || term[i] == ']') --d;
      if (term[i] == '*' && d == 0) {
        star = i;
        break;
      }
    }
    LaurentInt coeff = LaurentInt::constant(1);
    std::string body = term;
    if (star != std::string::npos) {
      coeff = LaurentInt::parse(term.substr(0, star), 'q');
      body = term.substr(star + 1);
    }

    std::istringstream in(body);
    std::string tok;
    std::optional<OrientedWord> w;
    bool dangling_gen = false;
    bool vanished = false;
    bool any_token = false;
    while (in >> tok) {
      any_token = true;
      if (tok.size() >= 3 && tok[0] == '1' && tok[1] == '[' &&
          tok.back() == ']') {
        Frame f = parse_frame(tok.substr(2, tok.size() - 3), n, k);
        if (!w) {
          w = idempotent(std::move(f));
        } else if (dangling_gen) {
          w->frames.push_back(std::move(f));
          dangling_gen = false;
        } else if (w->frames.back() != f) {
          vanished = true;  // distinct idempotents contract to zero
        }
      } else if (tok.size() >= 2 && tok[0] == 'e') {
        char* end = nullptr;
        long i = std::strtol(tok.c_str() + 1, &end, 10);
        if (*end != '\0' || i < 1 || i > n - 1)
          throw domain_error("bad generator token '" + tok + "' for " +
                             std::to_string(n) + " strands");
        if (!w || dangling_gen)
          throw domain_error(
              "generator '" + tok + "' needs an idempotent on its left");
        w->gens.push_back(static_cast<int>(i));
        dangling_gen = true;
      } else {
        throw domain_error("bad token '" + tok +
                           "': expected 1[FRAME] or e<INT>");
      }
    }
    if (!any_token) throw domain_error("empty term in expression");
    if (dangling_gen)
      throw domain_error("a generator needs an idempotent on its right");
    if (vanished || coeff.is_zero()) continue;
    auto it = result.find(*w);
    if (it == result.end()) {
      result[*w] = coeff;
    } else {
      it->second += coeff;
      if (it->second.is_zero()) result.erase(it);
    }
  }
  return result;
}

}  // namespace tl
