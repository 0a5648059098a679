// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
#include "tl/word.hpp"

#include <cctype>
#include <sstream>

namespace tl {

std::string format_word(const Word& w) {
  std::ostringstream out;
  bool first = true;
  for (Letter l : w) {
    if (!first) out << ' ';
    if (l == kDelta)
      out << 'd';
    else
      out << 'e' << l;
    first = false;
  }
  return out.str();
}

Word parse_word(const std::string& text, int n) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "d") {
      w.push_back(kDelta);
      continue;
    }
    if (tok.size() >= 2 && tok[0] == 'e') {
      bool digits = true;
      for (std::size_t i = 1; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) digits = false;
      if (digits) {
        long idx = std::strtol(tok.c_str() + 1, nullptr, 10);
        if (idx < 1 || idx > n - 1)
          throw domain_error("generator index " + std::to_string(idx) +
                             " out of range 1.." + std::to_string(n - 1));
        w.push_back(static_cast<Letter>(idx));
        continue;
      }
    }
    throw domain_error("bad letter '" + tok + "': expected 'd' or 'e<INT>'");
  }
  return w;
}

std::string format_lincomb(const LinComb& c) {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, coeff] : c) {
    if (!first) out << " + ";
    out << coeff.format_coeff('d') << " *";
    const std::string ws = format_word(w);
    if (!ws.empty()) out << ' ' << ws;
    first = false;
  }
  return out.str();
}

LinComb parse_lincomb(const std::string& text, int n) {
  // Split on top-level '+' (those not inside parentheses), then split each
  // monomial at its '*' into coefficient and word.
  LinComb result;
  std::vector<std::string> monomials;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '+' && depth == 0) {
      monomials.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  monomials.push_back(cur);

  for (const std::string& mono : monomials) {
    std::size_t star = std::string::npos;
    int d = 0;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == '(') ++d;
      if (mono[i] == ')') --d;
      if (mono[i] == '*' && d == 0) {
        star = i;
        break;
      }
    }
    if (star == std::string::npos)
      throw domain_error("bad combination term '" + mono +
                         "': expected COEFF * WORD");
    LaurentInt coeff = LaurentInt::parse(mono.substr(0, star), 'd');
    Word w = parse_word(mono.substr(star + 1), n);
    auto it = result.find(w);
    if (it == result.end()) {
      if (!coeff.is_zero()) result[w] = coeff;
    } else {
      it->second += coeff;
      if (it->second.is_zero()) result.erase(it);
    }
  }
  return result;
}

void prune_zeros(LinComb& c) {
  for (auto it = c.begin(); it != c.end();) {
    if (it->second.is_zero())
      it = c.erase(it);
    else
      ++it;
  }
}

LinComb add(const LinComb& a, const LinComb& b) {
  LinComb r = a;
  for (const auto& [w, coeff] : b) {
    auto it = r.find(w);
    if (it == r.end()) {
      r[w] = coeff;
    } else {
      it->second += coeff;
    }
  }
  prune_zeros(r);
  return r;
}

LinComb scale(const LinComb& a, const LaurentInt& s) {
  LinComb r;
  for (const auto& [w, coeff] : a) {
    LaurentInt c = coeff * s;
    if (!c.is_zero()) r[w] = c;
  }
  return r;
}

LinComb multiply(const LinComb& a, const LinComb& b) {
  LinComb r;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      LaurentInt c = ca * cb;
      auto it = r.find(w);
      if (it == r.end()) {
        r[w] = c;
      } else {
        it->second += c;
      }
    }
  }
  prune_zeros(r);
  return r;
}

ScaledDiagram evaluate(const Word& w, int n) {
  ScaledDiagram acc{0, Diagram::identity(n)};
  for (Letter l : w) {
    if (l == kDelta) {
      acc.power = add_checked(acc.power, 1);
    } else {
      if (l < 1 || l > n - 1)
        throw domain_error("generator index " + std::to_string(l) +
                           " out of range 1.." + std::to_string(n - 1));
      acc = compose(acc, ScaledDiagram{0, Diagram::generator(n, l)});
    }
  }
  return acc;
}

std::map<Diagram, LaurentInt> evaluate(const LinComb& c, int n) {
  std::map<Diagram, LaurentInt> r;
  for (const auto& [w, coeff] : c) {
    ScaledDiagram sd = evaluate(w, n);
    LaurentInt term = coeff.shifted(sd.power);
    auto it = r.find(sd.diagram);
    if (it == r.end()) {
      r[sd.diagram] = term;
    } else {
      it->second += term;
    }
  }
  for (auto it = r.begin(); it != r.end();) {
    if (it->second.is_zero())
      it = r.erase(it);
    else
      ++it;
  }
  return r;
}

}  // namespace tl
