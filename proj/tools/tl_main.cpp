// tl — Temperley–Lieb diagrams, rewriting, and categorical normal forms.
// SPDX-License-Identifier: MIT
//
// Command-line front end.  Exit codes: 0 success, 1 domain error (one-line
// diagnostic on stderr), 2 usage error.
#include <cctype>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tl/category.hpp"
#include "tl/common.hpp"
#include "tl/diagram.hpp"
#include "tl/jnf.hpp"
#include "tl/laurent.hpp"
#include "tl/oriented.hpp"
#include "tl/rewrite.hpp"
#include "tl/word.hpp"

namespace {

using nlohmann::json;

tl::ScaledDiagram parse_scaled_arg(const std::string& text) {
  // Accept either "n=N [...]" or "delta^P * n=N [...]".
  const std::string prefix = "delta^";
  if (text.rfind(prefix, 0) == 0) {
    std::size_t star = text.find('*');
    if (star == std::string::npos)
      throw tl::domain_error("bad scaled diagram '" + text +
                             "': expected 'delta^P * n=N [...]'");
    std::string power_text = text.substr(prefix.size(), star - prefix.size());
    std::size_t used = 0;
    long long power = 0;
    try {
      power = std::stoll(power_text, &used);
    } catch (const std::exception&) {
      throw tl::domain_error("bad loop power in '" + text + "'");
    }
    while (used < power_text.size() &&
           std::isspace(static_cast<unsigned char>(power_text[used])))
      ++used;
    if (used != power_text.size())
      throw tl::domain_error("bad loop power in '" + text + "'");
    return {power, tl::parse_diagram(text.substr(star + 1))};
  }
  return {0, tl::parse_diagram(text)};
}

std::string rule_line(const tl::Rule& r) {
  return r.id + ": " + tl::format_word(r.lhs) + " -> " + tl::format_word(r.rhs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperley-Lieb planar diagrams, string rewriting, and the "
               "cap/cup category, with the oriented refinement"};
  app.require_subcommand(1);

  bool emit_json = false;
  app.add_flag("--json", emit_json, "emit one JSON document instead of text");
  std::string conv_name = "positive";
  app.add_option("--bubble-convention", conv_name,
                 "sign convention for closed oriented loops")
      ->check(CLI::IsMember({"positive", "negative"}));

  std::function<void()> action;

  int n = 0;
  int k = 0;
  std::string basis_format = "jnf";
  std::string rules_name = "completed";
  bool want_trace = false;
  std::size_t max_new_rules = 1000;
  std::string word_text;
  std::string expr_text;
  std::string term_text;
  std::string diag_text;
  std::string diag_a;
  std::string diag_b;
  std::string to_dyck_text;
  std::string from_dyck_text;
  std::string mode_name = "plain";
  std::string dom_text;
  std::string cod_text;

  const auto conv = [&] {
    return conv_name == "negative" ? tl::BubbleConvention::negative
                                   : tl::BubbleConvention::positive;
  };
  const auto mode = [&] {
    return mode_name == "oriented" ? tl::Mode::oriented : tl::Mode::plain;
  };
  const auto rule_set = [&] {
    return rules_name == "base" ? tl::RuleSet::base : tl::RuleSet::completed;
  };

  // --- count -------------------------------------------------------------
  auto* c_count = app.add_subcommand("count", "number of planar diagrams");
  c_count->fallthrough();
  c_count->add_option("--n", n, "strand count")->required();
  c_count->callback([&] {
    action = [&] {
      unsigned long long c = tl::count_diagrams(n);
      if (emit_json)
        std::cout << json{{"n", n}, {"count", c}}.dump(2) << "\n";
      else
        std::cout << c << "\n";
    };
  });

  // --- basis -------------------------------------------------------------
  auto* c_basis = app.add_subcommand(
      "basis", "diagram basis in normal-form order, in one of three dresses");
  c_basis->fallthrough();
  c_basis->add_option("--n", n, "strand count")->required();
  c_basis->add_option("--format", basis_format, "jnf, diagram, or dyck")
      ->check(CLI::IsMember({"jnf", "diagram", "dyck"}));
  c_basis->callback([&] {
    action = [&] {
      std::vector<std::string> lines;
      for (const tl::JnfWord& jw : tl::enumerate_jnf(n)) {
        tl::Word w = tl::to_word(jw);
        if (basis_format == "jnf") {
          lines.push_back(tl::format_word(w));
        } else {
          tl::Diagram d = tl::evaluate(w, n).diagram;
          lines.push_back(basis_format == "diagram" ? tl::format_diagram(d)
                                                    : tl::to_dyck(d));
        }
      }
      if (emit_json) {
        std::cout << json{{"n", n},
                          {"format", basis_format},
                          {"elements", lines}}
                         .dump(2)
                  << "\n";
      } else {
        for (const std::string& line : lines) std::cout << line << "\n";
      }
    };
  });

  // --- normalize ---------------------------------------------------------
  auto* c_norm = app.add_subcommand("normalize", "rewrite a word to normal form");
  c_norm->fallthrough();
  c_norm->add_option("--n", n, "strand count")->required();
  c_norm->add_option("--rules", rules_name, "base or completed")
      ->check(CLI::IsMember({"base", "completed"}));
  c_norm->add_flag("--trace", want_trace, "print every rewrite step");
  c_norm->add_option("word", word_text, "word, e.g. 'e1 e2 e1'")->required();
  c_norm->callback([&] {
    action = [&] {
      tl::RuleSystem sys = tl::tl_rules(n, rule_set());
      std::vector<tl::TraceStep> steps;
      tl::Word nf = tl::normalize(sys, tl::parse_word(word_text, n),
                                  want_trace ? &steps : nullptr);
      if (emit_json) {
        json jsteps = json::array();
        for (const tl::TraceStep& st : steps)
          jsteps.push_back({{"rule", sys.rules[st.rule_index].id},
                            {"pos", st.pos + 1},
                            {"before", tl::format_word(st.before)},
                            {"after", tl::format_word(st.after)}});
        json doc{{"input", word_text}, {"normal_form", tl::format_word(nf)}};
        if (want_trace) doc["trace"] = jsteps;
        std::cout << doc.dump(2) << "\n";
      } else {
        for (const tl::TraceStep& st : steps)
          std::cout << "rule=" << sys.rules[st.rule_index].id
                    << " pos=" << st.pos + 1 << " "
                    << tl::format_word(st.before) << " => "
                    << tl::format_word(st.after) << "\n";
        std::cout << tl::format_word(nf) << "\n";
      }
    };
  });

  // --- check-confluence ---------------------------------------------------
  auto* c_conf = app.add_subcommand("check-confluence",
                                    "join all critical pairs of a rule set");
  c_conf->fallthrough();
  c_conf->add_option("--n", n, "strand count")->required();
  c_conf->add_option("--rules", rules_name, "base or completed")
      ->check(CLI::IsMember({"base", "completed"}));
  c_conf->callback([&] {
    action = [&] {
      tl::ConfluenceReport report =
          tl::check_confluence(tl::tl_rules(n, rule_set()));
      if (emit_json) {
        json wits = json::array();
        for (const tl::ConfluenceWitness& w : report.unjoinable)
          wits.push_back({{"source", tl::format_word(w.pair.source)},
                          {"left", tl::format_word(w.nf_a)},
                          {"right", tl::format_word(w.nf_b)}});
        std::cout << json{{"pairs", report.pair_count},
                          {"confluent", report.confluent()},
                          {"witnesses", wits}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "pairs: " << report.pair_count << "\n";
        std::cout << "confluent: " << (report.confluent() ? "yes" : "no")
                  << "\n";
        for (const tl::ConfluenceWitness& w : report.unjoinable)
          std::cout << "witness: " << tl::format_word(w.pair.source) << " -> "
                    << tl::format_word(w.nf_a) << " vs "
                    << tl::format_word(w.nf_b) << "\n";
      }
    };
  });

  // --- complete ----------------------------------------------------------
  auto* c_comp = app.add_subcommand(
      "complete", "Knuth-Bendix completion of the defining relations");
  c_comp->fallthrough();
  c_comp->add_option("--n", n, "strand count")->required();
  c_comp->add_option("--max-new-rules", max_new_rules,
                     "abort after this many additions");
  c_comp->callback([&] {
    action = [&] {
      tl::CompletionResult res =
          tl::knuth_bendix(tl::tl_rules(n, tl::RuleSet::base), max_new_rules);
      if (emit_json) {
        json added = json::array();
        for (const tl::Rule& r : res.added)
          added.push_back({{"id", r.id},
                           {"lhs", tl::format_word(r.lhs)},
                           {"rhs", tl::format_word(r.rhs)}});
        json rules = json::array();
        for (const tl::Rule& r : res.system.rules)
          rules.push_back({{"id", r.id},
                           {"lhs", tl::format_word(r.lhs)},
                           {"rhs", tl::format_word(r.rhs)}});
        std::cout << json{{"added", added}, {"rules", rules}}.dump(2) << "\n";
      } else {
        std::cout << "added " << res.added.size() << " rules\n";
        for (const tl::Rule& r : res.added)
          std::cout << rule_line(r) << "\n";
        std::cout << "final system: " << res.system.rules.size() << " rules\n";
        for (const tl::Rule& r : res.system.rules)
          std::cout << rule_line(r) << "\n";
      }
    };
  });

  // --- jnf-diagram -------------------------------------------------------
  auto* c_jnf = app.add_subcommand("jnf-diagram",
                                   "normal-form word of a planar diagram");
  c_jnf->fallthrough();
  c_jnf->add_option("diagram", diag_text, "diagram, e.g. 'n=2 [(1,2),(3,4)]'")
      ->required();
  c_jnf->callback([&] {
    action = [&] {
      tl::Diagram d = tl::parse_diagram(diag_text);
      tl::Word w = tl::to_word(tl::diagram_to_jnf(d));
      if (emit_json)
        std::cout << json{{"diagram", tl::format_diagram(d)},
                          {"word", tl::format_word(w)}}
                         .dump(2)
                  << "\n";
      else
        std::cout << tl::format_word(w) << "\n";
    };
  });

  // --- multiply-diagrams -------------------------------------------------
  auto* c_mul = app.add_subcommand("multiply-diagrams",
                                   "stack two diagrams and count the loops");
  c_mul->fallthrough();
  c_mul->add_option("first", diag_a, "left factor (acts first)")->required();
  c_mul->add_option("second", diag_b, "right factor (stacked on top)")
      ->required();
  c_mul->callback([&] {
    action = [&] {
      tl::ScaledDiagram c =
          tl::compose(parse_scaled_arg(diag_a), parse_scaled_arg(diag_b));
      if (emit_json)
        std::cout << json{{"product", tl::format_scaled(c)}}.dump(2) << "\n";
      else
        std::cout << tl::format_scaled(c) << "\n";
    };
  });

  // --- bijection ---------------------------------------------------------
  auto* c_bij = app.add_subcommand(
      "bijection", "translate between diagrams and balanced-parenthesis paths");
  c_bij->fallthrough();
  auto* grp = c_bij->add_option_group("direction");
  grp->add_option("--to-dyck", to_dyck_text, "diagram to encode");
  grp->add_option("--from-dyck", from_dyck_text, "path to decode, e.g. RRUU");
  grp->require_option(1);
  c_bij->callback([&] {
    action = [&] {
      if (!to_dyck_text.empty()) {
        std::string path = tl::to_dyck(tl::parse_diagram(to_dyck_text));
        if (emit_json)
          std::cout << json{{"dyck", path}}.dump(2) << "\n";
        else
          std::cout << path << "\n";
      } else {
        tl::Diagram d = tl::from_dyck(from_dyck_text);
        if (emit_json)
          std::cout << json{{"diagram", tl::format_diagram(d)}}.dump(2) << "\n";
        else
          std::cout << tl::format_diagram(d) << "\n";
      }
    };
  });

  // --- tlo ---------------------------------------------------------------
  auto* c_tlo = app.add_subcommand("tlo", "the oriented algebra");
  c_tlo->require_subcommand(1);
  c_tlo->fallthrough();

  auto* c_tlo_norm =
      c_tlo->add_subcommand("normalize", "rewrite a seamed expression");
  c_tlo_norm->fallthrough();
  c_tlo_norm->add_option("--n", n, "strand count")->required();
  c_tlo_norm->add_option("--k", k, "vee count")->required();
  c_tlo_norm->add_flag("--trace", want_trace, "print every rewrite step");
  c_tlo_norm
      ->add_option("expr", expr_text, "expression, e.g. '1[v^] e1 1[v^]'")
      ->required();
  c_tlo_norm->callback([&] {
    action = [&] {
      tl::ORuleSystem sys = tl::oriented_rules(n, k, conv());
      tl::OrientedComb comb = tl::parse_oriented_expr(expr_text, n, k);
      std::vector<tl::OrientedTraceStep> steps;
      tl::OrientedComb nf =
          tl::normalize_oriented(sys, comb, want_trace ? &steps : nullptr);
      if (emit_json) {
        json jsteps = json::array();
        for (const tl::OrientedTraceStep& st : steps)
          jsteps.push_back(
              {{"rule", sys.rules[st.rule_index].id},
               {"pos", st.pos + 1},
               {"before", tl::format_oriented_word(st.before)},
               {"after",
                st.vanished ? "0" : tl::format_oriented_word(st.after)}});
        json doc{{"input", expr_text},
                 {"normal_form", tl::format_oriented_comb(nf)}};
        if (want_trace) doc["trace"] = jsteps;
        std::cout << doc.dump(2) << "\n";
      } else {
        for (const tl::OrientedTraceStep& st : steps)
          std::cout << "rule=" << sys.rules[st.rule_index].id
                    << " pos=" << st.pos + 1 << " "
                    << tl::format_oriented_word(st.before) << " => "
                    << (st.vanished ? std::string("0")
                                    : tl::format_oriented_word(st.after))
                    << "\n";
        std::cout << tl::format_oriented_comb(nf) << "\n";
      }
    };
  });

  auto* c_tlo_dims =
      c_tlo->add_subcommand("dims", "dimensions of all frame sectors");
  c_tlo_dims->fallthrough();
  c_tlo_dims->add_option("--n", n, "strand count")->required();
  c_tlo_dims->add_option("--k", k, "vee count")->required();
  c_tlo_dims->callback([&] {
    action = [&] {
      tl::ORuleSystem sys = tl::oriented_rules(n, k, conv());
      std::vector<tl::Frame> frames = tl::frames_with(n, k);
      json jdims = json::array();
      for (const tl::Frame& bottom : frames) {
        for (const tl::Frame& top : frames) {
          long long dim = tl::sector_dimension(sys, bottom, top);
          if (emit_json)
            jdims.push_back({{"bottom", tl::format_frame(bottom)},
                             {"top", tl::format_frame(top)},
                             {"dim", dim}});
          else
            std::cout << tl::format_frame(bottom) << " -> "
                      << tl::format_frame(top) << ": " << dim << "\n";
        }
      }
      if (emit_json)
        std::cout << json{{"n", n}, {"k", k}, {"dims", jdims}}.dump(2) << "\n";
    };
  });

  // --- cat ---------------------------------------------------------------
  auto* c_cat = app.add_subcommand("cat", "the cap/cup category");
  c_cat->require_subcommand(1);
  c_cat->fallthrough();

  auto* c_cat_norm = c_cat->add_subcommand(
      "normalize", "cancel cup/cap pairs modulo exchange");
  c_cat_norm->fallthrough();
  c_cat_norm->add_option("--mode", mode_name, "plain or oriented")
      ->check(CLI::IsMember({"plain", "oriented"}));
  c_cat_norm->add_option("--dom", dom_text, "domain object, e.g. '3' or 'v^v'")
      ->required();
  c_cat_norm
      ->add_option("term", term_text,
                   "term, e.g. 'id 0 | cup | id 1 ; id 1 | cap | id 0'")
      ->required();
  c_cat_norm->callback([&] {
    action = [&] {
      tl::ObjectWord dom = tl::parse_object(dom_text, mode());
      tl::MTerm term = tl::parse_term(term_text, mode(), dom);
      tl::NormalizeTermResult res = tl::normalize_term(term, conv());
      const char* var = mode() == tl::Mode::plain ? "delta" : "q";
      if (emit_json)
        std::cout << json{{"scalar_exp", res.scalar_exp},
                          {"variable", var},
                          {"term", tl::format_term(res.term)}}
                         .dump(2)
                  << "\n";
      else
        std::cout << var << "^" << res.scalar_exp << " * "
                  << tl::format_term(res.term) << "\n";
    };
  });

  auto* c_cat_hom = c_cat->add_subcommand(
      "hom", "basis of strand pairings between two objects");
  c_cat_hom->fallthrough();
  c_cat_hom->add_option("--mode", mode_name, "plain or oriented")
      ->check(CLI::IsMember({"plain", "oriented"}));
  c_cat_hom->add_option("--dom", dom_text, "bottom object")->required();
  c_cat_hom->add_option("--cod", cod_text, "top object")->required();
  c_cat_hom->callback([&] {
    action = [&] {
      std::vector<tl::ONet> basis = tl::hom_basis(
          tl::parse_object(dom_text, mode()), tl::parse_object(cod_text, mode()));
      if (emit_json) {
        json pairings = json::array();
        for (const tl::ONet& net : basis)
          pairings.push_back(tl::format_net_pairing(net));
        std::cout << json{{"count", basis.size()}, {"pairings", pairings}}.dump(2)
                  << "\n";
      } else {
        for (const tl::ONet& net : basis)
          std::cout << tl::format_net_pairing(net) << "\n";
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    action();
  } catch (const tl::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const tl::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
