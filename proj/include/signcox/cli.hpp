#pragma once

// The command-line front end, as a library function so tests can drive it
// in-process.  Exit codes: 0 = success (and, for verifying commands, every
// check passed), 1 = at least one verification failed, 2 = usage or input
// error.

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "signcox/dickson.hpp"
#include "signcox/enumerate.hpp"
#include "signcox/errors.hpp"
#include "signcox/exact.hpp"
#include "signcox/graph.hpp"
#include "signcox/orders.hpp"
#include "signcox/presentations.hpp"
#include "signcox/report.hpp"
#include "signcox/representation.hpp"
#include "signcox/taucalc.hpp"
#include "signcox/words.hpp"

namespace signcox {

struct CommandOutcome {
  int exit_code = 0;
  std::string out;  // what the command wrote to stdout
  std::string err;  // diagnostics
};

namespace detail {

inline SignedCoxeterGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read graph file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph(text.str());
}

inline nlohmann::json matrix_rows(const ExactMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.dim(); ++j)
      row.push_back(m(i, j).convert_to<long long>());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void print_matrix(std::ostream& os, const ExactMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) os << ", ";
      os << m(i, j).str();
    }
    os << "]\n";
  }
}

inline nlohmann::json report_json(const IdentityReport& r) {
  nlohmann::json j;
  j["name"] = r.identity_name;
  j["parameters"] = r.parameters;
  j["holds"] = r.holds;
  j["note"] = r.note;
  return j;
}

// Deterministic chain sample shared by the tau and support suites.
inline std::vector<std::vector<int>> sample_chains(const SignedCoxeterGraph& g,
                                                   int count, int max_len) {
  std::mt19937 rng(0x7a5cau + static_cast<unsigned>(g.n));
  std::uniform_int_distribution<int> vdist(1, g.n);
  std::uniform_int_distribution<int> ldist(1, max_len);
  std::vector<std::vector<int>> chains;
  chains.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) {
    std::vector<int> chain;
    const int len = ldist(rng);
    for (int u = 0; u < len; ++u) chain.push_back(vdist(rng));
    chains.push_back(std::move(chain));
  }
  return chains;
}

// Every argument triple accepted by verify_tau_middle on this graph.
inline std::vector<std::array<int, 3>> valid_middle_triples(
    const SignedCoxeterGraph& g) {
  std::vector<std::array<int, 3>> out;
  if (g.shape == GraphShape::line) {
    for (int j = 1; j <= g.n; ++j)
      for (int i = 1; i <= j; ++i) out.push_back({i, j, i});
  } else if (g.shape == GraphShape::cycle) {
    for (int j = 1; j <= g.n; ++j)
      for (int d = 0; d <= g.n - 2; ++d) {
        const int i = (j - d + g.n - 1) % g.n + 1;
        out.push_back({i, j, i});
      }
  }
  return out;
}

inline void append(std::vector<IdentityReport>& into,
                   std::vector<IdentityReport> from) {
  into.insert(into.end(), std::make_move_iterator(from.begin()),
              std::make_move_iterator(from.end()));
}

inline std::vector<IdentityReport> suite_tau_chains(const Representation& rep) {
  std::vector<IdentityReport> out;
  for (const auto& chain : sample_chains(rep.graph, 200, 6))
    out.push_back(verify_tau_chain(rep, chain));
  return out;
}

inline std::vector<IdentityReport> suite_row_support(
    const Representation& rep) {
  std::vector<IdentityReport> out;
  for (const auto& chain : sample_chains(rep.graph, 200, 6))
    out.push_back(verify_row_support(rep, chain));
  return out;
}

inline std::vector<IdentityReport> suite_tau_middle(const Representation& rep) {
  std::vector<IdentityReport> out;
  for (const auto& t : valid_middle_triples(rep.graph))
    out.push_back(verify_tau_middle(rep, t[0], t[1], t[2]));
  return out;
}

inline std::vector<IdentityReport> suite_dickson(const Representation& rep,
                                                 unsigned long max_r = 5) {
  const SignedCoxeterGraph& g = rep.graph;
  std::vector<IdentityReport> out;
  auto push_pair = [&out](std::pair<IdentityReport, IdentityReport> pr) {
    out.push_back(std::move(pr.first));
    out.push_back(std::move(pr.second));
  };
  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j)
      if (g.m(i, j) == 3)
        for (unsigned long r = 1; r <= max_r; ++r)
          push_pair(verify_dickson_identity(rep, DicksonMode::two_gen, i, j, r));
  if (g.shape == GraphShape::line) {
    for (int i = 1; i <= g.n; ++i)
      for (int j = i + 1; j <= g.n; ++j)
        for (unsigned long r = 1; r <= max_r; ++r)
          push_pair(verify_dickson_identity(rep, DicksonMode::line, i, j, r));
  }
  if (g.shape == GraphShape::cycle) {
    for (int i = 1; i <= g.n; ++i)
      for (int j = 1; j <= g.n; ++j) {
        if (j == i || j == g.pred(i)) continue;
        for (unsigned long r = 1; r <= max_r; ++r)
          push_pair(verify_dickson_identity(rep, DicksonMode::cycle, i, j, r));
      }
  }
  return out;
}

inline std::vector<IdentityReport> run_suite(const Representation& rep,
                                             const std::string& suite) {
  std::vector<IdentityReport> out;
  const bool shaped = rep.graph.shape == GraphShape::line ||
                      rep.graph.shape == GraphShape::cycle;
  if (suite == "tau") {
    append(out, verify_tau_basic(rep));
    append(out, suite_tau_chains(rep));
    if (shaped) append(out, suite_tau_middle(rep));
    return out;
  }
  if (suite == "dickson") return suite_dickson(rep);
  if (suite == "support") {
    append(out, suite_row_support(rep));
    out.push_back(verify_sum_support(rep));
    return out;
  }
  if (suite == "presentation") {
    Presentation p = generate_presentation(rep.graph);
    append(out, verify_presentation(rep, p));
    append(out, minimality_check(rep, p));
    return out;
  }
  if (suite == "all") {
    append(out, verify_tau_basic(rep));
    append(out, suite_tau_chains(rep));
    append(out, suite_row_support(rep));
    if (shaped) append(out, suite_tau_middle(rep));
    append(out, suite_dickson(rep));
    out.push_back(verify_sum_support(rep));
    if (shaped) {
      Presentation p = generate_presentation(rep.graph);
      append(out, verify_presentation(rep, p));
      append(out, minimality_check(rep, p));
    }
    return out;
  }
  throw PreconditionError("verify: unknown suite \"" + suite + "\"");
}

}  // namespace detail

inline CommandOutcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  int failures = 0;

  CLI::App app{"signed simply-laced diagram toolkit"};
  app.name("signcox");
  app.require_subcommand(1);

  std::string graph_path, word_text;
  std::string suite = "all", format = "text";
  bool json = false, minimal = false;
  unsigned long dickson_n = 0;
  long dickson_x = 0;
  int dickson_alpha = 1;
  std::size_t cap_enumerate = 200000, cap_classify = 10000;

  CLI::App* rep_cmd = app.add_subcommand(
      "rep", "print the bilinear form and the reflection matrices");
  rep_cmd->add_option("--graph", graph_path, "graph JSON file")->required();
  rep_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App* degeneracy_cmd =
      app.add_subcommand("degeneracy", "test whether the form is degenerate");
  degeneracy_cmd->add_option("--graph", graph_path, "graph JSON file")
      ->required();
  degeneracy_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App* order_cmd =
      app.add_subcommand("order", "order of the element given by a word");
  order_cmd->add_option("--graph", graph_path, "graph JSON file")->required();
  order_cmd
      ->add_option("--word", word_text,
                   "word as space-separated 1-based vertex indices")
      ->required();
  order_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App* relations_cmd = app.add_subcommand(
      "relations", "emit the structured relator list for a line or cycle");
  relations_cmd->add_option("--graph", graph_path, "graph JSON file")
      ->required();
  relations_cmd
      ->add_option("--format", format, "output format (text, json, gap)")
      ->check(CLI::IsMember({"text", "json", "gap"}));
  relations_cmd->add_flag("--json", json, "shorthand for --format json");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--graph", graph_path, "graph JSON file")->required();
  verify_cmd
      ->add_option("--suite", suite,
                   "tau, dickson, support, presentation, or all")
      ->check(CLI::IsMember({"tau", "dickson", "support", "presentation",
                             "all"}));
  verify_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App* dickson_cmd = app.add_subcommand(
      "dickson", "evaluate the second-kind recurrence E_n(x, alpha)");
  dickson_cmd->add_option("--n", dickson_n, "index n");
  dickson_cmd->add_option("--x", dickson_x, "evaluation point x")->required();
  dickson_cmd->add_option("--alpha", dickson_alpha, "parameter alpha (+-1)")
      ->required();
  dickson_cmd->add_flag("--minimal", minimal,
                        "smallest r >= 2 with E_{r-1}(x, alpha) = 0");
  dickson_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App* enumerate_cmd = app.add_subcommand(
      "enumerate", "breadth-first enumeration of the matrix group");
  enumerate_cmd->add_option("--graph", graph_path, "graph JSON file")
      ->required();
  enumerate_cmd->add_option("--cap", cap_enumerate, "element cap");
  enumerate_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "classify a uniform-sign cycle, with evidence");
  classify_cmd->add_option("--graph", graph_path, "graph JSON file")
      ->required();
  classify_cmd->add_option("--cap", cap_classify, "evidence enumeration cap");
  classify_cmd->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {0, out.str(), ""};
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return {0, out.str(), ""};
  } catch (const CLI::ParseError& e) {
    return {e.get_exit_code() == 0 ? 0 : 2, "",
            std::string(e.what()) + "\n"};
  }

  try {
    if (rep_cmd->parsed()) {
      Representation rep = make_representation(detail::load_graph(graph_path));
      if (json) {
        nlohmann::json doc;
        doc["n"] = rep.graph.n;
        doc["bform"] = detail::matrix_rows(rep.bform);
        nlohmann::json refl = nlohmann::json::array();
        for (int i = 1; i <= rep.graph.n; ++i)
          refl.push_back(detail::matrix_rows(rep.reflection(i)));
        doc["reflections"] = std::move(refl);
        out << doc.dump(2) << "\n";
      } else {
        out << "B:\n";
        detail::print_matrix(out, rep.bform);
        for (int i = 1; i <= rep.graph.n; ++i) {
          out << "pi_" << i << ":\n";
          detail::print_matrix(out, rep.reflection(i));
        }
      }
    } else if (degeneracy_cmd->parsed()) {
      Representation rep = make_representation(detail::load_graph(graph_path));
      const Int d = det(rep.bform);
      if (json) {
        nlohmann::json doc;
        doc["degenerate"] = (d == 0);
        doc["det"] = d.str();
        out << doc.dump() << "\n";
      } else {
        out << (d == 0 ? "degenerate" : "non-degenerate") << "\n";
      }
    } else if (order_cmd->parsed()) {
      Representation rep = make_representation(detail::load_graph(graph_path));
      OrderResult r = element_order(rep, parse_word(word_text));
      if (json) {
        nlohmann::json doc;
        doc["kind"] = r.finite ? "finite" : "infinite";
        if (r.finite) doc["value"] = r.value;
        out << doc.dump() << "\n";
      } else if (r.finite) {
        out << "finite " << r.value << "\n";
      } else {
        out << "infinite\n";
      }
    } else if (relations_cmd->parsed()) {
      Presentation p = generate_presentation(detail::load_graph(graph_path));
      PresentationFormat f = PresentationFormat::text;
      if (json || format == "json") f = PresentationFormat::json;
      else if (format == "gap") f = PresentationFormat::gap;
      out << export_presentation(p, f);
      if (f != PresentationFormat::gap) out << "\n";
    } else if (verify_cmd->parsed()) {
      Representation rep = make_representation(detail::load_graph(graph_path));
      std::vector<IdentityReport> reports = detail::run_suite(rep, suite);
      std::size_t passed = 0;
      for (const IdentityReport& r : reports) {
        if (r.holds) ++passed;
        else ++failures;
      }
      if (json) {
        nlohmann::json doc = nlohmann::json::array();
        for (const IdentityReport& r : reports)
          doc.push_back(detail::report_json(r));
        out << doc.dump(2) << "\n";
      } else {
        for (const IdentityReport& r : reports)
          out << format_report_line(r) << "\n";
        out << "passed " << passed << "/" << reports.size() << "\n";
      }
    } else if (dickson_cmd->parsed()) {
      DicksonQuery q{dickson_x, dickson_alpha};
      if (minimal) {
        auto r = minimal_relation_exponent(q);
        if (json) {
          nlohmann::json doc;
          doc["x"] = q.x;
          doc["alpha"] = q.alpha;
          doc["minimal"] = r ? nlohmann::json(*r) : nlohmann::json(nullptr);
          out << doc.dump() << "\n";
        } else if (r) {
          out << *r << "\n";
        } else {
          out << "none\n";
        }
      } else {
        Int v = dickson_e(dickson_n, q);
        if (json) {
          nlohmann::json doc;
          doc["n"] = dickson_n;
          doc["x"] = q.x;
          doc["alpha"] = q.alpha;
          doc["value"] = v.str();
          out << doc.dump() << "\n";
        } else {
          out << v.str() << "\n";
        }
      }
    } else if (enumerate_cmd->parsed()) {
      Representation rep = make_representation(detail::load_graph(graph_path));
      EnumerationResult r = bfs_enumerate(rep, cap_enumerate);
      if (json) {
        nlohmann::json doc;
        doc["complete"] = r.complete;
        doc["count"] = r.count;
        doc["cap"] = r.cap;
        out << doc.dump() << "\n";
      } else if (r.complete) {
        out << "complete " << r.count << "\n";
      } else {
        out << "exceeded\n";
      }
    } else if (classify_cmd->parsed()) {
      Representation rep = make_representation(detail::load_graph(graph_path));
      ClassificationEvidence ev = classify_with_evidence(rep, cap_classify);
      bool agree = true;
      for (const IdentityReport& r : ev.evidence)
        if (!r.holds) {
          agree = false;
          ++failures;
        }
      if (json) {
        nlohmann::json doc;
        doc["label"] = to_string(ev.label);
        nlohmann::json evj = nlohmann::json::array();
        for (const IdentityReport& r : ev.evidence)
          evj.push_back(detail::report_json(r));
        doc["evidence"] = std::move(evj);
        doc["agreement"] = agree;
        out << doc.dump(2) << "\n";
      } else {
        out << "label: " << to_string(ev.label) << "\n";
        for (const IdentityReport& r : ev.evidence)
          out << format_report_line(r) << "\n";
        out << "agreement: " << (agree ? "yes" : "no") << "\n";
      }
    }
  } catch (const Error& e) {
    return {2, out.str(), std::string(e.what()) + "\n"};
  }

  return {failures > 0 ? 1 : 0, out.str(), ""};
}

}  // namespace signcox
