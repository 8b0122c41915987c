#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxword/error.hpp"
#include "coxword/registry.hpp"
#include "coxword/suites.hpp"
#include "coxword/word_graph.hpp"

using namespace coxword;

namespace {

  struct Common {
    std::string system;
    std::string z = "e";
    std::string kind = "inv";
    std::string out;
    std::string format = "text";
    int         bound  = -1;
    std::size_t threads = 1;
  };

  void emit(Common const& c, std::string const& text) {
    if (c.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(c.out);
    if (!f) {
      throw ParseError("cannot write " + c.out);
    }
    f << text;
  }

  std::vector<std::string> enumerate(SystemHandle const& h, Common const& c) {
    InvolutionEngine const& E    = *h.engine;
    std::size_t const       rank = h.table->rank();
    ElementId const         z    = parse_element(h, c.z);
    std::vector<std::string> out;
    if (c.kind == "atoms") {
      for (ElementId w : E.hecke_atoms(z)) {
        out.push_back(h.group->format(h.table->element(w)));
      }
      return out;
    }
    if (!E.is_twisted_involution(z)) {
      throw NotTwistedInvolution(c.z + " is not a twisted involution");
    }
    std::vector<PrimedWord> words;
    if (c.kind == "inv") {
      auto const w = E.involution_words(z);
      words.assign(w->begin(), w->end());
    } else if (c.kind == "primed") {
      words = E.primed_words(z);
    } else if (c.kind == "hecke-red") {
      auto const w = E.reduced_hecke_words(z);
      words.assign(w.begin(), w.end());
    } else if (c.kind == "hecke") {
      std::size_t const bound = c.bound >= 0 ? static_cast<std::size_t>(c.bound)
                                             : h.table->length(z) + 2;
      auto const w = E.hecke_words(z, bound);
      words.assign(w.begin(), w.end());
    } else {
      throw ParseError("unknown kind: " + c.kind);
    }
    for (auto const& w : words) {
      out.push_back(format_word(w, rank));
    }
    return out;
  }

  WordGraph graph_of(SystemHandle const& h, Common const& c) {
    ElementId const z = parse_element(h, c.z);
    if (!h.engine->is_twisted_involution(z)) {
      throw NotTwistedInvolution(c.z + " is not a twisted involution");
    }
    return build_word_graph(*h.engine, z, parse_word_kind(c.kind));
  }

  nlohmann::json stats_json(GraphStats const& s) {
    return {{"vertices", s.vertices},
            {"edges", s.edges_by_kind},
            {"components", s.components},
            {"diameter", s.diameter}};
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Words for twisted involutions in Coxeter groups"};
  app.require_subcommand(1);
  Common      c;
  std::string suite;
  long long   fault = -1;

  auto add_system = [&](CLI::App* sub) {
    sub->add_option("--system", c.system, "registry name or JSON file")->required();
    sub->add_option("--threads", c.threads, "worker threads");
    sub->add_option("--out", c.out, "output file");
  };
  auto add_z = [&](CLI::App* sub, std::vector<std::string> kinds) {
    sub->add_option("--z", c.z, "element as word, window or cycles");
    sub->add_option("--kind", c.kind, "word kind")->check(CLI::IsMember(kinds));
  };

  auto* en = app.add_subcommand("enumerate", "list a word set");
  add_system(en);
  add_z(en, {"inv", "primed", "hecke", "hecke-red", "atoms"});
  en->add_option("--bound", c.bound, "length bound for Hecke words");
  en->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

  auto* gr = app.add_subcommand("graph", "export a word graph");
  add_system(gr);
  add_z(gr, {"inv", "primed", "hecke"});
  gr->add_option("--format", c.format)->check(CLI::IsMember({"text", "dot", "json"}));

  auto* st = app.add_subcommand("stats", "word graph statistics");
  add_system(st);
  add_z(st, {"inv", "primed", "hecke"});
  st->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

  auto* ve = app.add_subcommand("verify", "run a verification suite");
  add_system(ve);
  ve->add_option("--suite", suite, "suite id")->required();
  ve->add_option("--fault", fault, "drop one relation, chosen by this seed");
  ve->add_option("--bound", c.bound, "rho bound for infinite groups");
  ve->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

  auto* ls = app.add_subcommand("list-systems", "list built-in systems and suites");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ls->parsed()) {
      std::cout << "systems:";
      for (auto const& n : registry_names()) {
        std::cout << ' ' << n;
      }
      std::cout << "\nsuites:";
      for (auto const& n : suite_names()) {
        std::cout << ' ' << n;
      }
      std::cout << '\n';
      return 0;
    }
    LoadOptions lo;
    if (ve->parsed() && c.bound >= 0) {
      lo.rho_bound = static_cast<std::size_t>(c.bound);
    }
    SystemHandle const h = load_system(c.system, lo);
    if (en->parsed()) {
      auto const  words = enumerate(h, c);
      std::string text;
      if (c.format == "json") {
        text = nlohmann::json(words).dump() + "\n";
      } else {
        for (auto const& w : words) {
          text += w + "\n";
        }
      }
      emit(c, text);
    } else if (gr->parsed()) {
      WordGraph const g = graph_of(h, c);
      if (c.format == "json") {
        nlohmann::json j;
        for (auto const& v : g.vertices) {
          j["vertices"].push_back(format_word(v, g.rank));
        }
        j["edges"] = nlohmann::json::array();
        for (auto const& e : g.edges) {
          j["edges"].push_back({format_word(g.vertices[e.u], g.rank),
                                format_word(g.vertices[e.v], g.rank), to_string(e.kind)});
        }
        emit(c, j.dump() + "\n");
      } else {
        emit(c, to_dot(g));
      }
    } else if (st->parsed()) {
      GraphStats const s = graph_stats(graph_of(h, c));
      if (c.format == "json") {
        emit(c, stats_json(s).dump() + "\n");
      } else {
        std::string text = "vertices " + std::to_string(s.vertices) + "\n";
        for (auto const& [kind, n] : s.edges_by_kind) {
          text += "edges " + kind + " " + std::to_string(n) + "\n";
        }
        text += "components " + std::to_string(s.components) + "\n";
        text += "diameter " + std::to_string(s.diameter) + "\n";
        emit(c, text);
      }
    } else if (ve->parsed()) {
      SuiteOptions so;
      so.threads = c.threads;
      if (fault >= 0) {
        so.fault_seed = static_cast<std::uint64_t>(fault);
      }
      VerificationReport const rep = run_suite(suite, h, so);
      if (c.format == "text") {
        std::string text;
        for (auto const& r : rep.records) {
          if (!r.pass) {
            text += "FAIL " + r.z + " " + r.data.dump() + "\n";
          }
        }
        text += std::string(rep.pass ? "PASS" : "FAIL") + " " + rep.suite + " " + rep.system
                + " records=" + std::to_string(rep.records.size()) + " "
                + rep.summary.dump() + "\n";
        emit(c, text);
      } else {
        emit(c, rep.to_jsonl());
      }
      return rep.pass ? 0 : 1;
    }
  } catch (CoxwordError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
