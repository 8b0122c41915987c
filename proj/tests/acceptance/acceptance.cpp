// Runs the acceptance criteria and prints one PASS/FAIL line for each.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "coxword/closure.hpp"
#include "coxword/registry.hpp"
#include "coxword/suites.hpp"
#include "coxword/type_a.hpp"
#include "coxword/word_graph.hpp"
#include "../oracles.hpp"

using namespace coxword;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;
  };

  struct Criterion {
    int                      id;
    std::string              name;
    double                   limit_seconds;  // 0 for no limit
    std::function<Outcome()> run;
  };

  std::map<std::string, SystemHandle> g_systems;

  SystemHandle const& sys(std::string const& name) {
    auto it = g_systems.find(name);
    if (it == g_systems.end()) {
      it = g_systems.emplace(name, load_system(name)).first;
    }
    return it->second;
  }

  SuiteOptions options() {
    SuiteOptions o;
    o.threads = std::max(1u, std::thread::hardware_concurrency());
    return o;
  }

  std::vector<std::string> sweep() {
    std::vector<std::string> out = {"A3", "2A3", "A4", "2A4", "BC3", "D4", "H3", "affA2"};
    for (int n = 2; n <= 7; ++n) {
      out.push_back("I2(" + std::to_string(n) + ")");
      out.push_back("2I2(" + std::to_string(n) + ")");
    }
    return out;
  }

  // Runs suites over systems; the detail names the failing pairs.
  Outcome run_suites(std::vector<std::string> const& suites,
                     std::vector<std::string> const& systems) {
    Outcome     out;
    std::size_t records = 0;
    for (auto const& suite : suites) {
      for (auto const& name : systems) {
        auto const rep = run_suite(suite, sys(name), options());
        records += rep.records.size();
        if (!rep.pass) {
          out.pass = false;
          out.detail += " " + suite + "/" + name;
          for (auto const& r : rep.records) {
            if (!r.pass) {
              out.detail += "[z=" + r.z + "]";
              break;
            }
          }
        }
      }
    }
    out.detail = std::to_string(records) + " records" + (out.pass ? "" : "; failing:" + out.detail);
    return out;
  }

  Outcome word_graph_example() {
    auto const&     h = sys("2A3");
    ElementId const z = parse_element(h, "(1,4)(2,3)");
    std::set<std::string> got;
    for (auto const& w : *h.engine->involution_words(z)) {
      got.insert(format_word(w, 3));
    }
    std::set<std::string> const want = {"2123", "1213", "1231", "3213",
                                        "3231", "2321", "2312", "2132"};
    auto const g = build_word_graph(*h.engine, z, WordKind::Inv);
    std::set<std::pair<std::string, std::string>> half;
    for (auto const& e : g.edges) {
      if (e.kind == RelationKind::HalfBraid) {
        half.emplace(format_word(g.vertices[e.u], 3), format_word(g.vertices[e.v], 3));
      }
    }
    std::set<std::pair<std::string, std::string>> const want_half = {{"1213", "3213"},
                                                                     {"1231", "3231"}};
    Outcome out;
    out.pass   = got == want && half == want_half;
    out.detail = std::to_string(got.size()) + " words, " + std::to_string(half.size())
                 + " half-braid edges";
    return out;
  }

  Outcome atom_counts() {
    struct Case {
      char const* name;
      std::size_t atoms;
      std::size_t classes;
    };
    Outcome out;
    for (auto [name, want_atoms, want_classes] :
         {Case{"2A3", 7, 3}, Case{"BC3", 13, 3}, Case{"D4", 29, 3}, Case{"H3", 37, 5}}) {
      auto const&     h     = sys(name);
      ElementId const w0    = static_cast<ElementId>(h.table->size() - 1);
      auto const      atoms = h.engine->hecke_atoms(w0);
      RewriteSystem   rules(schema_set(*h.engine, SchemaSet::SimpleHecke));
      std::set<PrimedWord> seen;
      std::map<ElementId, std::size_t> class_of;
      std::size_t          classes = 0;
      auto const           words = h.engine->reduced_hecke_words(w0);
      std::set<PrimedWord> const target(words.begin(), words.end());
      auto const in_target = [&](std::span<Letter const> x) {
        return target.contains(PrimedWord(x.begin(), x.end()));
      };
      for (auto const& w : words) {
        if (seen.contains(w)) {
          continue;
        }
        auto const cls = equivalence_class(w, rules, in_target);
        if (!cls.ok()) {
          out.pass = false;
        }
        for (auto const& x : cls.words) {
          seen.insert(x);
          ElementId const a = h.table->reduced_product(strip_primes(x));
          auto [it, fresh]  = class_of.emplace(a, classes);
          if (!fresh && it->second != classes) {
            out.pass = false;  // an atom split across classes
          }
        }
        ++classes;
      }
      bool const ok = atoms.size() == want_atoms && classes == want_classes
                      && class_of.size() == atoms.size();
      out.pass = out.pass && ok;
      out.detail += std::string(name) + " " + std::to_string(atoms.size()) + "/"
                    + std::to_string(classes) + " ";
    }
    return out;
  }

  Outcome m_law() {
    std::vector<std::string> dihedral;
    for (int n = 2; n <= 7; ++n) {
      dihedral.push_back("I2(" + std::to_string(n) + ")");
      dihedral.push_back("2I2(" + std::to_string(n) + ")");
    }
    Outcome out = run_suites({"mtwisted"}, sweep());
    // Independent check of m(s,t;Ad*_z) on the dihedral systems.
    std::size_t checked = 0;
    for (auto const& name : dihedral) {
      auto const& h = sys(name);
      int const   m = h.system().m(0, 1).value();
      for (ElementId z : h.involutions()) {
        auto theta = [&](Gen s) {
          ElementId const a = h.engine->ad_star(z, s);
          for (Gen t = 0; t < 2; ++t) {
            if (a == h.table->from_word(Word{t})) {
              return static_cast<int>(t);
            }
          }
          return -1;
        };
        ++checked;
        if (static_cast<std::size_t>(h.engine->m_twisted_ad(z, 0, 1).value())
            != oracle::dihedral_m_by_search(m, theta(0), theta(1))) {
          out.pass = false;
        }
      }
    }
    out.detail += ", " + std::to_string(checked) + " dihedral twists vs brute force";
    return out;
  }

  Outcome simply_braided() {
    std::vector<std::string> sb;
    for (auto const& name : registry_names()) {
      if (is_simply_braided(sys(name).system())) {
        sb.push_back(name);
      }
    }
    Outcome out = run_suites({"simply-braided", "sb-classify"}, registry_names());
    auto const bc = run_suite("simply-braided", sys("BC3"), options());
    bool const exhibits = bc.summary.contains("proper_inv") && bc.summary.contains("proper_primed")
                          && bc.summary.contains("proper_hecke");
    out.pass = out.pass && exhibits && !is_simply_braided(sys("BC3").system());
    out.detail += ", " + std::to_string(sb.size()) + " simply braided systems";
    if (exhibits) {
      out.detail += ", BC3 proper at z=" + bc.summary["proper_inv"].get<std::string>();
    }
    return out;
  }

  Outcome type_a() {
    Outcome     out;
    Window const z = Window::identity(5).times_gen(2).times_gen(3).times_gen(2);
    bool const  example = alpha_min(z) == Window({1, 3, 4, 2, 5});
    out                 = run_suites({"type-a"}, {"A3", "A4", "affA2"});
    out.pass            = out.pass && example;
    out.detail += example ? ", alpha_min example ok" : ", alpha_min example wrong";
    return out;
  }

  Outcome oracles() {
    Outcome out = run_suites({"backend"}, {"A2", "A3"});
    std::mt19937_64                             gen(20240601);
    std::uniform_int_distribution<std::int64_t> entry(-20, 25);
    std::size_t                                 tested = 0, bad = 0;
    while (tested < 1000) {
      std::vector<std::int64_t> e(4);
      std::set<std::int64_t>    residues;
      std::int64_t              sum = 0;
      for (auto& x : e) {
        x = entry(gen);
        residues.insert(((x % 4) + 4) % 4);
        sum += x;
      }
      if (residues.size() != 4 || sum != 10) {
        continue;
      }
      ++tested;
      if (Window(e).length() != oracle::affine_length_by_inversions(e)) {
        ++bad;
      }
    }
    out.pass = out.pass && bad == 0;
    out.detail += ", " + std::to_string(tested) + " affine windows, " + std::to_string(bad)
                  + " length mismatches";
    return out;
  }

}  // namespace

int main() {
  std::vector<std::string> const six = {"hh", "hh-primed", "primed-min",
                                        "hecke", "hecke-min", "hecke-prop"};
  std::vector<Criterion> const criteria = {
      {1, "2A3 involution word graph of (1,4)(2,3)", 1, word_graph_example},
      {2, "atom counts and mixed half-braid classes", 120, atom_counts},
      {3, "word-property theorems on the sweep", 600, [&] { return run_suites(six, sweep()); }},
      {4, "primed word cardinality", 0, [] { return run_suites({"cardinality"}, sweep()); }},
      {5, "twisted dihedral orders", 0, m_law},
      {6, "commutations in braid blocks", 0, [] { return run_suites({"primed-lemma"}, sweep()); }},
      {7, "simply braided equivalence", 0, simply_braided},
      {8, "type A suite", 300, type_a},
      {9, "oracle cross-checks", 0, oracles},
  };
  bool all = true;
  for (auto const& c : criteria) {
    auto const t0 = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool const in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    if (!in_time) {
      o.detail += "; over the time limit";
    }
    bool const pass = o.pass && in_time;
    all             = all && pass;
    std::printf("criterion %d: %s  %s  (%.2fs%s)  %s\n", c.id, pass ? "PASS" : "FAIL",
                c.name.c_str(), secs,
                c.limit_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit_seconds)) + "s").c_str() : "",
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
