#include "coxword/word_graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "coxword/error.hpp"

namespace coxword {

  std::string to_string(WordKind kind) {
    switch (kind) {
      case WordKind::Inv: return "inv";
      case WordKind::Primed: return "primed";
      case WordKind::Hecke: return "hecke";
    }
    return "unknown";
  }

  WordKind parse_word_kind(std::string const& text) {
    if (text == "inv") {
      return WordKind::Inv;
    }
    if (text == "primed") {
      return WordKind::Primed;
    }
    if (text == "hecke" || text == "hecke-red") {
      return WordKind::Hecke;
    }
    throw ParseError("unknown word kind: " + text);
  }

  std::size_t WordGraph::index_of(std::span<Letter const> word) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), word,
                               [](PrimedWord const& a, std::span<Letter const> b) {
                                 return std::lexicographical_compare(a.begin(), a.end(),
                                                                     b.begin(), b.end());
                               });
    if (it == vertices.end() || !std::equal(it->begin(), it->end(), word.begin(), word.end())) {
      return static_cast<std::size_t>(-1);
    }
    return static_cast<std::size_t>(it - vertices.begin());
  }

  WordGraph build_word_graph(std::vector<PrimedWord> words, RewriteSystem const& rules,
                             std::size_t rank) {
    WordGraph g;
    g.rank = rank;
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    g.vertices = std::move(words);
    PrimedWord buf;
    for (std::size_t u = 0; u < g.vertices.size(); ++u) {
      PrimedWord const& w = g.vertices[u];
      rules.visit(w, [&](Rewrite const& r) {
        buf = apply_rewrite(w, r);
        std::size_t const v = g.index_of(buf);
        if (v != static_cast<std::size_t>(-1) && u < v) {
          g.edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), r.kind});
        }
      });
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
  }

  WordGraph build_word_graph(InvolutionEngine const& engine, ElementId z, WordKind kind) {
    std::vector<PrimedWord> words;
    SchemaSet               set = SchemaSet::SimpleInv;
    switch (kind) {
      case WordKind::Inv: {
        auto const w = engine.involution_words(z);
        words.assign(w->begin(), w->end());
        break;
      }
      case WordKind::Primed:
        words = engine.primed_words(z);
        set   = SchemaSet::SimplePrimed;
        break;
      case WordKind::Hecke: {
        auto const w = engine.reduced_hecke_words(z);
        words.assign(w.begin(), w.end());
        set = SchemaSet::SimpleHecke;
        break;
      }
    }
    return build_word_graph(std::move(words), RewriteSystem(schema_set(engine, set)),
                            engine.rank());
  }

  GraphStats graph_stats(WordGraph const& g) {
    GraphStats        st;
    std::size_t const n = g.vertices.size();
    st.vertices         = n;
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (auto const& e : g.edges) {
      ++st.edges_by_kind[to_string(e.kind)];
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    for (auto& a : adj) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    std::vector<std::int64_t> dist(n);
    std::vector<bool>         labeled(n, false);
    std::vector<std::uint32_t> queue;
    for (std::size_t src = 0; src < n; ++src) {
      if (!labeled[src]) {
        ++st.components;
      }
      std::fill(dist.begin(), dist.end(), -1);
      queue.assign(1, static_cast<std::uint32_t>(src));
      dist[src] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint32_t const x = queue[head];
        labeled[x]            = true;
        st.diameter           = std::max(st.diameter, static_cast<std::size_t>(dist[x]));
        for (std::uint32_t y : adj[x]) {
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            queue.push_back(y);
          }
        }
      }
    }
    return st;
  }

  std::string edge_color(RelationKind kind) {
    switch (kind) {
      case RelationKind::Braid:
      case RelationKind::PrimedBraid: return "gray";
      case RelationKind::HalfBraid: return "red";
      case RelationKind::PrimedHalfBraid: return "blue";
      case RelationKind::MixedHalfBraid: return "darkgreen";
      case RelationKind::Initial: return "orange";
      case RelationKind::InitialHecke: return "purple";
      case RelationKind::ExceptionalList: return "brown";
      case RelationKind::Idempotent: return "cyan";
      case RelationKind::TypeA: return "black";
    }
    return "black";
  }

  std::string to_dot(WordGraph const& g) {
    std::ostringstream out;
    out << "graph words {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      out << "  n" << i << " [label=\"" << format_word(g.vertices[i], g.rank) << "\"];\n";
    }
    for (auto const& e : g.edges) {
      out << "  n" << e.u << " -- n" << e.v << " [color=" << edge_color(e.kind)
          << ", label=\"" << to_string(e.kind) << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

  bool is_simply_braided(CoxeterSystem const& system) {
    for (ParabolicSubset J : star_invariant_subsets(system, 4)) {
      if (J.size() >= 3 && classify_twisted_type(system, J).is_exceptional()) {
        return false;
      }
    }
    return true;
  }

}  // namespace coxword
