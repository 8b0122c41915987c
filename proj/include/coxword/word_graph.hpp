#ifndef COXWORD_WORD_GRAPH_HPP_
#define COXWORD_WORD_GRAPH_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coxword/involution.hpp"
#include "coxword/relations.hpp"

namespace coxword {

  enum class WordKind : std::uint8_t { Inv, Primed, Hecke };

  std::string to_string(WordKind kind);
  WordKind    parse_word_kind(std::string const& text);

  struct WordGraph {
    struct Edge {
      std::uint32_t u;
      std::uint32_t v;
      RelationKind  kind;

      friend auto operator<=>(Edge const&, Edge const&) = default;
    };

    std::vector<PrimedWord> vertices;  // sorted
    std::vector<Edge>       edges;     // u < v, sorted
    std::size_t             rank = 0;

    std::size_t index_of(std::span<Letter const> word) const;  // npos if absent
  };

  // The graph on `words` whose edges are single applications of `rules`.
  // Parallel edges of distinct kinds are kept.
  WordGraph build_word_graph(std::vector<PrimedWord> words, RewriteSystem const& rules,
                             std::size_t rank);

  // Involution, primed involution or reduced involution Hecke word graph
  // of z, with the braid and (primed, mixed) half-braid relations.
  WordGraph build_word_graph(InvolutionEngine const& engine, ElementId z, WordKind kind);

  struct GraphStats {
    std::size_t                        vertices = 0;
    std::map<std::string, std::size_t> edges_by_kind;
    std::size_t                        components = 0;
    std::size_t                        diameter   = 0;  // largest finite distance
  };

  GraphStats graph_stats(WordGraph const& g);

  std::string edge_color(RelationKind kind);
  std::string to_dot(WordGraph const& g);

  // No *-invariant J with |J| <= 4 of type 2A3, BC3, D4 or H3.
  bool is_simply_braided(CoxeterSystem const& system);

}  // namespace coxword

#endif  // COXWORD_WORD_GRAPH_HPP_
