#ifndef COXWORD_RELATIONS_HPP_
#define COXWORD_RELATIONS_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "coxword/coxeter_system.hpp"
#include "coxword/involution.hpp"
#include "coxword/word.hpp"

namespace coxword {

  enum class RelationKind : std::uint8_t {
    Braid,
    HalfBraid,
    PrimedBraid,
    PrimedHalfBraid,
    MixedHalfBraid,
    Initial,
    InitialHecke,
    ExceptionalList,
    Idempotent,
    TypeA,
  };

  std::string to_string(RelationKind kind);

  enum class Position : std::uint8_t { Anywhere, InitialOnly, InitialWithSuffixCondition };

  // Decides whether the remainder of a word after a matched prefix is an
  // admissible suffix.
  using SuffixCondition = std::function<bool(std::span<Letter const>)>;

  // A family of patterns any two of which may be exchanged.  Most schemas
  // have two members (lhs and rhs); initial relations generated from all
  // words for a longest element form a single larger block.
  struct RelationSchema {
    RelationKind            kind     = RelationKind::Braid;
    Position                position = Position::Anywhere;
    std::vector<PrimedWord> members;
    SuffixCondition         condition;
    std::string             label;

    PrimedWord const& lhs() const {
      return members.at(0);
    }
    PrimedWord const& rhs() const {
      return members.at(1);
    }
  };

  // One application of a schema: the letters [pos, pos + length) are
  // replaced by `replacement`.
  struct Rewrite {
    std::size_t             pos;
    std::size_t             length;
    std::span<Letter const> replacement;
    RelationKind            kind;
  };

  PrimedWord apply_rewrite(std::span<Letter const> word, Rewrite const& r);

  // Indexes a set of schemas for fast matching.
  class RewriteSystem {
   public:
    RewriteSystem() = default;
    explicit RewriteSystem(std::vector<RelationSchema> schemas);

    std::vector<RelationSchema> const& schemas() const noexcept {
      return schemas_;
    }

    // Calls f(Rewrite) for every single application to `word`.  Blocks
    // with more than kHubThreshold members link every member to the first
    // one only, which generates the same equivalence relation.
    void for_each(std::span<Letter const> word, std::function<void(Rewrite const&)> const& f) const {
      visit(word, f);
    }

    template <class F>
    void visit(std::span<Letter const> word, F&& f) const {
      std::int32_t node = 0;
      for (std::size_t k = 0; k < word.size() && node >= 0; ++k) {
        node = initial_.child(node, word[k]);
        if (node >= 0) {
          for (Entry e : initial_.entries[node]) {
            emit(e, word, 0, f);
          }
        }
      }
      if (anywhere_.entries.size() <= 1) {
        return;
      }
      for (std::size_t pos = 0; pos < word.size(); ++pos) {
        node = 0;
        for (std::size_t k = pos; k < word.size(); ++k) {
          node = anywhere_.child(node, word[k]);
          if (node < 0) {
            break;
          }
          for (Entry e : anywhere_.entries[node]) {
            emit(e, word, pos, f);
          }
        }
      }
    }

    std::vector<PrimedWord> neighbors(std::span<Letter const> word) const;

    static constexpr std::size_t kHubThreshold = 8;

   private:
    struct Entry {
      std::uint32_t schema;
      std::uint32_t member;
    };

    // Pattern trie over the 128-letter alphabet (generator, prime flag).
    struct Trie {
      static constexpr std::size_t kAlphabet = 128;

      std::vector<std::int32_t>       next = std::vector<std::int32_t>(kAlphabet, -1);
      std::vector<std::vector<Entry>> entries{1};

      static std::size_t slot(Letter l) noexcept {
        return gen_of(l) + (is_primed(l) ? 64u : 0u);
      }
      std::int32_t child(std::int32_t node, Letter l) const noexcept {
        return next[static_cast<std::size_t>(node) * kAlphabet + slot(l)];
      }
      void add(std::span<Letter const> pattern, Entry e);
    };

    template <class F>
    void emit(Entry e, std::span<Letter const> word, std::size_t pos, F& f) const {
      RelationSchema const& s   = schemas_[e.schema];
      std::size_t const     len = s.members[e.member].size();
      if (s.position == Position::InitialWithSuffixCondition && s.condition
          && !s.condition(word.subspan(len))) {
        return;
      }
      bool const hub = s.members.size() > kHubThreshold;
      for (std::size_t k = 0; k < s.members.size(); ++k) {
        if (k == e.member || (hub && e.member != 0 && k != 0)) {
          continue;
        }
        f(Rewrite{pos, len, s.members[k], s.kind});
      }
    }

    std::vector<RelationSchema> schemas_;
    Trie                        anywhere_;
    Trie                        initial_;
  };

  // Removes schemas with the same kind, position, label and member set.
  std::vector<RelationSchema> dedup_schemas(std::vector<RelationSchema> schemas);

  std::vector<RelationSchema> braid_schemas(CoxeterSystem const& system);
  std::vector<RelationSchema> half_braid_schemas(CoxeterSystem const& system);
  std::vector<RelationSchema> primed_braid_schemas(CoxeterSystem const& system);
  std::vector<RelationSchema> primed_half_braid_schemas(CoxeterSystem const& system);
  std::vector<RelationSchema> mixed_half_braid_schemas(std::shared_ptr<CayleyTable const> table);
  std::vector<RelationSchema> idempotent_schemas(std::size_t rank);

  enum class Variant : std::uint8_t { Plain, Primed, Hecke };

  // The explicit relation lists for a subsystem of type 2A3, BC3, D4 or H3
  // under the given labeling.  Throws UnknownType for other types.
  std::vector<RelationSchema> exceptional_schemas(std::shared_ptr<CayleyTable const> table,
                                                  TypeLabel                          type,
                                                  Labeling const&                    labeling,
                                                  Variant                            variant);

  // Exceptional lists for every J = J* of exceptional type and every
  // compatible labeling.
  std::vector<RelationSchema> all_exceptional_schemas(std::shared_ptr<CayleyTable const> table,
                                                      Variant                            variant);

  // All initial relations (Plain: involution words, Primed: primed words,
  // Hecke: reduced involution Hecke words) for w0^J.
  std::vector<RelationSchema> initial_relation_schemas(InvolutionEngine const& engine,
                                                       ParabolicSubset         J,
                                                       Variant                 variant);

  // Whether the word is a reduced word for an element of ^J W.
  bool is_min_coset_word(CayleyTable const& table, std::span<Letter const> word,
                         ParabolicSubset J);

  // Named relation sets.
  enum class SchemaSet : std::uint8_t {
    HH,             // braid + initial relations
    HHMin,          // braid + half-braid + plain exceptional lists
    HHPrimed,       // primed braid + primed initial relations
    PrimedMin,      // primed braid + primed half-braid + primed lists
    Hecke,          // braid + initial Hecke relations
    HeckeMin,       // braid + mixed half-braid + Hecke lists
    HeckeProp,      // HH + idempotent
    SimpleInv,      // braid + half-braid
    SimplePrimed,   // primed braid + primed half-braid
    SimpleHecke,    // braid + mixed half-braid
  };

  std::string to_string(SchemaSet set);

  std::vector<RelationSchema> schema_set(InvolutionEngine const& engine, SchemaSet set);

}  // namespace coxword

#endif  // COXWORD_RELATIONS_HPP_
