#include "coxword/relations.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "coxword/error.hpp"

namespace coxword {

  std::string to_string(RelationKind kind) {
    switch (kind) {
      case RelationKind::Braid: return "braid";
      case RelationKind::HalfBraid: return "half-braid";
      case RelationKind::PrimedBraid: return "primed-braid";
      case RelationKind::PrimedHalfBraid: return "primed-half-braid";
      case RelationKind::MixedHalfBraid: return "mixed-half-braid";
      case RelationKind::Initial: return "initial";
      case RelationKind::InitialHecke: return "initial-hecke";
      case RelationKind::ExceptionalList: return "exceptional";
      case RelationKind::Idempotent: return "idempotent";
      case RelationKind::TypeA: return "type-a";
    }
    return "unknown";
  }

  std::string to_string(SchemaSet set) {
    switch (set) {
      case SchemaSet::HH: return "hh";
      case SchemaSet::HHMin: return "hh-min";
      case SchemaSet::HHPrimed: return "hh-primed";
      case SchemaSet::PrimedMin: return "primed-min";
      case SchemaSet::Hecke: return "hecke";
      case SchemaSet::HeckeMin: return "hecke-min";
      case SchemaSet::HeckeProp: return "hecke-prop";
      case SchemaSet::SimpleInv: return "simple-inv";
      case SchemaSet::SimplePrimed: return "simple-primed";
      case SchemaSet::SimpleHecke: return "simple-hecke";
    }
    return "unknown";
  }

  PrimedWord apply_rewrite(std::span<Letter const> word, Rewrite const& r) {
    PrimedWord out;
    out.reserve(word.size() - r.length + r.replacement.size());
    out.insert(out.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(r.pos));
    out.insert(out.end(), r.replacement.begin(), r.replacement.end());
    out.insert(out.end(), word.begin() + static_cast<std::ptrdiff_t>(r.pos + r.length),
               word.end());
    return out;
  }

  void RewriteSystem::Trie::add(std::span<Letter const> pattern, Entry e) {
    std::size_t node = 0;
    for (Letter l : pattern) {
      std::size_t const i = node * kAlphabet + slot(l);
      if (next[i] < 0) {
        next[i] = static_cast<std::int32_t>(entries.size());
        entries.emplace_back();
        next.resize(next.size() + kAlphabet, -1);
      }
      node = static_cast<std::size_t>(next[i]);
    }
    entries[node].push_back(e);
  }

  RewriteSystem::RewriteSystem(std::vector<RelationSchema> schemas)
      : schemas_(std::move(schemas)) {
    for (std::size_t i = 0; i < schemas_.size(); ++i) {
      RelationSchema& s = schemas_[i];
      std::sort(s.members.begin(), s.members.end(), [](auto const& a, auto const& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      s.members.erase(std::unique(s.members.begin(), s.members.end()), s.members.end());
      for (std::size_t j = 0; j < s.members.size(); ++j) {
        PrimedWord const& m = s.members[j];
        if (m.empty()) {
          throw std::invalid_argument("relation patterns must be non-empty");
        }
        Entry const e{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
        (s.position == Position::Anywhere ? anywhere_ : initial_).add(m, e);
      }
    }
  }

  std::vector<PrimedWord> RewriteSystem::neighbors(std::span<Letter const> word) const {
    std::vector<PrimedWord> out;
    for_each(word, [&](Rewrite const& r) {
      out.push_back(apply_rewrite(word, r));
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<RelationSchema> dedup_schemas(std::vector<RelationSchema> schemas) {
    using Key = std::tuple<RelationKind, Position, std::string, std::vector<PrimedWord>>;
    std::set<Key>               seen;
    std::vector<RelationSchema> out;
    for (auto& s : schemas) {
      std::vector<PrimedWord> members = s.members;
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      if (members.size() < 2) {
        continue;
      }
      if (seen.emplace(s.kind, s.position, s.label, std::move(members)).second) {
        out.push_back(std::move(s));
      }
    }
    return out;
  }

  namespace {

    RelationSchema make_schema(RelationKind            kind,
                               Position                position,
                               std::vector<PrimedWord> members,
                               std::string             label = "") {
      RelationSchema s;
      s.kind     = kind;
      s.position = position;
      s.members  = std::move(members);
      s.label    = std::move(label);
      return s;
    }

    PrimedWord prime_first(Word w) {
      w.front() = primed(w.front());
      return w;
    }

    PrimedWord prime_last(Word w) {
      w.back() = primed(w.back());
      return w;
    }

    Order star_twisted_order(CoxeterSystem const& sys, Gen s, Gen t) {
      return m_twisted(sys.m(s, t), s, t, sys.star(s), sys.star(t));
    }

    bool preserves_pair(CoxeterSystem const& sys, Gen s, Gen t) {
      Gen const ss = sys.star(s);
      Gen const ts = sys.star(t);
      return (ss == s && ts == t) || (ss == t && ts == s);
    }

    // The alternating word of the given length that ends in s.
    Word alternating_ending_in(Gen s, Gen t, std::size_t len) {
      return len % 2 == 1 ? alternating(s, t, len) : alternating(t, s, len);
    }

    SuffixCondition min_coset_condition(std::shared_ptr<CayleyTable const> table,
                                        ParabolicSubset                    J) {
      return [table = std::move(table), J](std::span<Letter const> suffix) {
        return is_min_coset_word(*table, suffix, J);
      };
    }

    std::string subset_label(ParabolicSubset J, std::size_t rank) {
      std::string out = "{";
      bool        first = true;
      for (Gen s : J.generators()) {
        if (!first) {
          out += ',';
        }
        first = false;
        out += std::to_string(s + 1);
      }
      (void)rank;
      return out + "}";
    }

    std::string type_name(TwistedType const& t) {
      if (t.label == TypeLabel::I2 || t.label == TypeLabel::TwistedI2) {
        return to_string(t.label) + "(" + t.dihedral_order.to_string() + ")";
      }
      return to_string(t.label);
    }

  }  // namespace

  bool is_min_coset_word(CayleyTable const& table, std::span<Letter const> word,
                         ParabolicSubset J) {
    ElementId x = CayleyTable::identity();
    for (Letter l : word) {
      Gen const s = gen_of(l);
      if (table.is_right_descent(x, s)) {
        return false;
      }
      x = table.right(x, s);
      if (x == kNoElement) {
        return false;
      }
    }
    return (table.left_descents(x) & J.mask()) == 0;
  }

  std::vector<RelationSchema> braid_schemas(CoxeterSystem const& sys) {
    std::vector<RelationSchema> out;
    auto const                  n = static_cast<Gen>(sys.rank());
    for (Gen s = 0; s < n; ++s) {
      for (Gen t = s + 1; t < n; ++t) {
        Order const m = sys.m(s, t);
        if (!m.is_finite()) {
          continue;
        }
        auto const len = static_cast<std::size_t>(m.value());
        out.push_back(make_schema(RelationKind::Braid, Position::Anywhere,
                                  {alternating(s, t, len), alternating(t, s, len)}));
      }
    }
    return out;
  }

  std::vector<RelationSchema> half_braid_schemas(CoxeterSystem const& sys) {
    std::vector<RelationSchema> out;
    auto const                  n = static_cast<Gen>(sys.rank());
    for (Gen s = 0; s < n; ++s) {
      for (Gen t = s + 1; t < n; ++t) {
        Order const m = sys.m(s, t);
        if (!m.is_finite() || !preserves_pair(sys, s, t)) {
          continue;
        }
        // I2(2) coincides with a braid relation.
        if (sys.star(s) == s && m.value() == 2) {
          continue;
        }
        auto const len = static_cast<std::size_t>(star_twisted_order(sys, s, t).value());
        out.push_back(make_schema(RelationKind::HalfBraid, Position::InitialOnly,
                                  {alternating(s, t, len), alternating(t, s, len)}));
      }
    }
    return out;
  }

  std::vector<RelationSchema> primed_braid_schemas(CoxeterSystem const& sys) {
    std::vector<RelationSchema> out;
    auto const                  n = static_cast<Gen>(sys.rank());
    for (Gen s = 0; s < n; ++s) {
      for (Gen t = 0; t < n; ++t) {
        if (s == t) {
          continue;
        }
        Order const m = sys.m(s, t);
        if (!m.is_finite()) {
          continue;
        }
        auto const len = static_cast<std::size_t>(m.value());
        if (s < t) {
          out.push_back(make_schema(RelationKind::PrimedBraid, Position::Anywhere,
                                    {alternating(s, t, len), alternating(t, s, len)}));
          if (len == 2) {
            out.push_back(make_schema(RelationKind::PrimedBraid, Position::Anywhere,
                                      {PrimedWord{primed(s), primed(t)},
                                       PrimedWord{primed(t), primed(s)}}));
          }
        }
        out.push_back(make_schema(RelationKind::PrimedBraid, Position::Anywhere,
                                  {prime_first(alternating(s, t, len)),
                                   prime_last(alternating(t, s, len))}));
      }
    }
    return out;
  }

  std::vector<RelationSchema> primed_half_braid_schemas(CoxeterSystem const& sys) {
    std::vector<RelationSchema> out;
    auto const                  n = static_cast<Gen>(sys.rank());
    for (Gen s = 0; s < n; ++s) {
      for (Gen t = 0; t < n; ++t) {
        Order const m = sys.m(s, t);
        if (!m.is_finite() || !preserves_pair(sys, s, t)) {
          continue;
        }
        auto const len = static_cast<std::size_t>(star_twisted_order(sys, s, t).value());
        Word const x   = alternating_ending_in(s, t, len);
        bool const fixed = sys.star(s) == s && sys.star(t) == t;
        if (s < t && !(fixed && m.value() == 2)) {
          out.push_back(make_schema(RelationKind::PrimedHalfBraid, Position::InitialOnly,
                                    {x, alternating_ending_in(t, s, len)}));
        }
        bool const even_fixed   = fixed && s != t && m.value() % 2 == 0 && m.value() >= 4;
        bool const odd_swapped  = sys.star(s) == t && sys.star(t) == s && m.value() % 2 == 1;
        if (even_fixed || odd_swapped) {
          out.push_back(make_schema(RelationKind::PrimedHalfBraid, Position::InitialOnly,
                                    {x, prime_last(x)}));
        }
      }
    }
    return out;
  }

  std::vector<RelationSchema> mixed_half_braid_schemas(std::shared_ptr<CayleyTable const> table) {
    CoxeterSystem const&        sys = table->system();
    std::vector<RelationSchema> out;
    auto const                  n = static_cast<Gen>(sys.rank());
    for (Gen s = 0; s < n; ++s) {
      for (Gen t = 0; t < n; ++t) {
        Order const m = sys.m(s, t);
        if (s == t || !m.is_finite()) {
          continue;
        }
        Order const lo = star_twisted_order(sys, s, t);
        std::uint64_t const st_mask = (std::uint64_t{1} << s) | (std::uint64_t{1} << t);
        for (int p = lo.value(); p < m.value(); ++p) {
          RelationSchema r = make_schema(
              RelationKind::MixedHalfBraid, Position::InitialWithSuffixCondition,
              {alternating(s, t, static_cast<std::size_t>(p)),
               alternating(s, t, static_cast<std::size_t>(p) + 1)},
              "l(sw)=l(tw)>l(w)");
          r.condition = [table, st_mask](std::span<Letter const> suffix) {
            ElementId x = CayleyTable::identity();
            for (Letter l : suffix) {
              Gen const g = gen_of(l);
              if (table->is_right_descent(x, g)) {
                return false;
              }
              x = table->right(x, g);
              if (x == kNoElement) {
                return false;
              }
            }
            return (table->left_descents(x) & st_mask) == 0;
          };
          out.push_back(std::move(r));
        }
      }
    }
    return out;
  }

  std::vector<RelationSchema> idempotent_schemas(std::size_t rank) {
    std::vector<RelationSchema> out;
    for (std::size_t k = 0; k < rank; ++k) {
      auto const s = static_cast<Gen>(k);
      out.push_back(make_schema(RelationKind::Idempotent, Position::Anywhere,
                                {PrimedWord{s, s}, PrimedWord{s}}));
    }
    return out;
  }

  std::vector<RelationSchema> exceptional_schemas(std::shared_ptr<CayleyTable const> table,
                                                  TypeLabel                          type,
                                                  Labeling const&                    L,
                                                  Variant                            variant) {
    Gen const a = L[0], b = L[1], c = L[2], d = L[3];
    Word      x, y;
    std::vector<Word> tails;  // appended to y for the Hecke chain
    ParabolicSubset J;
    switch (type) {
      case TypeLabel::TwistedA3:
        x          = {b, c, a, b};
        y          = {b, c, b, a};
        tails      = {Word{b}};
        J          = ParabolicSubset({a, b, c});
        break;
      case TypeLabel::BC3:
        x          = {a, b, c, a, b, a};
        y          = {a, b, c, b, a, b};
        tails      = {Word{a}};
        J          = ParabolicSubset({a, b, c});
        break;
      case TypeLabel::D4:
        x          = {d, b, a, c, b, a, c, d};
        y          = {d, b, a, c, b, a, d, c};
        tails      = {Word{d}};
        J          = ParabolicSubset({a, b, c, d});
        break;
      case TypeLabel::H3:
        x          = {a, c, b, a, c, b, a, b, c};
        y          = {a, c, b, a, c, b, a, c, b};
        tails      = {Word{c}, Word{a}, Word{a, b}};
        J          = ParabolicSubset({a, b, c});
        break;
      default:
        throw UnknownType("no exceptional relations for type " + to_string(type));
    }
    std::string const label = to_string(type) + subset_label(J, table->rank());
    std::vector<RelationSchema> out;
    switch (variant) {
      case Variant::Plain:
        out.push_back(make_schema(RelationKind::ExceptionalList, Position::InitialOnly, {x, y},
                                  label));
        break;
      case Variant::Primed:
        out.push_back(make_schema(RelationKind::ExceptionalList, Position::InitialOnly, {x, y},
                                  label));
        out.push_back(make_schema(RelationKind::ExceptionalList, Position::InitialOnly,
                                  {x, prime_last(x)}, label));
        out.push_back(make_schema(RelationKind::ExceptionalList, Position::InitialOnly,
                                  {y, prime_last(y)}, label));
        break;
      case Variant::Hecke: {
        std::vector<Word> chain{x, y};
        for (Word const& tail : tails) {
          Word w = y;
          w.insert(w.end(), tail.begin(), tail.end());
          chain.push_back(std::move(w));
        }
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
          RelationSchema r = make_schema(RelationKind::ExceptionalList,
                                         Position::InitialWithSuffixCondition,
                                         {chain[i], chain[i + 1]}, label);
          r.condition      = min_coset_condition(table, J);
          out.push_back(std::move(r));
        }
        break;
      }
    }
    return out;
  }

  std::vector<RelationSchema> all_exceptional_schemas(std::shared_ptr<CayleyTable const> table,
                                                      Variant                            variant) {
    std::vector<RelationSchema> out;
    CoxeterSystem const&        sys = table->system();
    for (ParabolicSubset J : star_invariant_subsets(sys, 4)) {
      if (J.size() < 3) {
        continue;
      }
      TwistedType const t = classify_twisted_type(sys, J);
      if (!t.is_exceptional()) {
        continue;
      }
      for (Labeling const& L : t.labelings) {
        auto part = exceptional_schemas(table, t.label, L, variant);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
      }
    }
    return dedup_schemas(std::move(out));
  }

  std::vector<RelationSchema> initial_relation_schemas(InvolutionEngine const& engine,
                                                       ParabolicSubset         J,
                                                       Variant                 variant) {
    CoxeterSystem const& sys = engine.table().system();
    if (!sys.is_star_invariant(J)) {
      throw NotStarInvariant("initial relations need J = J*");
    }
    TwistedType const t  = classify_twisted_type(sys, J);
    ElementId const   w0 = engine.longest(J);
    std::vector<PrimedWord> members;
    switch (variant) {
      case Variant::Plain: {
        auto const words = engine.involution_words(w0);
        members.assign(words->begin(), words->end());
        break;
      }
      case Variant::Primed:
        members = engine.primed_words(w0);
        break;
      case Variant::Hecke: {
        auto const words = engine.reduced_hecke_words(w0);
        members.assign(words.begin(), words.end());
        break;
      }
    }
    std::vector<RelationSchema> out;
    if (members.size() < 2) {
      return out;
    }
    std::string const label = type_name(t) + subset_label(J, sys.rank());
    if (variant == Variant::Hecke) {
      RelationSchema r = make_schema(RelationKind::InitialHecke,
                                     Position::InitialWithSuffixCondition, std::move(members),
                                     label);
      r.condition      = min_coset_condition(engine.table_ptr(), J);
      out.push_back(std::move(r));
    } else {
      out.push_back(make_schema(RelationKind::Initial, Position::InitialOnly,
                                std::move(members), label));
    }
    return out;
  }

  namespace {

    bool theorem_type(TwistedType const& t, bool with_a1) {
      switch (t.label) {
        case TypeLabel::A1: return with_a1;
        case TypeLabel::I2:
        case TypeLabel::TwistedI2: return t.dihedral_order.is_finite();
        case TypeLabel::TwistedA3:
        case TypeLabel::BC3:
        case TypeLabel::D4:
        case TypeLabel::H3: return true;
        case TypeLabel::Other: return false;
      }
      return false;
    }

    std::vector<RelationSchema> initial_family(InvolutionEngine const& engine,
                                               Variant                 variant,
                                               bool                    with_a1) {
      std::vector<RelationSchema> out;
      CoxeterSystem const&        sys = engine.table().system();
      for (ParabolicSubset J : star_invariant_subsets(sys, 4)) {
        if (!theorem_type(classify_twisted_type(sys, J), with_a1)) {
          continue;
        }
        auto part = initial_relation_schemas(engine, J, variant);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
      }
      return out;
    }

    void append(std::vector<RelationSchema>& out, std::vector<RelationSchema> more) {
      out.insert(out.end(), std::make_move_iterator(more.begin()),
                 std::make_move_iterator(more.end()));
    }

  }  // namespace

  std::vector<RelationSchema> schema_set(InvolutionEngine const& engine, SchemaSet set) {
    CoxeterSystem const&        sys   = engine.table().system();
    auto const&                 table = engine.table_ptr();
    std::vector<RelationSchema> out;
    switch (set) {
      case SchemaSet::HH:
        append(out, braid_schemas(sys));
        append(out, initial_family(engine, Variant::Plain, false));
        break;
      case SchemaSet::HHMin:
        append(out, braid_schemas(sys));
        append(out, half_braid_schemas(sys));
        append(out, all_exceptional_schemas(table, Variant::Plain));
        break;
      case SchemaSet::HHPrimed:
        append(out, primed_braid_schemas(sys));
        append(out, initial_family(engine, Variant::Primed, true));
        break;
      case SchemaSet::PrimedMin:
        append(out, primed_braid_schemas(sys));
        append(out, primed_half_braid_schemas(sys));
        append(out, all_exceptional_schemas(table, Variant::Primed));
        break;
      case SchemaSet::Hecke:
        append(out, braid_schemas(sys));
        append(out, initial_family(engine, Variant::Hecke, false));
        break;
      case SchemaSet::HeckeMin:
        append(out, braid_schemas(sys));
        append(out, mixed_half_braid_schemas(table));
        append(out, all_exceptional_schemas(table, Variant::Hecke));
        break;
      case SchemaSet::HeckeProp:
        append(out, braid_schemas(sys));
        append(out, initial_family(engine, Variant::Plain, false));
        append(out, idempotent_schemas(sys.rank()));
        break;
      case SchemaSet::SimpleInv:
        append(out, braid_schemas(sys));
        append(out, half_braid_schemas(sys));
        break;
      case SchemaSet::SimplePrimed:
        append(out, primed_braid_schemas(sys));
        append(out, primed_half_braid_schemas(sys));
        break;
      case SchemaSet::SimpleHecke:
        append(out, braid_schemas(sys));
        append(out, mixed_half_braid_schemas(table));
        break;
    }
    return out;
  }

}  // namespace coxword
