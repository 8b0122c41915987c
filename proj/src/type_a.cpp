#include "coxword/type_a.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "coxword/error.hpp"

namespace coxword {

  TypeA::TypeA(std::size_t n_, bool affine_) : n(n_), affine(affine_) {
    if (n < 2 || (affine && n < 3)) {
      throw InvalidWindow("type A needs n >= 2 (n >= 3 when affine)");
    }
  }

  bool TypeA::adjacent(std::size_t a, std::size_t b) const noexcept {
    std::size_t const d = (a + n - b % n) % n;
    return d == 1 || d == n - 1;
  }

  bool TypeA::commuting(std::size_t a, std::size_t b) const noexcept {
    return (a + n - b % n) % n != 0 && !adjacent(a, b);
  }

  namespace {

    RelationSchema type_a_schema(Position pos, PrimedWord x, PrimedWord y) {
      RelationSchema s;
      s.kind     = RelationKind::TypeA;
      s.position = pos;
      s.members  = {std::move(x), std::move(y)};
      return s;
    }

    Gen gen(std::size_t letter) {
      return static_cast<Gen>(letter - 1);
    }

  }  // namespace

  std::vector<RelationSchema> sim_a_schemas(TypeA const& t, bool primed_rules) {
    std::vector<RelationSchema> out;
    std::size_t const           L = t.letters();
    for (std::size_t a = 1; a <= L; ++a) {
      Gen const ga = gen(a);
      if (primed_rules) {
        out.push_back(type_a_schema(Position::InitialOnly, {ga}, {primed(ga)}));
      }
      for (std::size_t b = 1; b <= L; ++b) {
        Gen const gb = gen(b);
        if (a < b) {
          out.push_back(type_a_schema(Position::InitialOnly, {ga, gb}, {gb, ga}));
        }
        if (t.commuting(a, b)) {
          if (a < b) {
            out.push_back(type_a_schema(Position::Anywhere, {ga, gb}, {gb, ga}));
          }
          if (primed_rules) {
            out.push_back(type_a_schema(Position::Anywhere, {ga, primed(gb)}, {primed(gb), ga}));
            if (a < b) {
              out.push_back(type_a_schema(Position::Anywhere, {primed(ga), primed(gb)},
                                          {primed(gb), primed(ga)}));
            }
          }
        }
        if (t.adjacent(a, b)) {
          if (a < b) {
            out.push_back(type_a_schema(Position::Anywhere, {ga, gb, ga}, {gb, ga, gb}));
          }
          if (primed_rules) {
            out.push_back(type_a_schema(Position::Anywhere, {primed(ga), gb, ga},
                                        {gb, ga, primed(gb)}));
          }
        }
      }
    }
    return out;
  }

  std::optional<Window> reduced_window(std::span<Letter const> word, std::size_t n) {
    Window w = Window::identity(n);
    for (Letter l : word) {
      std::size_t const i = gen_of(l) + 1u;
      if (w.has_descent(i)) {
        return std::nullopt;
      }
      w = w.times_gen(i);
    }
    return w;
  }

  std::vector<RelationSchema> approx_a_schemas(TypeA const& t) {
    std::vector<RelationSchema> out;
    std::size_t const           L = t.letters();
    std::size_t const           n = t.n;
    for (std::size_t a = 1; a <= L; ++a) {
      for (std::size_t b = 1; b <= L; ++b) {
        Gen const ga = gen(a), gb = gen(b);
        if (t.commuting(a, b) && a < b) {
          out.push_back(type_a_schema(Position::Anywhere, {ga, gb}, {gb, ga}));
        }
        if (!t.adjacent(a, b)) {
          continue;
        }
        if (a < b) {
          out.push_back(type_a_schema(Position::Anywhere, {ga, gb, ga}, {gb, ga, gb}));
        }
        auto const condition = [n, a, b](std::span<Letter const> suffix) {
          auto const w = reduced_window(suffix, n);
          if (!w) {
            return false;
          }
          Window const v  = w->inverse();
          auto const   ai = static_cast<std::int64_t>(a);
          auto const   bi = static_cast<std::int64_t>(b);
          return v(ai) < v(ai + 1) && v(bi) < v(bi + 1);
        };
        if (a < b) {
          RelationSchema swap = type_a_schema(Position::InitialWithSuffixCondition, {ga, gb},
                                              {gb, ga});
          swap.label          = "aff3";
          swap.condition      = condition;
          out.push_back(std::move(swap));
        }
        RelationSchema s = type_a_schema(Position::InitialWithSuffixCondition, {ga, gb},
                                         {ga, gb, ga});
        s.label          = "aff2";
        s.condition      = condition;
        out.push_back(std::move(s));
      }
    }
    return out;
  }

  std::vector<PrimedWord> sim_a_neighbors(std::span<Letter const> word, TypeA const& t) {
    return RewriteSystem(sim_a_schemas(t)).neighbors(word);
  }

  std::vector<PrimedWord> approx_a_neighbors(std::span<Letter const> word, TypeA const& t) {
    return RewriteSystem(approx_a_schemas(t)).neighbors(word);
  }

  Window alpha_min(Window const& z) {
    if (z.inverse() != z) {
      throw NotInvolution(z.to_string() + " is not an involution");
    }
    auto const                n = static_cast<std::int64_t>(z.size());
    std::vector<std::int64_t> seq;
    std::set<std::int64_t>    seen;
    auto push = [&](std::int64_t v) {
      if (seen.insert(v).second) {
        seq.push_back(v);
      }
    };
    for (std::int64_t a = 1; a <= n; ++a) {
      if (a <= z(a)) {
        push(z(a));
        push(a);
      }
    }
    return Window::from_shifted(seq).inverse();
  }

  std::vector<Window> atom_pattern_neighbors(Window const& w, bool affine) {
    Window const       u = w.inverse();
    std::size_t const  n = u.size();
    std::vector<Window> out;
    if (n < 3) {
      return out;
    }
    std::size_t const last = affine ? n : n - 2;
    for (std::size_t i = 1; i <= last; ++i) {
      std::int64_t const p = u(static_cast<std::int64_t>(i));
      std::int64_t const q = u(static_cast<std::int64_t>(i + 1));
      std::int64_t const r = u(static_cast<std::int64_t>(i + 2));
      std::vector<std::array<std::int64_t, 3>> targets;
      if (p > q && q > r) {  // c b a
        targets = {{p, r, q}, {q, p, r}};
      } else if (p > r && r > q) {  // c a b
        targets = {{p, r, q}, {r, p, q}};
      } else if (q > p && p > r) {  // b c a
        targets = {{q, p, r}, {q, r, p}};
      }
      for (auto const& tgt : targets) {
        std::vector<std::int64_t> e = u.entries();
        for (std::size_t k = 0; k < 3; ++k) {
          std::size_t pos = i + k;
          std::int64_t v  = tgt[k];
          if (pos > n) {
            pos -= n;
            v -= static_cast<std::int64_t>(n);
          }
          e[pos - 1] = v;
        }
        out.push_back(Window(std::move(e)).inverse());
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Window> atom_pattern_class(Window const& start, bool affine) {
    std::set<Window>    seen{start};
    std::vector<Window> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Window& v : atom_pattern_neighbors(queue[head], affine)) {
        if (seen.insert(v).second) {
          queue.push_back(std::move(v));
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<SubwordViolation> forbidden_subword_scan(std::span<Letter const> word,
                                                       TypeA const&            t) {
    std::vector<SubwordViolation> out;
    std::size_t const             n    = t.n;
    auto                          succ = [n](Letter l) {
      return static_cast<Gen>((gen_of(l) + 1) % n);
    };
    auto add = [&](std::string pattern, std::size_t pos) {
      out.push_back({std::move(pattern), pos});
    };
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      Letter const x = word[i], y = word[i + 1];
      if (is_primed(x) && is_primed(y)) {
        if (gen_of(y) == succ(x)) {
          add("a'(a+1)'", i);
        }
        if (gen_of(x) == succ(y)) {
          add("(a+1)'a'", i);
        }
      }
      if (i == 0) {
        if (!is_primed(x) && is_primed(y) && gen_of(y) == succ(x)) {
          add("^a(a+1)'", i);
        }
        if (!is_primed(x) && is_primed(y) && gen_of(x) == succ(y)) {
          add("^(a+1)a'", i);
        }
      }
      if (i + 2 >= word.size() || gen_of(word[i + 2]) != gen_of(x)) {
        continue;
      }
      Letter const z  = word[i + 2];
      bool const   px = is_primed(x), py = is_primed(y), pz = is_primed(z);
      if (!px && py && !pz) {
        add("ab'a", i);
      } else if (px && py && !pz) {
        add("a'b'a", i);
      } else if (px && !py && pz) {
        add("a'ba'", i);
      } else if (!px && py && pz) {
        add("ab'a'", i);
      } else if (px && py && pz) {
        add("a'b'a'", i);
      }
      if (!py && !(px && pz)) {
        char const* name = !px && !pz ? "aba" : (px ? "a'ba" : "aba'");
        if (i == 0) {
          add(std::string("^") + name, i);
        } else if (!t.adjacent(gen_of(x) + 1u, gen_of(y) + 1u)) {
          add(std::string(name) + " with b-a not +-1", i);
        }
      }
    }
    return out;
  }

  bool fixed_point_lemma_holds(std::span<Letter const> word, TypeA const& t,
                               std::vector<bool>* commutations) {
    Window y = Window::identity(t.n);
    if (commutations) {
      commutations->assign(word.size(), false);
    }
    for (std::size_t i = 0; i < word.size(); ++i) {
      std::size_t const  a  = gen_of(word[i]) + 1u;
      auto const         ai = static_cast<std::int64_t>(a);
      if (y.has_descent(a)) {
        return false;
      }
      Window const ys   = y.times_gen(a);
      bool const   comm = ys == y.gen_times(a);
      bool const   fixed = y(ai) == ai && y(ai + 1) == ai + 1;
      if (comm != fixed) {
        return false;
      }
      y = comm ? ys : ys.gen_times(a);
      if (comm && !(y(ai) == ai + 1 && y(ai + 1) == ai)) {
        return false;
      }
      if (commutations) {
        (*commutations)[i] = comm;
      }
    }
    return true;
  }

}  // namespace coxword
