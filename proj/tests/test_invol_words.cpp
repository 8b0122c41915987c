#include <doctest.h>

#include <algorithm>
#include <set>

#include "coxword/error.hpp"
#include "coxword/registry.hpp"
#include "oracles.hpp"

using namespace coxword;

namespace {

  oracle::ReflectionGroup oracle_for(SystemHandle const& h) {
    CoxeterSystem const&          sys = h.system();
    std::vector<std::vector<int>> m(sys.rank(), std::vector<int>(sys.rank()));
    for (std::size_t i = 0; i < sys.rank(); ++i) {
      for (std::size_t j = 0; j < sys.rank(); ++j) {
        m[i][j] = sys.m(static_cast<Gen>(i), static_cast<Gen>(j)).to_file();
      }
    }
    std::vector<int> star(sys.star_map().begin(), sys.star_map().end());
    return {m, star, h.finite ? 200 : 2 * h.rho_bound};
  }

  std::set<oracle::Word> as_set(std::vector<Word> const& v) {
    return {v.begin(), v.end()};
  }

  std::vector<std::string> sweep() {
    std::vector<std::string> out = {"A3", "2A3", "A4", "2A4", "BC3", "D4", "H3", "affA2"};
    for (int n = 2; n <= 7; ++n) {
      out.push_back("I2(" + std::to_string(n) + ")");
      out.push_back("2I2(" + std::to_string(n) + ")");
    }
    return out;
  }

}  // namespace

TEST_CASE("underline action") {
  auto const  h = load_system("A3");
  auto const& E = *h.engine;
  auto const& T = *h.table;
  CHECK(E.underline(0, 1) == T.right(0, 1));

  auto const r = load_system("2A3");
  CHECK(r.engine->underline(0, 0) == r.table->from_word(Word{2, 0}));

  for (auto const* sys : {&h, &r}) {
    for (ElementId z : sys->involutions()) {
      for (Gen s = 0; s < 3; ++s) {
        CHECK(sys->engine->underline(sys->engine->underline(z, s), s) == z);
      }
    }
  }
}

TEST_CASE("twist agrees with the Demazure product") {
  for (auto name : {"A3", "2A3"}) {
    auto const  h = load_system(name);
    auto const& T = *h.table;
    for (ElementId z : h.involutions()) {
      for (Gen s = 0; s < 3; ++s) {
        ElementId const direct = T.demazure(T.demazure(T.from_word(Word{h.system().star(s)}), z),
                                            T.from_word(Word{s}));
        CHECK(h.engine->twist(z, s) == direct);
        if (T.is_right_descent(z, s)) {
          CHECK(h.engine->twist(z, s) == z);
        }
      }
    }
  }
  auto const h = load_system("A3");
  CHECK(h.engine->twist(0, 1) == h.table->from_word(Word{1}));
}

TEST_CASE("twisted_involutions and rho") {
  auto const h = load_system("A3");
  CHECK(h.engine->twisted_involutions(0) == std::vector<ElementId>{0});
  CHECK(h.involutions().size() == 10);
  CHECK(h.engine->rho(0) == 0);

  auto const      r = load_system("2A3");
  ElementId const z = parse_element(r, "(1,4)(2,3)");
  CHECK(r.engine->rho(z) == 4);

  ElementId const z1 = parse_element(h, "(1,4)(2,3)");
  auto const      O  = oracle_for(h);
  auto const      bf = oracle::involution_words_by_search(O, 6);
  CHECK(h.engine->rho(z1) == bf.at(O.from_word(h.table->reduced_word(z1))).begin()->size());
  CHECK(h.table->length(z1) == 6);
}

TEST_CASE("involution_words examples") {
  auto const h = load_system("A3");
  CHECK(*h.engine->involution_words(0) == std::vector<Word>{Word{}});

  auto const      r     = load_system("2A3");
  ElementId const z     = parse_element(r, "(1,4)(2,3)");
  auto const      words = r.engine->involution_words(z);
  std::vector<std::string> text;
  for (auto const& w : *words) {
    text.push_back(format_word(w, 3));
  }
  std::vector<std::string> want = {"2123", "1213", "1231", "3213", "3231", "2321", "2312", "2132"};
  std::sort(want.begin(), want.end());
  CHECK(text == want);

  auto const      i4 = load_system("I2(4)");
  ElementId const w0 = i4.engine->longest(ParabolicSubset{0, 1});
  CHECK(*i4.engine->involution_words(w0) == std::vector<Word>{Word{0, 1, 0}, Word{1, 0, 1}});
}

TEST_CASE("word sets agree with brute-force search over the sweep") {
  for (auto const& name : sweep()) {
    CAPTURE(name);
    auto const  h   = load_system(name);
    auto const& E   = *h.engine;
    auto const& T   = *h.table;
    auto const  O   = oracle_for(h);
    auto const  inv = h.involutions();
    std::size_t max_rho = 0;
    for (ElementId z : inv) {
      max_rho = std::max(max_rho, E.rho(z));
    }
    auto const bf = oracle::involution_words_by_search(O, max_rho);
    std::set<int> lib_z;
    for (ElementId z : inv) {
      int const oz = O.from_word(T.reduced_word(z));
      REQUIRE(oz >= 0);
      lib_z.insert(oz);
      REQUIRE(bf.contains(oz));
      CHECK(as_set(*E.involution_words(z)) == bf.at(oz));
      CHECK(E.rho(z) == bf.at(oz).begin()->size());
      CHECK(O.is_twisted_involution(oz));
    }
    std::set<int> bf_z;
    for (auto const& [oz, words] : bf) {
      bf_z.insert(oz);
    }
    CHECK(lib_z == bf_z);

    for (ElementId z : inv) {
      int const      oz = O.from_word(T.reduced_word(z));
      std::set<oracle::Word> lib_atoms;
      for (ElementId w : E.hecke_atoms(z)) {
        CHECK(E.atom_fold(w) == z);
        lib_atoms.insert(O.word(O.from_word(T.reduced_word(w))));
      }
      CHECK(lib_atoms == oracle::atoms_by_search(O, oz));
    }
  }
}

TEST_CASE("commutation counts and primed words") {
  for (auto name : {"A3", "2A3", "BC3", "2I2(5)", "affA2"}) {
    CAPTURE(name);
    auto const  h = load_system(name);
    auto const& E = *h.engine;
    for (ElementId z : h.involutions()) {
      std::size_t const k = 2 * E.rho(z) - h.table->length(z);
      auto const        R = E.involution_words(z);
      for (auto const& w : *R) {
        CHECK(E.commutations(w, z).size() == k);
      }
      auto const P = E.primed_words(z);
      CHECK(P.size() == (std::size_t{1} << k) * R->size());
      CHECK(std::is_sorted(P.begin(), P.end()));
      for (auto const& p : P) {
        CHECK(std::binary_search(R->begin(), R->end(), strip_primes(p)));
      }
    }
  }
  auto const h = load_system("A3");
  CHECK(h.engine->commutations(Word{}, 0).empty());
  CHECK_THROWS_AS(h.engine->commutations(Word{0, 0}, h.table->from_word(Word{0})),
                  NotInvolutionWord);

  auto const a1 = load_system("A1");
  auto const P  = a1.engine->primed_words(a1.table->from_word(Word{0}));
  CHECK(P == std::vector<PrimedWord>{PrimedWord{0}, PrimedWord{primed(0)}});
  CHECK(a1.engine->primed_words(0) == std::vector<PrimedWord>{PrimedWord{}});

  ElementId const z = parse_element(h, "(1,4)(2,3)");
  CHECK(h.engine->primed_words(z).size() == 4 * h.engine->involution_words(z)->size());
}

TEST_CASE("prefix folds are distinct exactly for involution words") {
  for (auto name : {"A3", "2A3", "I2(5)"}) {
    auto const  h = load_system(name);
    auto const& E = *h.engine;
    std::vector<Word> level{Word{}};
    for (std::size_t len = 0; len <= 5; ++len) {
      std::vector<Word> next;
      for (auto const& w : level) {
        auto const folds = E.prefix_folds(w);
        std::set<ElementId> distinct(folds.begin(), folds.end());
        ElementId const z = folds.back();
        CHECK(E.is_involution_word(w, z) == (distinct.size() == folds.size()));
        CHECK(E.fold(w) == z);
        for (Gen s = 0; s < h.table->rank(); ++s) {
          Word x = w;
          x.push_back(s);
          next.push_back(std::move(x));
        }
      }
      level = std::move(next);
    }
  }
}

TEST_CASE("hecke atoms") {
  auto const h = load_system("A3");
  CHECK(h.engine->hecke_atoms(0) == std::vector<ElementId>{0});

  struct Case {
    char const* name;
    std::size_t atoms;
  };
  for (auto [name, count] : {Case{"2A3", 7}, Case{"BC3", 13}, Case{"D4", 29}, Case{"H3", 37}}) {
    auto const      s  = load_system(name);
    ElementId const w0 = static_cast<ElementId>(s.table->size() - 1);
    CHECK(s.engine->hecke_atoms(w0).size() == count);
  }
}

TEST_CASE("minimal-length atoms carry the involution words") {
  for (auto name : {"A3", "2A3", "A4", "BC3", "H3"}) {
    auto const  h = load_system(name);
    auto const& E = *h.engine;
    for (ElementId z : h.involutions()) {
      auto const atoms = E.hecke_atoms(z);
      std::size_t min_len = SIZE_MAX;
      for (ElementId w : atoms) {
        min_len = std::min<std::size_t>(min_len, h.table->length(w));
      }
      CHECK(min_len == E.rho(z));
      std::set<Word> words;
      for (ElementId w : atoms) {
        if (h.table->length(w) == min_len) {
          for (auto const& r : E.reduced_words(w)) {
            words.insert(r);
          }
        }
      }
      CHECK(as_set(*E.involution_words(z)) == words);
    }
  }
}

TEST_CASE("hecke words") {
  auto const h = load_system("A3");
  auto const& E = *h.engine;
  CHECK(E.hecke_words(0, 4) == std::vector<Word>{Word{}});
  ElementId const s = h.table->from_word(Word{1});
  CHECK(E.hecke_words(s, 2) == std::vector<Word>{Word{1}, Word{1, 1}});

  for (auto name : {"A3", "2A3", "BC3", "affA2"}) {
    CAPTURE(name);
    auto const  sys = load_system(name);
    auto const& F   = *sys.engine;
    auto const  O   = oracle_for(sys);
    for (ElementId z : sys.involutions()) {
      std::size_t const len = sys.table->length(z);
      if (len > 4) {
        continue;
      }
      int const oz = O.from_word(sys.table->reduced_word(z));
      CHECK(as_set(F.hecke_words(z, len + 2)) == oracle::hecke_words_by_search(O, oz, len + 2));

      std::set<oracle::Word> red;
      for (auto const& a : oracle::atoms_by_search(O, oz)) {
        auto const r = oracle::reduced_words_by_search(O, O.from_word(a));
        red.insert(r.begin(), r.end());
      }
      auto const lib_red = F.reduced_hecke_words(z);
      CHECK(as_set(lib_red) == red);

      std::set<Word> filtered;
      for (auto const& w : F.hecke_words(z, len)) {
        if (sys.table->reduced_product(w) != kNoElement) {
          filtered.insert(w);
        }
      }
      CHECK(as_set(lib_red) == filtered);
      auto const R = F.involution_words(z);
      CHECK(std::includes(lib_red.begin(), lib_red.end(), R->begin(), R->end()));
    }
  }
}

TEST_CASE("m(s,t;Ad*_z) matches the dihedral involution word length") {
  for (int n = 2; n <= 7; ++n) {
    for (bool twisted : {false, true}) {
      std::string const name = std::string(twisted ? "2" : "") + "I2(" + std::to_string(n) + ")";
      auto const        h    = load_system(name);
      auto const&       T    = *h.table;
      for (ElementId z : h.involutions()) {
        auto const theta = [&](Gen s) {
          ElementId const a = h.engine->ad_star(z, s);
          for (Gen t = 0; t < 2; ++t) {
            if (a == T.from_word(Word{t})) {
              return static_cast<int>(t);
            }
          }
          return -1;
        };
        Order const m = h.engine->m_twisted_ad(z, 0, 1);
        CHECK(static_cast<std::size_t>(m.value())
              == oracle::dihedral_m_by_search(n, theta(0), theta(1)));
      }
    }
  }
}
