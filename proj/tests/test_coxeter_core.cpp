#include <doctest.h>

#include <map>
#include <memory>

#include "coxword/cayley_table.hpp"
#include "coxword/error.hpp"
#include "coxword/generic_group.hpp"
#include "coxword/permutation_group.hpp"
#include "oracles.hpp"

using namespace coxword;

namespace {

  std::vector<std::vector<int>> file_matrix(CoxeterSystem const& sys) {
    std::vector<std::vector<int>> m(sys.rank(), std::vector<int>(sys.rank()));
    for (std::size_t i = 0; i < sys.rank(); ++i) {
      for (std::size_t j = 0; j < sys.rank(); ++j) {
        m[i][j] = sys.m(static_cast<Gen>(i), static_cast<Gen>(j)).to_file();
      }
    }
    return m;
  }

  std::vector<int> star_ints(CoxeterSystem const& sys) {
    return {sys.star_map().begin(), sys.star_map().end()};
  }

  CoxeterSystem dihedral(int m, bool swap = false) {
    return make_system({{1, m}, {m, 1}}, swap ? std::vector<Gen>{1, 0} : std::vector<Gen>{0, 1});
  }

  CoxeterSystem h3() {
    return make_system({{1, 5, 2}, {5, 1, 3}, {2, 3, 1}}, {0, 1, 2}, "H3");
  }

  CoxeterSystem bc3() {
    return make_system({{1, 4, 2}, {4, 1, 3}, {2, 3, 1}}, {0, 1, 2}, "BC3");
  }

  CoxeterSystem d4() {
    return make_system({{1, 3, 2, 2}, {3, 1, 3, 3}, {2, 3, 1, 2}, {2, 3, 2, 1}}, {0, 1, 2, 3},
                       "D4");
  }

  std::shared_ptr<CayleyTable const> table_of(std::shared_ptr<Group const> g, std::size_t len) {
    return std::make_shared<CayleyTable const>(std::move(g), len);
  }

}  // namespace

TEST_CASE("make_system validates matrix and star") {
  auto const a1 = make_system({{1}}, {0});
  CHECK(a1.rank() == 1);
  CHECK(a1.star_is_identity());

  auto const a3r = make_system({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}, {2, 1, 0});
  CHECK(a3r.star(0) == 2);
  CHECK(a3r.star(1) == 1);

  auto const a2s = make_system({{1, 3}, {3, 1}}, {1, 0});
  CHECK(a2s.m(0, 1) == Order(3));

  CHECK_THROWS_AS(make_system({{1, 3}, {4, 1}}, {0, 1}), InvalidMatrix);
  CHECK_THROWS_AS(make_system({{2, 3}, {3, 1}}, {0, 1}), InvalidMatrix);
  CHECK_THROWS_AS(make_system({{1, 1}, {1, 1}}, {0, 1}), InvalidMatrix);
  CHECK_THROWS_AS(make_system({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}, {1, 2, 0}), InvalidStar);
  CHECK_THROWS_AS(make_system({{1, 4, 2}, {4, 1, 3}, {2, 3, 1}}, {2, 1, 0}), InvalidStar);

  auto const inf = make_system({{1, 0}, {0, 1}}, {0, 1});
  CHECK_FALSE(inf.m(0, 1).is_finite());
  CHECK(inf.m(0, 1).to_file() == 0);
}

TEST_CASE("multiply_gen") {
  PermutationGroup const S4(4, false);
  CHECK(S4.length(S4.multiply_gen(S4.identity(), 0)) == 1);
  auto const w = S4.element(Window({2, 1, 3, 4}));
  CHECK(S4.multiply_gen(w, 0) == S4.identity());

  GenericGroup const I5(dihedral(5));
  auto const sts  = I5.from_word(Word{0, 1, 0});
  auto const stst = I5.multiply_gen(sts, 1);
  CHECK(I5.length(stst) == 4);
  CHECK(I5.reduced_word(stst) == Word{0, 1, 0, 1});

  oracle::ReflectionGroup const O(file_matrix(dihedral(5)), {0, 1}, 10);
  CHECK(O.size() == 10);
  CHECK(O.length(O.from_word({0, 1, 0, 1})) == 4);
  CHECK(O.from_word({0, 1, 0, 1}) != O.from_word({1, 0, 1, 0}));
}

TEST_CASE("length changes by one under multiply_gen") {
  for (auto sys : {dihedral(5), bc3(), h3()}) {
    auto const  G = std::make_shared<GenericGroup const>(sys);
    auto const  T = table_of(G, 100);
    for (ElementId w = 0; w < T->size(); ++w) {
      for (Gen s = 0; s < T->rank(); ++s) {
        auto const ws = T->right(w, s);
        CHECK((T->length(ws) + 1 == T->length(w) || T->length(w) + 1 == T->length(ws)));
      }
    }
  }
}

TEST_CASE("descents") {
  PermutationGroup const S4(4, false);
  for (Gen s = 0; s < 3; ++s) {
    CHECK_FALSE(S4.is_right_descent(S4.identity(), s));
  }
  auto const w = S4.element(Window({2, 1, 3, 4}));
  CHECK(S4.is_right_descent(w, 0));
  CHECK_FALSE(S4.is_right_descent(w, 1));

  auto const G = std::make_shared<GenericGroup const>(h3());
  auto const T = table_of(G, 100);
  CHECK(T->complete());
  CHECK(T->size() == 120);
  ElementId const w0 = static_cast<ElementId>(T->size() - 1);
  CHECK(T->length(w0) == 15);
  for (Gen s = 0; s < 3; ++s) {
    CHECK(T->is_right_descent(w0, s));
  }

  oracle::ReflectionGroup const O(file_matrix(h3()), {0, 1, 2}, 40);
  CHECK(O.size() == 120);
  std::map<std::size_t, std::size_t> lib, ref;
  for (ElementId e = 0; e < T->size(); ++e) {
    ++lib[T->length(e)];
  }
  for (std::size_t e = 0; e < O.size(); ++e) {
    ++ref[O.length(static_cast<int>(e))];
  }
  CHECK(lib == ref);
  for (Gen s = 0; s < 3; ++s) {
    int const o = O.from_word(T->reduced_word(w0));
    CHECK(O.length(O.right(o, s)) == 14);
  }
}

TEST_CASE("demazure product") {
  PermutationGroup const S3(3, false);
  auto const             s1 = S3.from_word(Word{0});
  CHECK(demazure(S3, s1, s1) == s1);
  auto const w = S3.from_word(Word{0, 1});
  CHECK(demazure(S3, S3.identity(), w) == w);
  auto const d = demazure(S3, S3.from_word(Word{0, 1}), S3.from_word(Word{1, 0}));
  CHECK(d == S3.from_word(Word{0, 1, 0}));
  CHECK(S3.length(d) == 3);
}

TEST_CASE("demazure is associative and compatible with star and inverse") {
  std::vector<std::shared_ptr<Group const>> groups = {
      std::make_shared<PermutationGroup const>(3, false),
      std::make_shared<PermutationGroup const>(4, false),
      std::make_shared<PermutationGroup const>(4, false, true),
      std::make_shared<GenericGroup const>(dihedral(5)),
  };
  for (auto const& g : groups) {
    auto const T = table_of(g, 100);
    oracle::ReflectionGroup const O(file_matrix(g->system()), star_ints(g->system()), 100);
    REQUIRE(O.size() == T->size());
    std::vector<int> to_oracle(T->size());
    for (ElementId e = 0; e < T->size(); ++e) {
      to_oracle[e] = O.from_word(T->reduced_word(e));
    }
    for (ElementId u = 0; u < T->size(); ++u) {
      for (ElementId v = 0; v < T->size(); ++v) {
        ElementId const uv = T->demazure(u, v);
        REQUIRE(to_oracle[uv] == O.demazure(to_oracle[u], to_oracle[v]));
        CHECK(T->star(uv) == T->demazure(T->star(u), T->star(v)));
        CHECK(T->inverse(uv) == T->demazure(T->inverse(v), T->inverse(u)));
        for (ElementId w = 0; w < T->size(); w += 3) {
          REQUIRE(T->demazure(uv, w) == T->demazure(u, T->demazure(v, w)));
        }
      }
    }
  }
}

TEST_CASE("star_elem") {
  PermutationGroup const S4(4, false);
  auto const             w = S4.from_word(Word{0, 1, 2, 0});
  CHECK(S4.star_elem(w) == w);

  PermutationGroup const S4r(4, false, true);
  CHECK(S4r.star_elem(S4r.from_word(Word{0})) == S4r.from_word(Word{2}));
  for (auto const& e : enumerate_group(S4r, 6)) {
    CHECK(S4r.star_elem(S4r.star_elem(e)) == e);
  }
}

TEST_CASE("longest_element") {
  PermutationGroup const S3(3, false);
  CHECK(longest_element(S3, ParabolicSubset{0}) == S3.from_word(Word{0}));
  auto const w0 = longest_element(S3, ParabolicSubset{0, 1});
  CHECK(w0 == S3.from_word(Word{0, 1, 0}));
  CHECK(S3.length(w0) == 3);

  GenericGroup const H3(h3());
  CHECK(H3.length(longest_element(H3, ParabolicSubset::all(3))) == 15);

  GenericGroup const inf(make_system({{1, 0}, {0, 1}}, {0, 1}));
  CHECK_THROWS_AS(longest_element(inf, ParabolicSubset{0, 1}, 100), InfiniteParabolic);
}

TEST_CASE("m_twisted cases") {
  CHECK(m_twisted(Order(3), 0, 1, 0, 1) == Order(2));
  CHECK(m_twisted(Order(3), 0, 1, 1, 0) == Order(2));
  CHECK(m_twisted(Order(4), 0, 1, 0, 1) == Order(3));
  CHECK(m_twisted(Order(4), 0, 1, 1, 0) == Order(2));
  CHECK(m_twisted(Order(5), 0, 1, std::nullopt, 1) == Order(5));
  CHECK(m_twisted(Order::infinity(), 0, 1, 0, 1) == Order::infinity());
}

TEST_CASE("m_twisted agrees with involution word lengths in the dihedral group") {
  for (int m = 2; m <= 7; ++m) {
    for (int ts = -1; ts <= 1; ++ts) {
      for (int tt = -1; tt <= 1; ++tt) {
        auto const opt = [](int v) -> std::optional<Gen> {
          return v < 0 ? std::nullopt : std::optional<Gen>(static_cast<Gen>(v));
        };
        Order const got = m_twisted(Order(m), 0, 1, opt(ts), opt(tt));
        CAPTURE(m);
        CAPTURE(ts);
        CAPTURE(tt);
        CHECK(static_cast<std::size_t>(got.value()) == oracle::dihedral_m_by_search(m, ts, tt));
        CHECK(got <= Order(m));
      }
    }
  }
}

TEST_CASE("is_min_coset_rep") {
  PermutationGroup const S4(4, false);
  CHECK(is_min_coset_rep(S4, S4.identity(), ParabolicSubset{0, 2}));
  CHECK_FALSE(is_min_coset_rep(S4, S4.from_word(Word{1}), ParabolicSubset{1}));
  std::size_t count = 0;
  for (auto const& e : enumerate_group(S4, 6)) {
    count += is_min_coset_rep(S4, e, ParabolicSubset{0, 1, 2}) ? 1 : 0;
  }
  CHECK(count == 1);
}

TEST_CASE("enumerate_group") {
  GenericGroup const A1(make_system({{1}}, {0}));
  CHECK(enumerate_group(A1, 5).size() == 2);
  PermutationGroup const S4(4, false);
  auto const             all = enumerate_group(S4, 6);
  CHECK(all.size() == 24);
  CHECK(all.front() == S4.identity());
  GenericGroup const H3(h3());
  CHECK(enumerate_group(H3, 15).size() == 120);
  CHECK_THROWS_AS(enumerate_group(H3, 15, 50), BoundExceeded);
}

TEST_CASE("group orders match the reflection representation") {
  for (auto sys : {bc3(), d4(), h3(), dihedral(7)}) {
    auto const G = std::make_shared<GenericGroup const>(sys);
    auto const T = table_of(G, 100);
    oracle::ReflectionGroup const O(file_matrix(sys), star_ints(sys), 100);
    CHECK(T->size() == O.size());
    for (ElementId e = 0; e < T->size(); ++e) {
      int const o = O.from_word(T->reduced_word(e));
      REQUIRE(o >= 0);
      CHECK(O.length(o) == T->length(e));
    }
  }
}

TEST_CASE("generic and permutation backends agree on S3 and S4") {
  for (std::size_t n : {3u, 4u}) {
    PermutationGroup const P(n, false);
    GenericGroup const     G(P.system());
    auto const             perm = enumerate_group(P, 10);
    auto const             gen  = enumerate_group(G, 10);
    REQUIRE(perm.size() == gen.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      Word const w = P.reduced_word(perm[i]);
      auto const g = G.from_word(w);
      CHECK(G.length(g) == P.length(perm[i]));
      for (Gen s = 0; s < n - 1; ++s) {
        CHECK(G.is_right_descent(g, s) == P.is_right_descent(perm[i], s));
      }
      for (std::size_t j = 0; j < perm.size(); j += 2) {
        Word const v = P.reduced_word(perm[j]);
        CHECK(P.reduced_word(demazure(P, perm[i], perm[j]))
              == G.reduced_word(demazure(G, g, G.from_word(v))));
      }
    }
  }
}

TEST_CASE("classify_twisted_type") {
  PermutationGroup const S4(4, false);
  CHECK(classify_twisted_type(S4.system(), ParabolicSubset{0}).label == TypeLabel::A1);

  auto const tw = classify_twisted_type(make_system({{1, 3}, {3, 1}}, {1, 0}),
                                        ParabolicSubset{0, 1});
  CHECK(tw.label == TypeLabel::TwistedI2);
  CHECK(tw.dihedral_order == Order(3));

  PermutationGroup const S4r(4, false, true);
  auto const             a3 = classify_twisted_type(S4r.system(), ParabolicSubset::all(3));
  CHECK(a3.label == TypeLabel::TwistedA3);
  REQUIRE(!a3.labelings.empty());
  for (auto const& lab : a3.labelings) {
    CHECK(S4r.system().star(lab[0]) == lab[2]);
  }
  CHECK_THROWS_AS(classify_twisted_type(S4r.system(), ParabolicSubset{0}), NotStarInvariant);

  CHECK(classify_twisted_type(bc3(), ParabolicSubset::all(3)).label == TypeLabel::BC3);
  CHECK(classify_twisted_type(d4(), ParabolicSubset::all(4)).label == TypeLabel::D4);
  CHECK(classify_twisted_type(h3(), ParabolicSubset::all(3)).label == TypeLabel::H3);
  CHECK(classify_twisted_type(S4.system(), ParabolicSubset::all(3)).label == TypeLabel::Other);
}

TEST_CASE("windows") {
  CHECK(Window::identity(4).length() == 0);
  Window const w({2, 1, 3, 4});
  CHECK(w.length() == 1);
  CHECK(w.has_descent(1));
  CHECK_FALSE(w.has_descent(2));
  CHECK(Window({1, 4, 2, 3, 5}).inverse() == Window({1, 3, 4, 2, 5}));
  CHECK(Window::parse("[2,1,3,4]") == w);
  CHECK(Window::from_cycles("(1,4)(2,3)", 4) == Window({4, 3, 2, 1}));
  CHECK_THROWS_AS(Window({1, 1, 3}), InvalidWindow);
  CHECK_THROWS_AS(Window({1, 2, 4}), InvalidWindow);

  Window const a({0, 5, 1});
  CHECK(a.length() == oracle::affine_length_by_inversions(a.entries()));
  CHECK(a.compose(a.inverse()) == Window::identity(3));
}
