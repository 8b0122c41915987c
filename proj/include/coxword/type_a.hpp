#ifndef COXWORD_TYPE_A_HPP_
#define COXWORD_TYPE_A_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "coxword/relations.hpp"
#include "coxword/window.hpp"
#include "coxword/word.hpp"

namespace coxword {

  // Type-A words use generator k for the letter k + 1.  S~_n has letters
  // 1..n; the finite S_n has letters 1..n-1.
  struct TypeA {
    std::size_t n      = 0;
    bool        affine = false;

    TypeA(std::size_t n, bool affine);

    std::size_t letters() const noexcept {
      return affine ? n : n - 1;
    }
    // a - b in {-1, 1} + nZ, for 1-based letters.
    bool adjacent(std::size_t a, std::size_t b) const noexcept;
    // a - b not in {-1, 0, 1} + nZ.
    bool commuting(std::size_t a, std::size_t b) const noexcept;
  };

  // The relations generating ~_A; with primed = false, its restriction to
  // unprimed words.
  std::vector<RelationSchema> sim_a_schemas(TypeA const& t, bool primed = true);

  // The relations generating ~~_A.
  std::vector<RelationSchema> approx_a_schemas(TypeA const& t);

  std::vector<PrimedWord> sim_a_neighbors(std::span<Letter const> word, TypeA const& t);
  std::vector<PrimedWord> approx_a_neighbors(std::span<Letter const> word, TypeA const& t);

  // The window of the product of the letters, or nullopt if not reduced.
  std::optional<Window> reduced_window(std::span<Letter const> word, std::size_t n);

  // Throws NotInvolution unless z = z^-1.
  Window alpha_min(Window const& z);

  // Windows related to w by one c b a <-> c a b <-> b c a move on
  // consecutive entries of w^-1.
  std::vector<Window> atom_pattern_neighbors(Window const& w, bool affine);

  // The class of `start` under atom pattern moves, sorted.
  std::vector<Window> atom_pattern_class(Window const& start, bool affine);

  struct SubwordViolation {
    std::string pattern;
    std::size_t pos = 0;  // 0-based start
  };

  std::vector<SubwordViolation> forbidden_subword_scan(std::span<Letter const> word,
                                                       TypeA const&            t);

  // Whether, along the involution word, each index is a commutation exactly
  // when a and a + 1 are fixed by the prefix involution, and a commutation
  // then makes (a, a + 1) a cycle.  False if the word is not an involution
  // word.
  bool fixed_point_lemma_holds(std::span<Letter const> word, TypeA const& t,
                               std::vector<bool>* commutations = nullptr);

}  // namespace coxword

#endif  // COXWORD_TYPE_A_HPP_
