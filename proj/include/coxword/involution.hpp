#ifndef COXWORD_INVOLUTION_HPP_
#define COXWORD_INVOLUTION_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "coxword/cayley_table.hpp"

namespace coxword {

  // Twisted involutions and their word sets, computed over a Cayley table.
  // A result is exact whenever every element it depends on lies in the
  // table's ball; operations that would need more throw BoundExceeded.
  class InvolutionEngine {
   public:
    explicit InvolutionEngine(std::shared_ptr<CayleyTable const> table);

    CayleyTable const& table() const noexcept {
      return *table_;
    }
    std::shared_ptr<CayleyTable const> const& table_ptr() const noexcept {
      return table_;
    }
    std::size_t rank() const noexcept {
      return table_->rank();
    }

    bool is_twisted_involution(ElementId z) const {
      return table_->inverse(z) == table_->star(z);
    }

    // z s (if zs = s* z) or s* z s.  kNoElement outside the ball.
    ElementId underline(ElementId z, Gen s) const;

    // s* o z o s.
    ElementId twist(ElementId z, Gen s) const {
      return table_->is_right_descent(z, s) ? z : underline(z, s);
    }

    // s_n* o ... o s_1* o s_1 o ... o s_n.
    ElementId fold(std::span<Letter const> word) const;

    // The folds of the prefixes of length 0, 1, ..., |word|.
    std::vector<ElementId> prefix_folds(std::span<Letter const> word) const;

    // s* y = y s.
    bool commutes(ElementId y, Gen s) const;

    // Whether the unprimed letters form an involution word for z.
    bool is_involution_word(std::span<Letter const> word, ElementId z) const;

    // All twisted involutions with rho <= rho_bound, by id.
    std::vector<ElementId> twisted_involutions(std::size_t rho_bound) const;

    // Every twisted involution whose rho is known from the ball.
    std::vector<ElementId> all_twisted_involutions() const;

    std::size_t rho(ElementId z) const;

    // R_inv(z), lexicographically sorted.
    std::shared_ptr<std::vector<Word> const> involution_words(ElementId z) const;

    // 0-based commutation positions of an involution word for z.
    std::vector<std::size_t> commutations(std::span<Letter const> word,
                                          ElementId               z) const;

    // R+_inv(z), sorted by byte value.
    std::vector<PrimedWord> primed_words(ElementId z) const;

    // B(z) = { w : (w^-1)* o w = z }, by id.
    std::vector<ElementId> hecke_atoms(ElementId z) const;

    // (w^-1)* o w.
    ElementId atom_fold(ElementId w) const {
      return atom_fold_[w];
    }

    // R(w), sorted.
    std::vector<Word> reduced_words(ElementId w) const;

    // H^red_inv(z), sorted.
    std::vector<Word> reduced_hecke_words(ElementId z) const;

    // Involution Hecke words of length <= max_len, sorted.  Throws
    // BoundExceeded when more than `cap` words qualify.
    std::vector<Word> hecke_words(ElementId z, std::size_t max_len,
                                  std::size_t cap = 1'000'000) const;

    // Ad*_z(s) = (z s z^-1)*.  Always found when it is a generator;
    // otherwise kNoElement if the product leaves the ball.
    ElementId ad_star(ElementId z, Gen s) const;

    // m(s,t;Ad*_z).
    Order m_twisted_ad(ElementId z, Gen s, Gen t) const;

    // Longest element of W_J for J inside the ball.
    ElementId longest(ParabolicSubset J) const;

   private:
    void require_rho(ElementId z) const;

    std::shared_ptr<CayleyTable const> table_;
    std::vector<int>                   rho_;        // -1 unless reached
    std::size_t                        rho_limit_;  // rho values below this are complete
    std::vector<ElementId>             atom_fold_;
    std::size_t                        cache_limit_;

    mutable std::mutex mutex_;
    mutable std::unordered_map<ElementId, std::shared_ptr<std::vector<Word> const>>
        word_cache_;
  };

  // Lexicographic ranking of the involution Hecke words of z of length at
  // most `bound`, by dynamic programming over twisted involutions.
  class HeckeWordIndex {
   public:
    HeckeWordIndex(InvolutionEngine const& engine, ElementId z, std::size_t bound);

    std::uint64_t count() const noexcept {
      return count_;
    }
    std::size_t bound() const noexcept {
      return bound_;
    }
    ElementId target() const noexcept {
      return z_;
    }

    using State = std::int32_t;
    static constexpr State kDead = -1;

    State start() const noexcept {
      return 0;
    }
    State step(State y, Gen c) const {
      return step_[static_cast<std::size_t>(y) * rank_ + c];
    }
    bool accepting(State y) const noexcept {
      return y == z_state_;
    }
    // Number of member words of length <= k from state y.
    std::uint64_t completions(State y, std::size_t k) const {
      return y == kDead ? 0 : completions_[static_cast<std::size_t>(y) * (bound_ + 1) + k];
    }
    // Contribution to the rank of letter c read in state y with r letters
    // still allowed (including c).
    std::uint64_t weight(State y, Gen c, std::size_t r) const {
      return weights_[(static_cast<std::size_t>(y) * rank_ + c) * (bound_ + 1) + r];
    }

    // Requires the word to be a member.
    std::uint64_t rank(std::span<Gen const> word) const;
    Word          unrank(std::uint64_t r) const;
    bool          contains(std::span<Gen const> word) const;

   private:
    std::size_t                rank_;
    std::size_t                bound_;
    ElementId                  z_;
    State                      z_state_ = kDead;
    std::vector<State>         step_;
    std::vector<std::uint64_t> completions_;
    std::vector<std::uint64_t> weights_;
    std::uint64_t              count_ = 0;
  };

}  // namespace coxword

#endif  // COXWORD_INVOLUTION_HPP_
