#ifndef COXWORD_CAYLEY_TABLE_HPP_
#define COXWORD_CAYLEY_TABLE_HPP_

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coxword/group.hpp"

namespace coxword {

  using ElementId = std::uint32_t;

  inline constexpr ElementId kNoElement = std::numeric_limits<ElementId>::max();

  // Dense multiplication tables for every element of length <= max_length.
  // Ids follow the enumeration order of enumerate_group, so id 0 is the
  // identity.  Products that leave the ball are kNoElement.  Immutable
  // after construction.
  class CayleyTable {
   public:
    CayleyTable(std::shared_ptr<Group const> group,
                std::size_t                  max_length,
                std::size_t                  max_elements = 1'000'000);

    Group const& group() const noexcept {
      return *group_;
    }
    std::shared_ptr<Group const> const& group_ptr() const noexcept {
      return group_;
    }
    CoxeterSystem const& system() const noexcept {
      return group_->system();
    }
    std::size_t rank() const noexcept {
      return rank_;
    }
    std::size_t size() const noexcept {
      return elements_.size();
    }
    std::size_t max_length() const noexcept {
      return max_length_;
    }
    // True when the ball is the whole (finite) group.
    bool complete() const noexcept {
      return complete_;
    }

    static constexpr ElementId identity() noexcept {
      return 0;
    }
    ElementId right(ElementId w, Gen s) const {
      return right_[w * rank_ + s];
    }
    ElementId left(Gen s, ElementId w) const {
      return left_[w * rank_ + s];
    }
    std::uint32_t length(ElementId w) const {
      return length_[w];
    }
    bool is_right_descent(ElementId w, Gen s) const {
      return (right_descents_[w] >> s) & 1u;
    }
    bool is_left_descent(Gen s, ElementId w) const {
      return (left_descents_[w] >> s) & 1u;
    }
    std::uint64_t right_descents(ElementId w) const {
      return right_descents_[w];
    }
    std::uint64_t left_descents(ElementId w) const {
      return left_descents_[w];
    }
    ElementId star(ElementId w) const {
      return star_[w];
    }
    ElementId inverse(ElementId w) const {
      return inverse_[w];
    }
    GroupElement const& element(ElementId w) const {
      return elements_[w];
    }
    Word const& reduced_word(ElementId w) const {
      return words_[w];
    }

    std::optional<ElementId> find(GroupElement const& w) const;

    // Product of a word (kNoElement if it leaves the ball).
    ElementId from_word(std::span<Gen const> word) const;

    // Id of the word's product if the word is reduced, kNoElement otherwise.
    ElementId reduced_product(std::span<Gen const> word) const;

    // Group product vw.
    ElementId multiply(ElementId v, ElementId w) const;

    // Demazure product v o w.
    ElementId demazure(ElementId v, ElementId w) const;

    // Elements of W_J (requires W_J inside the ball).
    std::vector<ElementId> parabolic(ParabolicSubset J) const;

   private:
    std::shared_ptr<Group const>                                   group_;
    std::size_t                                                    rank_;
    std::size_t                                                    max_length_;
    bool                                                           complete_ = false;
    std::vector<GroupElement>                                      elements_;
    std::vector<Word>                                              words_;
    std::vector<std::uint32_t>                                     length_;
    std::vector<ElementId>                                         right_;
    std::vector<ElementId>                                         left_;
    std::vector<std::uint64_t>                                     right_descents_;
    std::vector<std::uint64_t>                                     left_descents_;
    std::vector<ElementId>                                         star_;
    std::vector<ElementId>                                         inverse_;
    std::unordered_map<GroupElement, ElementId, GroupElementHash> index_;
  };

}  // namespace coxword

#endif  // COXWORD_CAYLEY_TABLE_HPP_
