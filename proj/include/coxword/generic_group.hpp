#ifndef COXWORD_GENERIC_GROUP_HPP_
#define COXWORD_GENERIC_GROUP_HPP_

#include <memory>
#include <mutex>
#include <unordered_map>

#include "coxword/group.hpp"

namespace coxword {

  // Backend valid for every Coxeter matrix.  An element is stored as the
  // lexicographically least word in the braid class of its reduced words;
  // by Matsumoto-Tits two reduced words name the same element iff they are
  // braid equivalent.  Braid classes are computed by breadth-first search
  // and memoized, which keeps this practical for groups of a few thousand
  // elements.
  class GenericGroup final : public Group {
   public:
    explicit GenericGroup(CoxeterSystem system) : Group(std::move(system)) {}

    Backend backend() const noexcept override {
      return Backend::Generic;
    }
    GroupElement identity() const override;
    GroupElement multiply_gen(GroupElement const& w, Gen s) const override;
    GroupElement left_multiply_gen(Gen s, GroupElement const& w) const override;
    std::size_t  length(GroupElement const& w) const override;
    bool         is_right_descent(GroupElement const& w, Gen s) const override;
    GroupElement inverse(GroupElement const& w) const override;
    Word         reduced_word(GroupElement const& w) const override;

    // Every reduced word of w, sorted.
    std::vector<Word> braid_class(GroupElement const& w) const;

   private:
    struct ClassInfo {
      Word              canonical;
      std::uint64_t     right_descents = 0;
      std::uint64_t     left_descents  = 0;
      std::vector<Word> ends_with;    // indexed by generator, empty if none
      std::vector<Word> starts_with;  // indexed by generator, empty if none
      std::vector<Word> members;
    };

    std::shared_ptr<ClassInfo const> info(Word const& reduced) const;
    GroupElement                     element(Word const& reduced) const;
    Word                             word_of(GroupElement const& w) const;

    mutable std::mutex mutex_;
    mutable std::unordered_map<Word, std::shared_ptr<ClassInfo const>, WordHash>
        classes_;
  };

}  // namespace coxword

#endif  // COXWORD_GENERIC_GROUP_HPP_
