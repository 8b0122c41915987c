#ifndef COXWORD_PERMUTATION_GROUP_HPP_
#define COXWORD_PERMUTATION_GROUP_HPP_

#include "coxword/group.hpp"
#include "coxword/window.hpp"

namespace coxword {

  // Coxeter matrix of S_n (rank n - 1) or of the affine group S~_n (rank n).
  CoxeterSystem symmetric_group_system(std::size_t n, bool affine, bool reversal_star = false);

  // S_n or S~_n acting by windows.  Generator k (0-based) is s_{k+1}; in the
  // affine case generator n - 1 is s_n, which exchanges n and n + 1.
  class PermutationGroup final : public Group {
   public:
    PermutationGroup(std::size_t n, bool affine, bool reversal_star = false);

    Backend backend() const noexcept override {
      return Backend::Permutation;
    }
    GroupElement identity() const override;
    GroupElement multiply_gen(GroupElement const& w, Gen s) const override;
    GroupElement left_multiply_gen(Gen s, GroupElement const& w) const override;
    std::size_t  length(GroupElement const& w) const override;
    bool         is_right_descent(GroupElement const& w, Gen s) const override;
    GroupElement inverse(GroupElement const& w) const override;
    Word         reduced_word(GroupElement const& w) const override;
    std::string  format(GroupElement const& w) const override;

    std::size_t degree() const noexcept {
      return n_;
    }
    bool affine() const noexcept {
      return affine_;
    }

    Window       window(GroupElement const& w) const;
    GroupElement element(Window const& w) const;

   private:
    std::size_t n_;
    bool        affine_;
  };

}  // namespace coxword

#endif  // COXWORD_PERMUTATION_GROUP_HPP_
