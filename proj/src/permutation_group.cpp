#include "coxword/permutation_group.hpp"

#include "coxword/error.hpp"

namespace coxword {

  CoxeterSystem symmetric_group_system(std::size_t n, bool affine, bool reversal_star) {
    if (n < 2) {
      throw InvalidMatrix("symmetric group degree must be at least 2");
    }
    std::size_t const               rank = affine ? n : n - 1;
    std::vector<std::vector<Order>> m(rank, std::vector<Order>(rank, Order(2)));
    for (std::size_t i = 0; i < rank; ++i) {
      m[i][i] = Order(1);
    }
    for (std::size_t i = 0; i + 1 < rank; ++i) {
      m[i][i + 1] = m[i + 1][i] = Order(3);
    }
    if (affine && rank >= 3) {
      m[0][rank - 1] = m[rank - 1][0] = Order(3);
    }
    if (affine && rank == 2) {
      m[0][1] = m[1][0] = Order::infinity();
    }
    std::vector<Gen> star(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      star[i] = static_cast<Gen>(reversal_star ? rank - 1 - i : i);
    }
    return CoxeterSystem(std::move(m), std::move(star));
  }

  PermutationGroup::PermutationGroup(std::size_t n, bool affine, bool reversal_star)
      : Group(symmetric_group_system(n, affine, reversal_star)), n_(n), affine_(affine) {}

  Window PermutationGroup::window(GroupElement const& w) const {
    return Window(w.data());
  }

  GroupElement PermutationGroup::element(Window const& w) const {
    if (w.size() != n_ || (!affine_ && !w.is_finite_permutation())) {
      throw InvalidWindow("window " + w.to_string() + " is not an element of this group");
    }
    return GroupElement(Backend::Permutation, w.entries());
  }

  GroupElement PermutationGroup::identity() const {
    return element(Window::identity(n_));
  }

  GroupElement PermutationGroup::multiply_gen(GroupElement const& w, Gen s) const {
    return GroupElement(Backend::Permutation, window(w).times_gen(s + 1u).entries());
  }

  GroupElement PermutationGroup::left_multiply_gen(Gen s, GroupElement const& w) const {
    return GroupElement(Backend::Permutation, window(w).gen_times(s + 1u).entries());
  }

  std::size_t PermutationGroup::length(GroupElement const& w) const {
    return window(w).length();
  }

  bool PermutationGroup::is_right_descent(GroupElement const& w, Gen s) const {
    return window(w).has_descent(s + 1u);
  }

  GroupElement PermutationGroup::inverse(GroupElement const& w) const {
    return GroupElement(Backend::Permutation, window(w).inverse().entries());
  }

  Word PermutationGroup::reduced_word(GroupElement const& w) const {
    // Peel off the smallest left descent each time; this yields the
    // lexicographically least reduced word.
    Word   out;
    Window x = window(w);
    while (true) {
      Window const inv   = x.inverse();
      bool         found = false;
      for (std::size_t i = 1; i <= rank(); ++i) {
        if (inv.has_descent(i)) {
          out.push_back(static_cast<Gen>(i - 1));
          x     = x.gen_times(i);
          found = true;
          break;
        }
      }
      if (!found) {
        return out;
      }
    }
  }

  std::string PermutationGroup::format(GroupElement const& w) const {
    return window(w).to_string();
  }

}  // namespace coxword
