#ifndef COXWORD_GROUP_HPP_
#define COXWORD_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "coxword/coxeter_system.hpp"
#include "coxword/word.hpp"

namespace coxword {

  enum class Backend : std::uint8_t { Generic, Permutation };

  // An element of W.  The payload depends on the backend that produced it:
  // the lexicographically least reduced word (Generic) or the window
  // [w(1), ..., w(n)] (Permutation).  Two elements from the same group are
  // equal iff their payloads are equal.
  class GroupElement {
   public:
    GroupElement() = default;
    GroupElement(Backend backend, std::vector<std::int64_t> data)
        : backend_(backend), data_(std::move(data)) {}

    Backend backend() const noexcept {
      return backend_;
    }
    std::vector<std::int64_t> const& data() const noexcept {
      return data_;
    }

    friend bool operator==(GroupElement const&, GroupElement const&) = default;
    friend auto operator<=>(GroupElement const& a, GroupElement const& b) {
      return a.data_ <=> b.data_;
    }

   private:
    Backend                   backend_ = Backend::Generic;
    std::vector<std::int64_t> data_;
  };

  struct GroupElementHash {
    std::size_t operator()(GroupElement const& e) const noexcept;
  };

  // Exact arithmetic in the Coxeter group of a twisted system.  All methods
  // are safe to call concurrently.
  class Group {
   public:
    explicit Group(CoxeterSystem system) : system_(std::move(system)) {}
    virtual ~Group() = default;

    Group(Group const&)            = delete;
    Group& operator=(Group const&) = delete;

    CoxeterSystem const& system() const noexcept {
      return system_;
    }
    std::size_t rank() const noexcept {
      return system_.rank();
    }

    virtual Backend      backend() const noexcept                         = 0;
    virtual GroupElement identity() const                                 = 0;
    virtual GroupElement multiply_gen(GroupElement const& w, Gen s) const = 0;
    virtual GroupElement left_multiply_gen(Gen s, GroupElement const& w) const
        = 0;
    virtual std::size_t  length(GroupElement const& w) const             = 0;
    virtual bool         is_right_descent(GroupElement const& w, Gen s) const = 0;
    virtual GroupElement inverse(GroupElement const& w) const             = 0;
    // The lexicographically least reduced word.
    virtual Word         reduced_word(GroupElement const& w) const        = 0;
    virtual std::string  format(GroupElement const& w) const;

    bool is_left_descent(Gen s, GroupElement const& w) const {
      return length(left_multiply_gen(s, w)) < length(w);
    }

    // Product s_1 s_2 ... s_k of an arbitrary (possibly non-reduced) word.
    GroupElement from_word(std::span<Gen const> word) const;

    bool is_reduced(std::span<Gen const> word) const {
      return length(from_word(word)) == word.size();
    }

    // w* obtained by applying * letterwise to a reduced word.
    GroupElement star_elem(GroupElement const& w) const;

   private:
    CoxeterSystem system_;
  };

  // Demazure product v o w, folding multiply-or-absorb over a reduced word of w.
  GroupElement demazure(Group const& G, GroupElement const& v, GroupElement const& w);

  inline constexpr std::size_t kDefaultEnumerationBound = 10'000;

  // All elements of length <= max_length (or of W_J when a subset is given),
  // ordered by length and then by reduced word.  Throws BoundExceeded when
  // more than `max_elements` elements would be produced.
  std::vector<GroupElement>
  enumerate_group(Group const& G,
                  std::size_t  max_length,
                  std::size_t  max_elements = kDefaultEnumerationBound);

  std::vector<GroupElement>
  enumerate_parabolic(Group const&    G,
                      ParabolicSubset J,
                      std::size_t     max_elements = kDefaultEnumerationBound);

  // Longest element of W_J.  Throws InfiniteParabolic when W_J has more than
  // `max_elements` elements.
  GroupElement longest_element(Group const&    G,
                               ParabolicSubset J,
                               std::size_t     max_elements = kDefaultEnumerationBound);

  // Whether w lies in ^J W, i.e. l(sw) > l(w) for all s in J.
  bool is_min_coset_rep(Group const& G, GroupElement const& w, ParabolicSubset J);

}  // namespace coxword

#endif  // COXWORD_GROUP_HPP_
