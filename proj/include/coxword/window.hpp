#ifndef COXWORD_WINDOW_HPP_
#define COXWORD_WINDOW_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coxword {

  // An element of the affine symmetric group S~_n in window notation
  // [w(1), ..., w(n)], where w(i + n) = w(i) + n.  Finite permutations of
  // [n] are the windows whose entries are exactly 1..n.
  class Window {
   public:
    Window() = default;

    // Throws InvalidWindow unless the entries are pairwise distinct mod n
    // and sum to n(n+1)/2.
    explicit Window(std::vector<std::int64_t> entries);

    static Window identity(std::size_t n);

    // The unique w with seq[i] = w(i + 1 + d) for some shift d.
    static Window from_shifted(std::vector<std::int64_t> const& seq);

    // Parses "[2,1,3,4]".
    static Window parse(std::string_view text);

    // Finite permutation of [n] from cycle notation such as "(1,4)(2,3)".
    static Window from_cycles(std::string_view text, std::size_t n);

    std::size_t size() const noexcept {
      return entries_.size();
    }
    std::vector<std::int64_t> const& entries() const noexcept {
      return entries_;
    }

    // w(i) for any integer i.
    std::int64_t operator()(std::int64_t i) const;

    // (this o other)(i) = this(other(i)).
    Window compose(Window const& other) const;
    Window inverse() const;

    // w s_i and s_i w for 1 <= i <= n; s_n exchanges n and n + 1.
    Window times_gen(std::size_t i) const;
    Window gen_times(std::size_t i) const;

    // w(i) > w(i + 1), i.e. s_i is a right descent.
    bool has_descent(std::size_t i) const {
      return (*this)(static_cast<std::int64_t>(i))
             > (*this)(static_cast<std::int64_t>(i) + 1);
    }

    // Length, by repeatedly removing right descents.
    std::size_t length() const;

    bool is_finite_permutation() const noexcept;

    std::string to_string() const;

    friend bool operator==(Window const&, Window const&) = default;
    friend auto operator<=>(Window const&, Window const&) = default;

   private:
    std::vector<std::int64_t> entries_;
  };

}  // namespace coxword

#endif  // COXWORD_WINDOW_HPP_
