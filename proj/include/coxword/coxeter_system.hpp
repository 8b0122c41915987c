#ifndef COXWORD_COXETER_SYSTEM_HPP_
#define COXWORD_COXETER_SYSTEM_HPP_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "coxword/word.hpp"

namespace coxword {

  // Order m(s,t) of a product of two generators; possibly infinite.  The
  // infinite order compares greater than every finite one.
  class Order {
   public:
    constexpr Order() = default;
    constexpr explicit Order(int value) : value_(value) {}

    static constexpr Order infinity() {
      return Order(kInfinite);
    }

    constexpr bool is_finite() const noexcept {
      return value_ != kInfinite;
    }
    constexpr int value() const noexcept {
      return value_;
    }

    friend constexpr auto operator<=>(Order, Order) = default;

    // File encoding: 0 stands for infinity.
    static constexpr Order from_file(int v) {
      return v == 0 ? infinity() : Order(v);
    }
    constexpr int to_file() const noexcept {
      return is_finite() ? value_ : 0;
    }

    std::string to_string() const;

   private:
    static constexpr int kInfinite = std::numeric_limits<int>::max();
    int                  value_    = 1;
  };

  // A subset J of the generators, stored as a bit mask.
  class ParabolicSubset {
   public:
    constexpr ParabolicSubset() = default;
    constexpr explicit ParabolicSubset(std::uint64_t mask) : mask_(mask) {}
    ParabolicSubset(std::initializer_list<Gen> gens);

    static constexpr ParabolicSubset all(std::size_t rank) {
      return ParabolicSubset(rank >= 64 ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << rank) - 1);
    }

    constexpr bool contains(Gen s) const noexcept {
      return (mask_ >> s) & 1u;
    }
    constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(mask_));
    }
    constexpr std::uint64_t mask() const noexcept {
      return mask_;
    }
    std::vector<Gen> generators() const;

    friend constexpr bool operator==(ParabolicSubset, ParabolicSubset) = default;

   private:
    std::uint64_t mask_ = 0;
  };

  // A twisted Coxeter system (W, S, *): the Coxeter matrix together with a
  // diagram involution of the generators.
  class CoxeterSystem {
   public:
    // Validates the data.  Throws InvalidMatrix or InvalidStar.
    CoxeterSystem(std::vector<std::vector<Order>> matrix,
                  std::vector<Gen>                star,
                  std::string                     name = "");

    std::size_t rank() const noexcept {
      return star_.size();
    }
    Order m(Gen s, Gen t) const {
      return matrix_[s][t];
    }
    Gen star(Gen s) const {
      return star_[s];
    }
    std::vector<Gen> const& star_map() const noexcept {
      return star_;
    }
    std::vector<std::vector<Order>> const& matrix() const noexcept {
      return matrix_;
    }
    bool star_is_identity() const noexcept;
    bool is_star_invariant(ParabolicSubset J) const noexcept;

    std::string const& name() const noexcept {
      return name_;
    }
    void set_name(std::string name) {
      name_ = std::move(name);
    }

    friend bool operator==(CoxeterSystem const& a, CoxeterSystem const& b) {
      return a.matrix_ == b.matrix_ && a.star_ == b.star_;
    }

   private:
    std::vector<std::vector<Order>> matrix_;
    std::vector<Gen>                star_;
    std::string                     name_;
  };

  // Builds a system from the file encoding (0 means infinity).
  CoxeterSystem make_system(std::vector<std::vector<int>> const& matrix,
                            std::vector<Gen> const&              star,
                            std::string                          name = "");

  // m(s,t;theta).  `theta_s` and `theta_t` are the images of s and t when
  // those images are simple generators, and nullopt otherwise.
  Order m_twisted(Order              m,
                  Gen                s,
                  Gen                t,
                  std::optional<Gen> theta_s,
                  std::optional<Gen> theta_t);

  enum class TypeLabel { A1, TwistedA3, BC3, D4, H3, I2, TwistedI2, Other };

  std::string to_string(TypeLabel label);

  // Generators assigned to the labels a, b, c, d of the standard diagrams:
  //   2A3: a-3-b-3-c with a* = c;   BC3: a-4-b-3-c;
  //   D4:  c joined to each of a, b, d;   H3: a-5-b-3-c.
  using Labeling = std::array<Gen, 4>;

  struct TwistedType {
    TypeLabel             label = TypeLabel::Other;
    Order                 dihedral_order;  // m(s,t) for I2 / 2I2
    std::vector<Labeling> labelings;       // every diagram-compatible labeling

    bool is_exceptional() const noexcept {
      return label == TypeLabel::TwistedA3 || label == TypeLabel::BC3
             || label == TypeLabel::D4 || label == TypeLabel::H3;
    }
  };

  // Isomorphism class of (W_J, J, *).  Throws NotStarInvariant if J != J*.
  TwistedType classify_twisted_type(CoxeterSystem const& system,
                                    ParabolicSubset      J);

  // Every J = J* with |J| <= max_size, in increasing mask order.
  std::vector<ParabolicSubset>
  star_invariant_subsets(CoxeterSystem const& system, std::size_t max_size);

}  // namespace coxword

#endif  // COXWORD_COXETER_SYSTEM_HPP_
