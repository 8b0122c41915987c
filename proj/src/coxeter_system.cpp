#include "coxword/coxeter_system.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "coxword/error.hpp"

namespace coxword {

  std::string Order::to_string() const {
    return is_finite() ? std::to_string(value_) : "inf";
  }

  ParabolicSubset::ParabolicSubset(std::initializer_list<Gen> gens) {
    for (Gen s : gens) {
      mask_ |= std::uint64_t{1} << s;
    }
  }

  std::vector<Gen> ParabolicSubset::generators() const {
    std::vector<Gen> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(static_cast<Gen>(std::countr_zero(m)));
    }
    return out;
  }

  CoxeterSystem::CoxeterSystem(std::vector<std::vector<Order>> matrix,
                               std::vector<Gen>                star,
                               std::string                     name)
      : matrix_(std::move(matrix)), star_(std::move(star)), name_(std::move(name)) {
    std::size_t const n = matrix_.size();
    if (n == 0 || n > kMaxRank) {
      throw InvalidMatrix("rank must lie in [1, " + std::to_string(kMaxRank)
                          + "], got " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (matrix_[i].size() != n) {
        throw InvalidMatrix("Coxeter matrix is not square");
      }
      if (matrix_[i][i] != Order(1)) {
        throw InvalidMatrix("diagonal entry " + std::to_string(i + 1)
                            + " is not 1");
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          continue;
        }
        if (matrix_[i][j] != matrix_[j][i]) {
          throw InvalidMatrix("Coxeter matrix is not symmetric");
        }
        if (matrix_[i][j].is_finite() && matrix_[i][j].value() < 2) {
          throw InvalidMatrix("off-diagonal entries must be >= 2 or infinite");
        }
      }
    }
    if (star_.size() != n) {
      throw InvalidStar("star has " + std::to_string(star_.size())
                        + " entries for rank " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (star_[i] >= n || star_[star_[i]] != i) {
        throw InvalidStar("star is not an involution of the generators");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (matrix_[star_[i]][star_[j]] != matrix_[i][j]) {
          throw InvalidStar("star does not preserve the Coxeter matrix");
        }
      }
    }
  }

  bool CoxeterSystem::star_is_identity() const noexcept {
    for (std::size_t i = 0; i < star_.size(); ++i) {
      if (star_[i] != i) {
        return false;
      }
    }
    return true;
  }

  bool CoxeterSystem::is_star_invariant(ParabolicSubset J) const noexcept {
    for (Gen s : J.generators()) {
      if (!J.contains(star_[s])) {
        return false;
      }
    }
    return true;
  }

  CoxeterSystem make_system(std::vector<std::vector<int>> const& matrix,
                            std::vector<Gen> const&              star,
                            std::string                          name) {
    std::vector<std::vector<Order>> m;
    m.reserve(matrix.size());
    for (auto const& row : matrix) {
      std::vector<Order> r;
      r.reserve(row.size());
      for (int v : row) {
        if (v < 0) {
          throw InvalidMatrix("negative Coxeter matrix entry");
        }
        r.push_back(Order::from_file(v));
      }
      m.push_back(std::move(r));
    }
    return CoxeterSystem(std::move(m), star, std::move(name));
  }

  Order m_twisted(Order              m,
                  Gen                s,
                  Gen                t,
                  std::optional<Gen> theta_s,
                  std::optional<Gen> theta_t) {
    if (!m.is_finite()) {
      return m;
    }
    int const  v        = m.value();
    bool const fixes    = theta_s == s && theta_t == t;
    bool const swaps    = theta_s == t && theta_t == s;
    bool const preserve = fixes || swaps;
    if (v % 2 == 1 && preserve) {
      return Order((v + 1) / 2);
    }
    if (v % 2 == 0 && fixes) {
      return Order(v / 2 + 1);
    }
    if (v % 2 == 0 && swaps) {
      return Order(v / 2);
    }
    return m;
  }

  std::string to_string(TypeLabel label) {
    switch (label) {
      case TypeLabel::A1:
        return "A1";
      case TypeLabel::TwistedA3:
        return "2A3";
      case TypeLabel::BC3:
        return "BC3";
      case TypeLabel::D4:
        return "D4";
      case TypeLabel::H3:
        return "H3";
      case TypeLabel::I2:
        return "I2";
      case TypeLabel::TwistedI2:
        return "2I2";
      case TypeLabel::Other:
        return "other";
    }
    return "other";
  }

  namespace {

    struct Diagram {
      TypeLabel                   label;
      std::size_t                 size;
      std::array<std::array<int, 4>, 4> m;
      std::array<int, 4>          star;
    };

    // Label order a, b, c, d.
    constexpr std::array<Diagram, 4> kDiagrams = {{
        {TypeLabel::TwistedA3,
         3,
         {{{1, 3, 2, 0}, {3, 1, 3, 0}, {2, 3, 1, 0}, {0, 0, 0, 0}}},
         {2, 1, 0, 3}},
        {TypeLabel::BC3,
         3,
         {{{1, 4, 2, 0}, {4, 1, 3, 0}, {2, 3, 1, 0}, {0, 0, 0, 0}}},
         {0, 1, 2, 3}},
        {TypeLabel::D4,
         4,
         {{{1, 2, 3, 2}, {2, 1, 3, 2}, {3, 3, 1, 3}, {2, 2, 3, 1}}},
         {0, 1, 2, 3}},
        {TypeLabel::H3,
         3,
         {{{1, 5, 2, 0}, {5, 1, 3, 0}, {2, 3, 1, 0}, {0, 0, 0, 0}}},
         {0, 1, 2, 3}},
    }};

    std::vector<Labeling> match_diagram(CoxeterSystem const&    system,
                                        std::vector<Gen> const& gens,
                                        Diagram const&          d) {
      std::vector<Labeling> out;
      if (gens.size() != d.size) {
        return out;
      }
      std::vector<Gen> perm = gens;
      std::sort(perm.begin(), perm.end());
      do {
        bool ok = true;
        for (std::size_t i = 0; ok && i < d.size; ++i) {
          for (std::size_t j = 0; ok && j < d.size; ++j) {
            Order const want = Order(d.m[i][j]);
            if (system.m(perm[i], perm[j]) != want) {
              ok = false;
            }
          }
          if (ok && system.star(perm[i]) != perm[static_cast<std::size_t>(d.star[i])]) {
            ok = false;
          }
        }
        if (ok) {
          Labeling lab{};
          for (std::size_t i = 0; i < d.size; ++i) {
            lab[i] = perm[i];
          }
          for (std::size_t i = d.size; i < 4; ++i) {
            lab[i] = perm[0];
          }
          out.push_back(lab);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return out;
    }

  }  // namespace

  TwistedType classify_twisted_type(CoxeterSystem const& system,
                                    ParabolicSubset      J) {
    if (!system.is_star_invariant(J)) {
      throw NotStarInvariant("parabolic subset is not *-invariant");
    }
    std::vector<Gen> const gens = J.generators();
    TwistedType            result;
    if (gens.size() == 1) {
      result.label = TypeLabel::A1;
      return result;
    }
    if (gens.size() == 2) {
      Gen const s           = gens[0];
      Gen const t           = gens[1];
      result.dihedral_order = system.m(s, t);
      result.label = system.star(s) == s ? TypeLabel::I2 : TypeLabel::TwistedI2;
      result.labelings.push_back(Labeling{s, t, s, s});
      return result;
    }
    for (Diagram const& d : kDiagrams) {
      auto labs = match_diagram(system, gens, d);
      if (!labs.empty()) {
        result.label     = d.label;
        result.labelings = std::move(labs);
        return result;
      }
    }
    return result;
  }

  std::vector<ParabolicSubset>
  star_invariant_subsets(CoxeterSystem const& system, std::size_t max_size) {
    std::vector<ParabolicSubset> out;
    std::size_t const            n = system.rank();
    std::function<void(std::size_t, std::uint64_t, std::size_t)> rec
        = [&](std::size_t next, std::uint64_t mask, std::size_t size) {
            if (size > 0 && system.is_star_invariant(ParabolicSubset(mask))) {
              out.emplace_back(mask);
            }
            if (size == max_size) {
              return;
            }
            for (std::size_t i = next; i < n; ++i) {
              rec(i + 1, mask | (std::uint64_t{1} << i), size + 1);
            }
          };
    rec(0, 0, 0);
    std::sort(out.begin(), out.end(), [](auto a, auto b) {
      return a.mask() < b.mask();
    });
    return out;
  }

}  // namespace coxword
