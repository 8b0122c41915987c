#include "coxword/group.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_set>

#include "coxword/error.hpp"

namespace coxword {

  std::size_t GroupElementHash::operator()(GroupElement const& e) const noexcept {
    auto const& d = e.data();
    return std::hash<std::string_view>{}(std::string_view(
               reinterpret_cast<char const*>(d.data()),
               d.size() * sizeof(std::int64_t)))
           ^ static_cast<std::size_t>(e.backend());
  }

  std::string Group::format(GroupElement const& w) const {
    Word const r = reduced_word(w);
    return r.empty() ? std::string("e") : format_word(r, rank());
  }

  GroupElement Group::from_word(std::span<Gen const> word) const {
    GroupElement x = identity();
    for (Gen s : word) {
      x = multiply_gen(x, s);
    }
    return x;
  }

  GroupElement Group::star_elem(GroupElement const& w) const {
    Word r = reduced_word(w);
    for (Gen& s : r) {
      s = system().star(s);
    }
    return from_word(r);
  }

  GroupElement demazure(Group const& G, GroupElement const& v, GroupElement const& w) {
    GroupElement x = v;
    for (Gen s : G.reduced_word(w)) {
      if (!G.is_right_descent(x, s)) {
        x = G.multiply_gen(x, s);
      }
    }
    return x;
  }

  namespace {

    std::vector<GroupElement> bfs(Group const&            G,
                                  std::vector<Gen> const& gens,
                                  std::size_t             max_length,
                                  std::size_t             max_elements,
                                  bool                    parabolic) {
      std::unordered_set<GroupElement, GroupElementHash> seen;
      std::vector<GroupElement>                          order;
      std::vector<GroupElement>                          frontier{G.identity()};
      seen.insert(frontier.front());
      order.push_back(frontier.front());
      for (std::size_t len = 0; len < max_length && !frontier.empty(); ++len) {
        std::vector<GroupElement> next;
        for (auto const& x : frontier) {
          for (Gen s : gens) {
            if (G.is_right_descent(x, s)) {
              continue;
            }
            GroupElement y = G.multiply_gen(x, s);
            if (seen.insert(y).second) {
              if (seen.size() > max_elements) {
                if (parabolic) {
                  throw InfiniteParabolic(
                      "parabolic subgroup exceeds enumeration bound of "
                      + std::to_string(max_elements) + " elements");
                }
                throw BoundExceeded("group enumeration exceeds "
                                    + std::to_string(max_elements)
                                    + " elements");
              }
              next.push_back(std::move(y));
            }
          }
        }
        std::vector<std::pair<Word, GroupElement>> keyed;
        keyed.reserve(next.size());
        for (auto& y : next) {
          keyed.emplace_back(G.reduced_word(y), std::move(y));
        }
        std::sort(keyed.begin(), keyed.end(), [](auto const& a, auto const& b) {
          return a.first < b.first;
        });
        frontier.clear();
        for (auto& [word, y] : keyed) {
          order.push_back(y);
          frontier.push_back(std::move(y));
        }
      }
      return order;
    }

  }  // namespace

  std::vector<GroupElement> enumerate_group(Group const& G,
                                            std::size_t  max_length,
                                            std::size_t  max_elements) {
    std::vector<Gen> gens(G.rank());
    for (std::size_t s = 0; s < gens.size(); ++s) {
      gens[s] = static_cast<Gen>(s);
    }
    return bfs(G, gens, max_length, max_elements, false);
  }

  std::vector<GroupElement> enumerate_parabolic(Group const&    G,
                                                ParabolicSubset J,
                                                std::size_t     max_elements) {
    return bfs(G,
               J.generators(),
               std::numeric_limits<std::size_t>::max(),
               max_elements,
               true);
  }

  GroupElement longest_element(Group const&    G,
                               ParabolicSubset J,
                               std::size_t     max_elements) {
    auto const elems = enumerate_parabolic(G, J, max_elements);
    return elems.back();
  }

  bool is_min_coset_rep(Group const& G, GroupElement const& w, ParabolicSubset J) {
    for (Gen s : J.generators()) {
      if (G.is_left_descent(s, w)) {
        return false;
      }
    }
    return true;
  }

}  // namespace coxword
