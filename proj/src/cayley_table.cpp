#include "coxword/cayley_table.hpp"

#include <algorithm>

#include "coxword/error.hpp"

namespace coxword {

  CayleyTable::CayleyTable(std::shared_ptr<Group const> group,
                           std::size_t                  max_length,
                           std::size_t                  max_elements)
      : group_(std::move(group)), rank_(group_->rank()), max_length_(max_length) {
    Group const& G = *group_;
    elements_      = enumerate_group(G, max_length, max_elements);
    std::size_t const n = elements_.size();
    index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      index_.emplace(elements_[i], static_cast<ElementId>(i));
    }
    words_.resize(n);
    length_.resize(n);
    right_.assign(n * rank_, kNoElement);
    left_.assign(n * rank_, kNoElement);
    right_descents_.assign(n, 0);
    left_descents_.assign(n, 0);
    star_.resize(n);
    inverse_.resize(n);
    complete_ = true;
    for (std::size_t i = 0; i < n; ++i) {
      GroupElement const& w = elements_[i];
      words_[i]             = G.reduced_word(w);
      length_[i]            = static_cast<std::uint32_t>(words_[i].size());
    }
    for (std::size_t i = 0; i < n; ++i) {
      GroupElement const& w = elements_[i];
      for (std::size_t k = 0; k < rank_; ++k) {
        auto const s = static_cast<Gen>(k);
        if (G.is_right_descent(w, s)) {
          right_descents_[i] |= std::uint64_t{1} << k;
        }
        if (length_[i] < max_length || G.is_right_descent(w, s)) {
          auto it = index_.find(G.multiply_gen(w, s));
          if (it != index_.end()) {
            right_[i * rank_ + k] = it->second;
          }
        }
        GroupElement const sw = G.left_multiply_gen(s, w);
        auto               it = index_.find(sw);
        if (it != index_.end()) {
          left_[i * rank_ + k] = it->second;
          if (length_[it->second] < length_[i]) {
            left_descents_[i] |= std::uint64_t{1} << k;
          }
        }
        if (right_[i * rank_ + k] == kNoElement) {
          complete_ = false;
        }
      }
      auto st = index_.find(G.star_elem(w));
      auto iv = index_.find(G.inverse(w));
      if (st == index_.end() || iv == index_.end()) {
        throw BoundExceeded("star or inverse left the enumerated ball");
      }
      star_[i]    = st->second;
      inverse_[i] = iv->second;
    }
  }

  std::optional<ElementId> CayleyTable::find(GroupElement const& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  ElementId CayleyTable::from_word(std::span<Gen const> word) const {
    ElementId x = identity();
    for (Gen s : word) {
      x = right(x, s);
      if (x == kNoElement) {
        return kNoElement;
      }
    }
    return x;
  }

  ElementId CayleyTable::reduced_product(std::span<Gen const> word) const {
    ElementId x = identity();
    for (Gen s : word) {
      if (is_right_descent(x, s)) {
        return kNoElement;
      }
      x = right(x, s);
      if (x == kNoElement) {
        return kNoElement;
      }
    }
    return x;
  }

  ElementId CayleyTable::multiply(ElementId v, ElementId w) const {
    ElementId x = v;
    for (Gen s : words_[w]) {
      x = right(x, s);
      if (x == kNoElement) {
        return kNoElement;
      }
    }
    return x;
  }

  ElementId CayleyTable::demazure(ElementId v, ElementId w) const {
    ElementId x = v;
    for (Gen s : words_[w]) {
      if (!is_right_descent(x, s)) {
        x = right(x, s);
        if (x == kNoElement) {
          return kNoElement;
        }
      }
    }
    return x;
  }

  std::vector<ElementId> CayleyTable::parabolic(ParabolicSubset J) const {
    std::vector<ElementId> out{identity()};
    std::vector<bool>      seen(size(), false);
    seen[identity()] = true;
    for (std::size_t head = 0; head < out.size(); ++head) {
      ElementId const x = out[head];
      for (Gen s : J.generators()) {
        ElementId const y = right(x, s);
        if (y == kNoElement) {
          throw InfiniteParabolic("parabolic subgroup leaves the enumerated ball");
        }
        if (!seen[y]) {
          seen[y] = true;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace coxword
