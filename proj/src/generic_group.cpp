#include "coxword/generic_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace coxword {

  namespace {

    // Words obtained from w by one braid move.
    template <typename F>
    void for_each_braid_move(CoxeterSystem const& sys, Word const& w, F&& f) {
      std::size_t const n = w.size();
      for (std::size_t i = 0; i + 1 < n; ++i) {
        Gen const s = w[i];
        Gen const t = w[i + 1];
        if (s == t) {
          continue;
        }
        Order const m = sys.m(s, t);
        if (!m.is_finite()) {
          continue;
        }
        auto const len = static_cast<std::size_t>(m.value());
        if (i + len > n) {
          continue;
        }
        bool alternates = true;
        for (std::size_t k = 2; k < len && alternates; ++k) {
          alternates = w[i + k] == w[i + k - 2];
        }
        if (!alternates) {
          continue;
        }
        Word v = w;
        for (std::size_t k = 0; k < len; ++k) {
          v[i + k] = (k % 2 == 0) ? t : s;
        }
        f(std::move(v));
      }
    }

  }  // namespace

  std::shared_ptr<GenericGroup::ClassInfo const>
  GenericGroup::info(Word const& reduced) const {
    {
      std::lock_guard lock(mutex_);
      auto it = classes_.find(reduced);
      if (it != classes_.end()) {
        return it->second;
      }
    }
    std::unordered_set<Word, WordHash> seen{reduced};
    std::deque<Word>                   queue{reduced};
    while (!queue.empty()) {
      Word w = std::move(queue.front());
      queue.pop_front();
      for_each_braid_move(system(), w, [&](Word v) {
        if (seen.insert(v).second) {
          queue.push_back(std::move(v));
        }
      });
    }
    auto ci = std::make_shared<ClassInfo>();
    ci->members.assign(seen.begin(), seen.end());
    std::sort(ci->members.begin(), ci->members.end());
    ci->canonical = ci->members.front();
    ci->ends_with.resize(rank());
    ci->starts_with.resize(rank());
    for (Word const& w : ci->members) {
      if (w.empty()) {
        continue;
      }
      Gen const last  = w.back();
      Gen const first = w.front();
      if (ci->ends_with[last].empty()) {
        ci->ends_with[last] = w;
        ci->right_descents |= std::uint64_t{1} << last;
      }
      if (ci->starts_with[first].empty()) {
        ci->starts_with[first] = w;
        ci->left_descents |= std::uint64_t{1} << first;
      }
    }
    std::shared_ptr<ClassInfo const> result = std::move(ci);
    std::lock_guard                  lock(mutex_);
    for (Word const& w : result->members) {
      classes_.emplace(w, result);
    }
    return result;
  }

  GroupElement GenericGroup::element(Word const& reduced) const {
    Word const& c = info(reduced)->canonical;
    return GroupElement(Backend::Generic,
                        std::vector<std::int64_t>(c.begin(), c.end()));
  }

  Word GenericGroup::word_of(GroupElement const& w) const {
    auto const& d = w.data();
    return Word(d.begin(), d.end());
  }

  GroupElement GenericGroup::identity() const {
    return GroupElement(Backend::Generic, {});
  }

  GroupElement GenericGroup::multiply_gen(GroupElement const& w, Gen s) const {
    auto const ci = info(word_of(w));
    if ((ci->right_descents >> s) & 1u) {
      Word v = ci->ends_with[s];
      v.pop_back();
      return element(v);
    }
    Word v = ci->canonical;
    v.push_back(s);
    return element(v);
  }

  GroupElement GenericGroup::left_multiply_gen(Gen s, GroupElement const& w) const {
    auto const ci = info(word_of(w));
    if ((ci->left_descents >> s) & 1u) {
      Word const& u = ci->starts_with[s];
      return element(Word(u.begin() + 1, u.end()));
    }
    Word v;
    v.reserve(ci->canonical.size() + 1);
    v.push_back(s);
    v.insert(v.end(), ci->canonical.begin(), ci->canonical.end());
    return element(v);
  }

  std::size_t GenericGroup::length(GroupElement const& w) const {
    return w.data().size();
  }

  bool GenericGroup::is_right_descent(GroupElement const& w, Gen s) const {
    return (info(word_of(w))->right_descents >> s) & 1u;
  }

  GroupElement GenericGroup::inverse(GroupElement const& w) const {
    Word v = word_of(w);
    std::reverse(v.begin(), v.end());
    return element(v);
  }

  Word GenericGroup::reduced_word(GroupElement const& w) const {
    return word_of(w);
  }

  std::vector<Word> GenericGroup::braid_class(GroupElement const& w) const {
    return info(word_of(w))->members;
  }

}  // namespace coxword
