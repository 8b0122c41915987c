#include "coxword/involution.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

#include "coxword/error.hpp"

namespace coxword {

  namespace {

    std::size_t cache_limit_from_env() {
      if (char const* v = std::getenv("COXWORD_CACHE_LIMIT")) {
        try {
          return static_cast<std::size_t>(std::stoull(v));
        } catch (std::exception const&) {
        }
      }
      return 100'000;
    }

  }  // namespace

  InvolutionEngine::InvolutionEngine(std::shared_ptr<CayleyTable const> table)
      : table_(std::move(table)), cache_limit_(cache_limit_from_env()) {
    CayleyTable const& T = *table_;
    std::size_t const  n = T.size();

    rho_.assign(n, -1);
    rho_limit_ = std::numeric_limits<std::size_t>::max();
    std::vector<ElementId> frontier{CayleyTable::identity()};
    rho_[CayleyTable::identity()] = 0;
    for (std::size_t level = 0; !frontier.empty(); ++level) {
      std::vector<ElementId> next;
      for (ElementId z : frontier) {
        for (std::size_t k = 0; k < rank(); ++k) {
          auto const s = static_cast<Gen>(k);
          if (T.is_right_descent(z, s)) {
            continue;
          }
          ElementId const y = underline(z, s);
          if (y == kNoElement) {
            rho_limit_ = std::min(rho_limit_, level);
            continue;
          }
          if (rho_[y] < 0) {
            rho_[y] = static_cast<int>(level + 1);
            next.push_back(y);
          }
        }
      }
      std::sort(next.begin(), next.end());
      frontier = std::move(next);
    }

    atom_fold_.assign(n, kNoElement);
    atom_fold_[CayleyTable::identity()] = CayleyTable::identity();
    for (ElementId w = 1; w < n; ++w) {
      Gen const       s      = T.reduced_word(w).back();
      ElementId const parent = T.right(w, s);
      ElementId const f      = atom_fold_[parent];
      atom_fold_[w]          = f == kNoElement ? kNoElement : twist(f, s);
    }
  }

  ElementId InvolutionEngine::underline(ElementId z, Gen s) const {
    CayleyTable const& T  = *table_;
    ElementId const    zs = T.right(z, s);
    if (zs == kNoElement) {
      return kNoElement;
    }
    Gen const       ss  = T.system().star(s);
    ElementId const sz  = T.left(ss, z);
    if (zs == sz) {
      return zs;
    }
    return T.left(ss, zs);
  }

  ElementId InvolutionEngine::fold(std::span<Letter const> word) const {
    ElementId x = CayleyTable::identity();
    for (Letter l : word) {
      x = twist(x, gen_of(l));
      if (x == kNoElement) {
        return kNoElement;
      }
    }
    return x;
  }

  std::vector<ElementId> InvolutionEngine::prefix_folds(std::span<Letter const> word) const {
    std::vector<ElementId> out{CayleyTable::identity()};
    ElementId              x = CayleyTable::identity();
    for (Letter l : word) {
      if (x != kNoElement) {
        x = twist(x, gen_of(l));
      }
      out.push_back(x);
    }
    return out;
  }

  bool InvolutionEngine::commutes(ElementId y, Gen s) const {
    ElementId const ys = table_->right(y, s);
    return ys != kNoElement && ys == table_->left(table_->system().star(s), y);
  }

  bool InvolutionEngine::is_involution_word(std::span<Letter const> word, ElementId z) const {
    ElementId x = CayleyTable::identity();
    for (Letter l : word) {
      Gen const s = gen_of(l);
      if (table_->is_right_descent(x, s)) {
        return false;
      }
      x = underline(x, s);
      if (x == kNoElement) {
        return false;
      }
    }
    return x == z;
  }

  void InvolutionEngine::require_rho(ElementId z) const {
    if (!is_twisted_involution(z)) {
      throw NotTwistedInvolution(table_->group().format(table_->element(z))
                                 + " is not a twisted involution");
    }
    if (rho_[z] < 0) {
      throw BoundExceeded("twisted involution " + table_->group().format(table_->element(z))
                          + " is beyond the enumerated ball");
    }
  }

  std::vector<ElementId> InvolutionEngine::twisted_involutions(std::size_t rho_bound) const {
    if (rho_bound > rho_limit_) {
      throw BoundExceeded("rho bound " + std::to_string(rho_bound)
                          + " exceeds what the enumerated ball can certify ("
                          + std::to_string(rho_limit_) + ")");
    }
    std::vector<ElementId> out;
    for (ElementId z = 0; z < rho_.size(); ++z) {
      if (rho_[z] >= 0 && static_cast<std::size_t>(rho_[z]) <= rho_bound) {
        out.push_back(z);
      }
    }
    return out;
  }

  std::vector<ElementId> InvolutionEngine::all_twisted_involutions() const {
    return twisted_involutions(
        std::min<std::size_t>(rho_limit_, std::numeric_limits<int>::max()));
  }

  std::size_t InvolutionEngine::rho(ElementId z) const {
    require_rho(z);
    return static_cast<std::size_t>(rho_[z]);
  }

  std::shared_ptr<std::vector<Word> const>
  InvolutionEngine::involution_words(ElementId z) const {
    {
      std::lock_guard lock(mutex_);
      auto it = word_cache_.find(z);
      if (it != word_cache_.end()) {
        return it->second;
      }
    }
    require_rho(z);
    std::vector<Word> out;
    if (z == CayleyTable::identity()) {
      out.emplace_back();
    } else {
      for (std::size_t k = 0; k < rank(); ++k) {
        auto const s = static_cast<Gen>(k);
        if (!table_->is_right_descent(z, s)) {
          continue;
        }
        auto const sub = involution_words(underline(z, s));
        for (Word const& w : *sub) {
          Word v = w;
          v.push_back(s);
          out.push_back(std::move(v));
        }
      }
      std::sort(out.begin(), out.end());
    }
    auto result = std::make_shared<std::vector<Word> const>(std::move(out));
    std::lock_guard lock(mutex_);
    if (word_cache_.size() >= cache_limit_) {
      word_cache_.clear();
    }
    word_cache_.emplace(z, result);
    return result;
  }

  std::vector<std::size_t> InvolutionEngine::commutations(std::span<Letter const> word,
                                                          ElementId               z) const {
    if (!is_involution_word(word, z)) {
      throw NotInvolutionWord(format_word(word, rank()) + " is not an involution word for "
                              + table_->group().format(table_->element(z)));
    }
    std::vector<std::size_t> out;
    ElementId                y = CayleyTable::identity();
    for (std::size_t i = 0; i < word.size(); ++i) {
      Gen const s = gen_of(word[i]);
      if (commutes(y, s)) {
        out.push_back(i);
      }
      y = underline(y, s);
    }
    return out;
  }

  std::vector<PrimedWord> InvolutionEngine::primed_words(ElementId z) const {
    std::vector<PrimedWord> out;
    for (Word const& w : *involution_words(z)) {
      std::vector<std::size_t> comm;
      ElementId                y = CayleyTable::identity();
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (commutes(y, w[i])) {
          comm.push_back(i);
        }
        y = underline(y, w[i]);
      }
      std::uint64_t const subsets = std::uint64_t{1} << comm.size();
      for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        PrimedWord p(w.begin(), w.end());
        for (std::size_t k = 0; k < comm.size(); ++k) {
          if ((mask >> k) & 1u) {
            p[comm[k]] = primed(p[comm[k]]);
          }
        }
        out.push_back(std::move(p));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<ElementId> InvolutionEngine::hecke_atoms(ElementId z) const {
    require_rho(z);
    std::vector<ElementId> out;
    std::uint32_t const    lz = table_->length(z);
    for (ElementId w = 0; w < atom_fold_.size(); ++w) {
      if (atom_fold_[w] != z) {
        continue;
      }
      std::uint32_t const lw = table_->length(w);
      if (lw > lz || lz > 2 * lw) {
        throw std::logic_error("atom length bound violated");
      }
      out.push_back(w);
    }
    return out;
  }

  std::vector<Word> InvolutionEngine::reduced_words(ElementId w) const {
    std::unordered_map<ElementId, std::vector<Word>> memo;
    auto rec = [&](auto&& self, ElementId x) -> std::vector<Word> const& {
      auto it = memo.find(x);
      if (it != memo.end()) {
        return it->second;
      }
      std::vector<Word> out;
      if (x == CayleyTable::identity()) {
        out.emplace_back();
      } else {
        for (std::size_t k = 0; k < rank(); ++k) {
          auto const s = static_cast<Gen>(k);
          if (!table_->is_right_descent(x, s)) {
            continue;
          }
          for (Word const& u : self(self, table_->right(x, s))) {
            Word v = u;
            v.push_back(s);
            out.push_back(std::move(v));
          }
        }
      }
      return memo.emplace(x, std::move(out)).first->second;
    };
    std::vector<Word> out = rec(rec, w);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Word> InvolutionEngine::reduced_hecke_words(ElementId z) const {
    std::vector<Word> out;
    for (ElementId w : hecke_atoms(z)) {
      auto words = reduced_words(w);
      out.insert(out.end(), words.begin(), words.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Word> InvolutionEngine::hecke_words(ElementId   z,
                                                  std::size_t max_len,
                                                  std::size_t cap) const {
    HeckeWordIndex const index(*this, z, max_len);
    if (index.count() > cap) {
      throw BoundExceeded(std::to_string(index.count()) + " Hecke words exceed the cap of "
                          + std::to_string(cap));
    }
    std::vector<Word> out;
    out.reserve(index.count());
    for (std::uint64_t r = 0; r < index.count(); ++r) {
      out.push_back(index.unrank(r));
    }
    return out;
  }

  ElementId InvolutionEngine::ad_star(ElementId z, Gen s) const {
    ElementId const zs = table_->right(z, s);
    if (zs == kNoElement) {
      return kNoElement;
    }
    for (std::size_t k = 0; k < rank(); ++k) {
      auto const t = static_cast<Gen>(k);
      if (table_->left(t, z) == zs) {
        return table_->star(table_->right(CayleyTable::identity(), t));
      }
    }
    ElementId const c = table_->multiply(zs, table_->inverse(z));
    return c == kNoElement ? kNoElement : table_->star(c);
  }

  Order InvolutionEngine::m_twisted_ad(ElementId z, Gen s, Gen t) const {
    auto as_gen = [&](ElementId x) -> std::optional<Gen> {
      if (x == kNoElement || table_->length(x) != 1) {
        return std::nullopt;
      }
      return table_->reduced_word(x).front();
    };
    return m_twisted(table_->system().m(s, t), s, t, as_gen(ad_star(z, s)),
                     as_gen(ad_star(z, t)));
  }

  ElementId InvolutionEngine::longest(ParabolicSubset J) const {
    auto const elems = table_->parabolic(J);
    return *std::max_element(elems.begin(), elems.end(), [&](ElementId a, ElementId b) {
      return table_->length(a) < table_->length(b);
    });
  }

  HeckeWordIndex::HeckeWordIndex(InvolutionEngine const& engine, ElementId z, std::size_t bound)
      : rank_(engine.rank()), bound_(bound), z_(z) {
    CayleyTable const& T = engine.table();
    if (!engine.is_twisted_involution(z)) {
      throw NotTwistedInvolution(T.group().format(T.element(z)) + " is not a twisted involution");
    }
    std::uint32_t const lz = T.length(z);
    if (lz > T.max_length()) {
      throw BoundExceeded("target is beyond the enumerated ball");
    }
    std::unordered_map<ElementId, State> state_of;
    std::vector<ElementId>               states{CayleyTable::identity()};
    state_of.emplace(CayleyTable::identity(), 0);
    for (std::size_t head = 0; head < states.size(); ++head) {
      ElementId const y = states[head];
      for (std::size_t k = 0; k < rank_; ++k) {
        ElementId const x = engine.twist(y, static_cast<Gen>(k));
        if (x == kNoElement || T.length(x) > lz) {
          continue;
        }
        if (state_of.emplace(x, static_cast<State>(states.size())).second) {
          states.push_back(x);
        }
      }
    }
    std::size_t const ns = states.size();
    step_.assign(ns * rank_, kDead);
    for (std::size_t i = 0; i < ns; ++i) {
      for (std::size_t k = 0; k < rank_; ++k) {
        ElementId const x = engine.twist(states[i], static_cast<Gen>(k));
        auto            it = x == kNoElement ? state_of.end() : state_of.find(x);
        if (it != state_of.end()) {
          step_[i * rank_ + k] = it->second;
        }
      }
    }
    if (auto it = state_of.find(z); it != state_of.end()) {
      z_state_ = it->second;
    }
    auto add = [](std::uint64_t a, std::uint64_t b) {
      std::uint64_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw BoundExceeded("Hecke word count overflows 64 bits");
      }
      return r;
    };
    std::size_t const width = bound_ + 1;
    completions_.assign(ns * width, 0);
    for (std::size_t k = 0; k <= bound_; ++k) {
      for (std::size_t i = 0; i < ns; ++i) {
        std::uint64_t v = static_cast<State>(i) == z_state_ ? 1 : 0;
        if (k > 0) {
          for (std::size_t c = 0; c < rank_; ++c) {
            State const st = step_[i * rank_ + c];
            if (st != kDead) {
              v = add(v, completions_[static_cast<std::size_t>(st) * width + k - 1]);
            }
          }
        }
        completions_[i * width + k] = v;
      }
    }
    weights_.assign(ns * rank_ * width, 0);
    for (std::size_t i = 0; i < ns; ++i) {
      for (std::size_t r = 1; r <= bound_; ++r) {
        std::uint64_t acc = static_cast<State>(i) == z_state_ ? 1 : 0;
        for (std::size_t c = 0; c < rank_; ++c) {
          weights_[(i * rank_ + c) * width + r] = acc;
          State const st = step_[i * rank_ + c];
          if (st != kDead) {
            acc = add(acc, completions_[static_cast<std::size_t>(st) * width + r - 1]);
          }
        }
      }
    }
    count_ = completions_[bound_];
  }

  std::uint64_t HeckeWordIndex::rank(std::span<Gen const> word) const {
    State         y   = start();
    std::size_t   r   = bound_;
    std::uint64_t sum = 0;
    for (Gen c : word) {
      sum += weight(y, c, r);
      y = step(y, c);
      --r;
    }
    return sum;
  }

  Word HeckeWordIndex::unrank(std::uint64_t r) const {
    Word        out;
    State       y    = start();
    std::size_t left = bound_;
    while (true) {
      if (accepting(y)) {
        if (r == 0) {
          return out;
        }
        --r;
      }
      bool advanced = false;
      for (std::size_t c = 0; c < rank_ && left > 0; ++c) {
        State const         st  = step(y, static_cast<Gen>(c));
        std::uint64_t const cnt = completions(st, left - 1);
        if (r < cnt) {
          out.push_back(static_cast<Gen>(c));
          y = st;
          --left;
          advanced = true;
          break;
        }
        r -= cnt;
      }
      if (!advanced) {
        throw std::out_of_range("Hecke word rank out of range");
      }
    }
  }

  bool HeckeWordIndex::contains(std::span<Gen const> word) const {
    if (word.size() > bound_) {
      return false;
    }
    State y = start();
    for (Gen c : word) {
      if (c >= rank_) {
        return false;
      }
      y = step(y, c);
      if (y == kDead) {
        return false;
      }
    }
    return accepting(y);
  }

}  // namespace coxword
