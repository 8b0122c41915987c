#include "coxword/closure.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

#include "coxword/error.hpp"

namespace coxword {

  ClosureResult equivalence_class(PrimedWord const&       seed,
                                  RewriteSystem const&    rules,
                                  MembershipOracle const& oracle,
                                  std::size_t             cap,
                                  std::size_t             max_length) {
    ClosureResult                                  result;
    std::unordered_set<PrimedWord, WordHash>       seen{seed};
    std::vector<PrimedWord const*>                 queue{&*seen.find(seed)};
    PrimedWord                                     buf;
    if (oracle && !oracle(seed)) {
      result.violation = seed;
      result.words     = {seed};
      return result;
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      PrimedWord const& w = *queue[head];
      rules.visit(w, [&](Rewrite const& r) {
        if (w.size() - r.length + r.replacement.size() > max_length) {
          return;
        }
        buf.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r.pos));
        buf.insert(buf.end(), r.replacement.begin(), r.replacement.end());
        buf.insert(buf.end(), w.begin() + static_cast<std::ptrdiff_t>(r.pos + r.length), w.end());
        if (seen.contains(buf)) {
          return;
        }
        if (oracle && !oracle(buf)) {
          if (!result.violation) {
            result.violation        = buf;
            result.violation_source = w;
          }
          return;
        }
        if (seen.size() >= cap) {
          throw ClosureBoundExceeded("equivalence class exceeds " + std::to_string(cap)
                                     + " words");
        }
        queue.push_back(&*seen.insert(buf).first);
      });
    }
    result.words.reserve(seen.size());
    for (PrimedWord const* w : queue) {
      result.words.push_back(*w);
    }
    std::sort(result.words.begin(), result.words.end());
    return result;
  }

  RankedClosureResult ranked_closure(HeckeWordIndex const& index,
                                     RewriteSystem const&  rules,
                                     std::uint64_t         seed_rank) {
    using State = HeckeWordIndex::State;
    RankedClosureResult result;
    result.total = index.count();
    if (seed_rank >= result.total) {
      throw std::out_of_range("seed rank outside the index");
    }
    std::size_t const          blocks = (result.total + 63) / 64;
    std::vector<std::uint64_t> visited(blocks, 0);
    std::vector<std::uint64_t> frontier(blocks, 0);
    auto mark = [&](std::uint64_t r) {
      std::uint64_t const bit = std::uint64_t{1} << (r & 63);
      if (!(visited[r >> 6] & bit)) {
        visited[r >> 6] |= bit;
        frontier[r >> 6] |= bit;
        ++result.reached;
      }
    };
    mark(seed_rank);
    std::size_t const bound = index.bound();
    // For the current word w: states[j] after j letters, prefix[j] the rank
    // contribution of the first j letters, and suffix[d][j] the contribution
    // of letters j.. when shifted d - 1 places to the right.
    std::vector<State>                       states(bound + 2);
    std::vector<std::uint64_t>               prefix(bound + 2);
    std::array<std::vector<std::uint64_t>, 3> suffix;
    for (auto& v : suffix) {
      v.assign(bound + 2, 0);
    }
    Word buf;
    auto violate = [&](Word const& w, Rewrite const& rw) {
      buf.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(rw.pos));
      buf.insert(buf.end(), rw.replacement.begin(), rw.replacement.end());
      buf.insert(buf.end(), w.begin() + static_cast<std::ptrdiff_t>(rw.pos + rw.length), w.end());
      result.violation        = buf;
      result.violation_source = w;
    };
    bool changed = true;
    while (changed && !result.violation) {
      changed = false;
      for (std::size_t i = 0; i < blocks && !result.violation; ++i) {
        while (frontier[i] != 0 && !result.violation) {
          int const           b = __builtin_ctzll(frontier[i]);
          std::uint64_t const r = (std::uint64_t{i} << 6) | static_cast<std::uint64_t>(b);
          frontier[i] &= frontier[i] - 1;
          changed           = true;
          Word const        w = index.unrank(r);
          std::size_t const m = w.size();
          states[0]           = index.start();
          prefix[0]           = 0;
          for (std::size_t j = 0; j < m; ++j) {
            prefix[j + 1] = prefix[j] + index.weight(states[j], w[j], bound - j);
            states[j + 1] = index.step(states[j], w[j]);
          }
          for (std::size_t d = 0; d < 3; ++d) {
            suffix[d][m] = 0;
            for (std::size_t j = m; j-- > 0;) {
              std::size_t const rem = bound + 1 - j - d;  // bound - j - (d - 1)
              suffix[d][j] = suffix[d][j + 1]
                             + (rem >= 1 && rem <= bound ? index.weight(states[j], w[j], rem) : 0);
            }
          }
          rules.visit(w, [&](Rewrite const& rw) {
            std::size_t const len = m - rw.length + rw.replacement.size();
            if (len > bound || result.violation) {
              return;
            }
            State         y   = states[rw.pos];
            std::uint64_t sum = prefix[rw.pos];
            std::size_t   rem = bound - rw.pos;
            for (Letter c : rw.replacement) {
              if (is_primed(c)) {
                throw std::invalid_argument("ranked closure takes unprimed rules only");
              }
              if (y == HeckeWordIndex::kDead) {
                break;
              }
              sum += index.weight(y, c, rem);
              y = index.step(y, c);
              --rem;
            }
            std::size_t const tail  = rw.pos + rw.length;
            auto const        shift = static_cast<std::ptrdiff_t>(rw.replacement.size())
                               - static_cast<std::ptrdiff_t>(rw.length);
            if (y == states[tail] && shift >= -1 && shift <= 1) {
              mark(sum + suffix[static_cast<std::size_t>(shift + 1)][tail]);
              return;
            }
            for (std::size_t j = tail; j < m && y != HeckeWordIndex::kDead; ++j) {
              sum += index.weight(y, w[j], rem);
              y = index.step(y, w[j]);
              --rem;
            }
            if (y == HeckeWordIndex::kDead || !index.accepting(y)) {
              violate(w, rw);
              return;
            }
            mark(sum);
          });
        }
      }
    }
    return result;
  }

}  // namespace coxword
