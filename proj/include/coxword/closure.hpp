#ifndef COXWORD_CLOSURE_HPP_
#define COXWORD_CLOSURE_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "coxword/involution.hpp"
#include "coxword/relations.hpp"
#include "coxword/word.hpp"

namespace coxword {

  using MembershipOracle = std::function<bool(std::span<Letter const>)>;

  inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

  struct ClosureResult {
    std::vector<PrimedWord>   words;  // sorted
    std::optional<PrimedWord> violation;
    std::optional<PrimedWord> violation_source;

    bool ok() const noexcept {
      return !violation.has_value();
    }
  };

  // The class of `seed` under the rewrite system.  Neighbors longer than
  // max_length are ignored.  Words rejected by the oracle are recorded as a
  // violation and not expanded.  Throws ClosureBoundExceeded past `cap`.
  ClosureResult equivalence_class(PrimedWord const&       seed,
                                  RewriteSystem const&    rules,
                                  MembershipOracle const& oracle     = {},
                                  std::size_t             cap        = kDefaultClosureCap,
                                  std::size_t max_length = std::numeric_limits<std::size_t>::max());

  struct RankedClosureResult {
    std::uint64_t       total   = 0;
    std::uint64_t       reached = 0;
    std::optional<Word> violation;
    std::optional<Word> violation_source;

    bool spans() const noexcept {
      return !violation && reached == total;
    }
  };

  // Closure over the words of a HeckeWordIndex kept as a bitset of ranks,
  // for sets too large to hold as words.  Neighbors longer than the index
  // bound are ignored; any other neighbor outside the index is a violation.
  RankedClosureResult ranked_closure(HeckeWordIndex const& index,
                                     RewriteSystem const&  rules,
                                     std::uint64_t         seed_rank = 0);

}  // namespace coxword

#endif  // COXWORD_CLOSURE_HPP_
