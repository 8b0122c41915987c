#ifndef COXWORD_WORD_HPP_
#define COXWORD_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxword {

  // Generator index in {0, ..., rank - 1}.
  using Gen = std::uint8_t;

  // A letter of a primed word: the generator in the low seven bits and the
  // prime flag in the high bit.  An unprimed letter is bit-identical to its
  // generator, so every Word is also a valid PrimedWord.
  using Letter = std::uint8_t;

  inline constexpr Letter kPrimeBit  = 0x80;
  inline constexpr std::size_t kMaxRank = 64;

  constexpr Gen gen_of(Letter l) noexcept {
    return static_cast<Gen>(l & 0x7f);
  }
  constexpr bool is_primed(Letter l) noexcept {
    return (l & kPrimeBit) != 0;
  }
  constexpr Letter primed(Gen s) noexcept {
    return static_cast<Letter>(s | kPrimeBit);
  }

  // Both are sequences of bytes.  A Word holds generators only; a PrimedWord
  // may carry prime flags.
  using Word       = std::vector<Gen>;
  using PrimedWord = std::vector<Letter>;

  struct WordHash {
    std::size_t operator()(std::vector<std::uint8_t> const& w) const noexcept {
      return std::hash<std::string_view>{}(std::string_view(
          reinterpret_cast<char const*>(w.data()), w.size()));
    }
  };

  inline std::string_view as_bytes(std::span<Letter const> w) noexcept {
    return {reinterpret_cast<char const*>(w.data()), w.size()};
  }

  // (s, t, s, t, ...) with `length` letters.
  Word alternating(Gen s, Gen t, std::size_t length);

  Word       strip_primes(std::span<Letter const> w);
  std::size_t count_primes(std::span<Letter const> w);

  // Text form: 1-based letters, written back to back when rank <= 9 and
  // comma separated otherwise; a prime is a trailing apostrophe.  The empty
  // word is written "()".
  std::string format_word(std::span<Letter const> w, std::size_t rank);

  // Inverse of format_word.  Accepts "()" or "" for the empty word and, for
  // any rank, comma separated indices.  Throws ParseError on bad input.
  PrimedWord parse_word(std::string_view text, std::size_t rank);

}  // namespace coxword

#endif  // COXWORD_WORD_HPP_
