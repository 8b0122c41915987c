#include "coxword/word.hpp"

#include <cctype>

#include "coxword/error.hpp"

namespace coxword {

  Word alternating(Gen s, Gen t, std::size_t length) {
    Word w(length);
    for (std::size_t i = 0; i < length; ++i) {
      w[i] = (i % 2 == 0) ? s : t;
    }
    return w;
  }

  Word strip_primes(std::span<Letter const> w) {
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      out[i] = gen_of(w[i]);
    }
    return out;
  }

  std::size_t count_primes(std::span<Letter const> w) {
    std::size_t n = 0;
    for (Letter l : w) {
      n += is_primed(l) ? 1 : 0;
    }
    return n;
  }

  std::string format_word(std::span<Letter const> w, std::size_t rank) {
    if (w.empty()) {
      return "()";
    }
    std::string out;
    bool const compact = rank <= 9;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!compact && i > 0) {
        out += ',';
      }
      out += std::to_string(gen_of(w[i]) + 1);
      if (is_primed(w[i])) {
        out += '\'';
      }
    }
    return out;
  }

  PrimedWord parse_word(std::string_view text, std::size_t rank) {
    PrimedWord out;
    if (text.empty() || text == "()") {
      return out;
    }
    bool const has_comma = text.find(',') != std::string_view::npos;
    bool const compact   = rank <= 9 && !has_comma;
    std::size_t i        = 0;
    while (i < text.size()) {
      char c = text[i];
      if (c == ',' || c == ' ') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("unexpected character '" + std::string(1, c)
                         + "' in word \"" + std::string(text) + "\"");
      }
      std::size_t value = 0;
      if (compact) {
        value = static_cast<std::size_t>(c - '0');
        ++i;
      } else {
        while (i < text.size()
               && std::isdigit(static_cast<unsigned char>(text[i]))) {
          value = value * 10 + static_cast<std::size_t>(text[i] - '0');
          ++i;
        }
      }
      if (value < 1 || value > rank) {
        throw ParseError("letter " + std::to_string(value)
                         + " out of range for rank " + std::to_string(rank));
      }
      Letter l = static_cast<Letter>(value - 1);
      if (i < text.size() && text[i] == '\'') {
        l = primed(l);
        ++i;
      }
      out.push_back(l);
    }
    return out;
  }

}  // namespace coxword
