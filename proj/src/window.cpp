#include "coxword/window.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "coxword/error.hpp"

namespace coxword {

  namespace {

    std::int64_t floor_div(std::int64_t a, std::int64_t b) {
      std::int64_t q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }

    std::int64_t mod(std::int64_t a, std::int64_t b) {
      return a - floor_div(a, b) * b;
    }

  }  // namespace

  Window::Window(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    auto const n = static_cast<std::int64_t>(entries_.size());
    if (n == 0) {
      throw InvalidWindow("empty window");
    }
    std::vector<bool> residues(static_cast<std::size_t>(n), false);
    std::int64_t      sum = 0;
    for (std::int64_t v : entries_) {
      auto const r = static_cast<std::size_t>(mod(v, n));
      if (residues[r]) {
        throw InvalidWindow("window entries " + to_string()
                            + " are not distinct mod " + std::to_string(n));
      }
      residues[r] = true;
      sum += v;
    }
    if (sum != n * (n + 1) / 2) {
      throw InvalidWindow("window " + to_string() + " does not sum to "
                          + std::to_string(n * (n + 1) / 2));
    }
  }

  Window Window::identity(std::size_t n) {
    std::vector<std::int64_t> e(n);
    std::iota(e.begin(), e.end(), 1);
    return Window(std::move(e));
  }

  Window Window::from_shifted(std::vector<std::int64_t> const& seq) {
    auto const n = static_cast<std::int64_t>(seq.size());
    if (n == 0) {
      throw InvalidWindow("empty window");
    }
    std::int64_t const sum    = std::accumulate(seq.begin(), seq.end(), std::int64_t{0});
    std::int64_t const excess = sum - n * (n + 1) / 2;
    if (excess % n != 0) {
      throw InvalidWindow("sequence entries are not distinct mod n");
    }
    std::int64_t const        d = excess / n;
    std::vector<std::int64_t> e(static_cast<std::size_t>(n));
    // seq[i] = w(i + 1 + d); recover w(j) for j in [1, n].
    for (std::int64_t i = 0; i < n; ++i) {
      std::int64_t const pos = i + 1 + d;
      std::int64_t const k   = floor_div(pos - 1, n);
      std::int64_t const j   = pos - k * n;
      e[static_cast<std::size_t>(j - 1)] = seq[static_cast<std::size_t>(i)] - k * n;
    }
    return Window(std::move(e));
  }

  Window Window::parse(std::string_view text) {
    std::vector<std::int64_t> e;
    std::size_t               i = 0;
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    skip();
    if (i >= text.size() || text[i] != '[') {
      throw ParseError("window must start with '['");
    }
    ++i;
    while (true) {
      skip();
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("bad window \"" + std::string(text) + "\"");
      }
      std::int64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      e.push_back(neg ? -v : v);
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
      }
    }
    skip();
    if (i != text.size()) {
      throw ParseError("trailing characters after window");
    }
    return Window(std::move(e));
  }

  Window Window::from_cycles(std::string_view text, std::size_t n) {
    std::vector<std::int64_t> e(n);
    std::iota(e.begin(), e.end(), 1);
    std::vector<bool> used(n + 1, false);
    std::size_t       i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      if (text[i] != '(') {
        throw ParseError("bad cycle notation \"" + std::string(text) + "\"");
      }
      ++i;
      std::vector<std::int64_t> cycle;
      while (i < text.size() && text[i] != ')') {
        if (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
          throw ParseError("bad cycle notation \"" + std::string(text) + "\"");
        }
        std::int64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + (text[i] - '0');
          ++i;
        }
        if (v < 1 || static_cast<std::size_t>(v) > n || used[static_cast<std::size_t>(v)]) {
          throw ParseError("cycle entry " + std::to_string(v)
                           + " out of range or repeated");
        }
        used[static_cast<std::size_t>(v)] = true;
        cycle.push_back(v);
      }
      if (i >= text.size()) {
        throw ParseError("unterminated cycle");
      }
      ++i;
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        e[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
      }
    }
    return Window(std::move(e));
  }

  std::int64_t Window::operator()(std::int64_t i) const {
    auto const         n = static_cast<std::int64_t>(entries_.size());
    std::int64_t const k = floor_div(i - 1, n);
    return entries_[static_cast<std::size_t>(i - 1 - k * n)] + k * n;
  }

  Window Window::compose(Window const& other) const {
    std::vector<std::int64_t> e(other.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = (*this)(other.entries_[i]);
    }
    Window w;
    w.entries_ = std::move(e);
    return w;
  }

  Window Window::inverse() const {
    auto const                n = static_cast<std::int64_t>(entries_.size());
    std::vector<std::int64_t> e(entries_.size());
    for (std::int64_t r = 1; r <= n; ++r) {
      std::int64_t const v = entries_[static_cast<std::size_t>(r - 1)];
      std::int64_t const k = floor_div(v - 1, n);
      std::int64_t const q = v - k * n;
      e[static_cast<std::size_t>(q - 1)] = r - k * n;
    }
    Window w;
    w.entries_ = std::move(e);
    return w;
  }

  Window Window::times_gen(std::size_t i) const {
    std::size_t const n = entries_.size();
    Window            w = *this;
    if (i < n) {
      std::swap(w.entries_[i - 1], w.entries_[i]);
    } else {
      auto const         nn    = static_cast<std::int64_t>(n);
      std::int64_t const first = entries_[0];
      std::int64_t const last  = entries_[n - 1];
      w.entries_[n - 1]        = first + nn;
      w.entries_[0]            = last - nn;
    }
    return w;
  }

  Window Window::gen_times(std::size_t i) const {
    auto const n  = static_cast<std::int64_t>(entries_.size());
    auto const ii = static_cast<std::int64_t>(i);
    Window     w  = *this;
    for (auto& v : w.entries_) {
      std::int64_t const r = mod(v - ii, n);
      if (r == 0) {
        ++v;
      } else if (r == 1) {
        --v;
      }
    }
    return w;
  }

  std::size_t Window::length() const {
    Window            w = *this;
    std::size_t       len = 0;
    std::size_t const n   = size();
    bool              progress = true;
    while (progress) {
      progress = false;
      for (std::size_t i = 1; i <= n; ++i) {
        if (w.has_descent(i)) {
          w = w.times_gen(i);
          ++len;
          progress = true;
          break;
        }
      }
    }
    return len;
  }

  bool Window::is_finite_permutation() const noexcept {
    auto const n = static_cast<std::int64_t>(entries_.size());
    return std::all_of(entries_.begin(), entries_.end(), [n](std::int64_t v) {
      return v >= 1 && v <= n;
    });
  }

  std::string Window::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(entries_[i]);
    }
    out += ']';
    return out;
  }

}  // namespace coxword
