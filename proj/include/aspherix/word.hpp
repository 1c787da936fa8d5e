#pragma once

#include "aspherix/errors.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aspherix {

/// One signed generator letter x_i^{+1} or x_i^{-1}.
struct Letter {
  std::size_t generator = 0;
  int sign = 1;

  [[nodiscard]] Letter inverse() const noexcept { return {generator, -sign}; }
  [[nodiscard]] bool cancels(Letter const& o) const noexcept {
    return generator == o.generator && sign == -o.sign;
  }
  friend auto operator<=>(Letter const&, Letter const&) = default;
};

/// Freely reduce a letter sequence with a single stack pass.
inline std::vector<Letter> free_reduce_letters(std::span<Letter const> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (auto const& l : raw) {
    if (!out.empty() && out.back().cancels(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

/// A freely reduced word in a free group. Construction always reduces.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(free_reduce_letters(letters)) {}
  Word(std::initializer_list<Letter> letters)
      : letters_(free_reduce_letters(std::span<Letter const>(letters.begin(), letters.size()))) {}

  static Word generator(std::size_t i, int sign = 1) { return Word({Letter{i, sign}}); }

  [[nodiscard]] std::vector<Letter> const& letters() const noexcept { return letters_; }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] auto begin() const noexcept { return letters_.begin(); }
  [[nodiscard]] auto end() const noexcept { return letters_.end(); }
  Letter const& operator[](std::size_t i) const { return letters_[i]; }

  [[nodiscard]] Word inverse() const {
    std::vector<Letter> inv;
    inv.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
    Word w;
    w.letters_ = std::move(inv);
    return w;
  }

  // 1 + largest generator index used, 0 for the empty word.
  [[nodiscard]] std::size_t generator_bound() const noexcept {
    std::size_t b = 0;
    for (auto const& l : letters_) b = std::max(b, l.generator + 1);
    return b;
  }

  // Signed number of occurrences of generator i.
  [[nodiscard]] long exponent_sum(std::size_t i) const noexcept {
    long s = 0;
    for (auto const& l : letters_)
      if (l.generator == i) s += l.sign;
    return s;
  }

  // Word with the cyclically cancelling prefix/suffix pairs removed.
  [[nodiscard]] Word cyclically_reduced() const {
    std::size_t lo = 0, hi = letters_.size();
    while (hi - lo >= 2 && letters_[lo].cancels(letters_[hi - 1])) {
      ++lo;
      --hi;
    }
    Word w;
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                      letters_.begin() + static_cast<std::ptrdiff_t>(hi));
    return w;
  }

  [[nodiscard]] Word power(long k) const {
    Word base = k < 0 ? inverse() : *this;
    std::vector<Letter> raw;
    for (long n = 0; n < (k < 0 ? -k : k); ++n)
      raw.insert(raw.end(), base.letters_.begin(), base.letters_.end());
    return Word(std::move(raw));
  }

  friend Word operator*(Word const& a, Word const& b) {
    std::vector<Letter> out = a.letters_;
    for (auto const& l : b.letters_) {
      if (!out.empty() && out.back().cancels(l)) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    Word w;
    w.letters_ = std::move(out);
    return w;
  }

  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const&, Word const&) = default;

 private:
  std::vector<Letter> letters_;
};

inline Word free_reduce(std::span<Letter const> raw) { return Word(std::vector<Letter>(raw.begin(), raw.end())); }

// ---------------------------------------------------------------------------
// Word syntax.
//
// Compact syntax applies when every generator name is one lowercase letter:
// `abAB` or `a b A B`, uppercase meaning inverse. Any alphabet also accepts the
// verbose syntax: identifiers separated by spaces or `*`, each optionally
// followed by `^k` for an integer k (so `x1^-1`). `1` denotes the empty word.

inline bool is_compact_alphabet(std::span<std::string const> names) {
  return std::all_of(names.begin(), names.end(), [](std::string const& n) {
    return n.size() == 1 && std::islower(static_cast<unsigned char>(n[0]));
  });
}

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

namespace detail {

inline std::ptrdiff_t find_name(std::span<std::string const> names, std::string_view token) {
  auto it = std::find(names.begin(), names.end(), token);
  return it == names.end() ? -1 : std::distance(names.begin(), it);
}

}  // namespace detail

/// Parse a word over the given alphabet. `line` and `column_offset` only
/// decorate error positions.
inline Word parse_word(std::string_view text, std::span<std::string const> names, std::size_t line = 1,
                       std::size_t column_offset = 0) {
  bool const compact = is_compact_alphabet(names);
  std::vector<Letter> raw;
  std::size_t pos = 0;
  auto fail = [&](std::string const& msg) -> ParseError { return {msg, line, column_offset + pos + 1}; };

  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++pos;
      continue;
    }
    if (c == '1') {
      ++pos;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) throw fail(std::string("unexpected character '") + c + "'");

    std::size_t start = pos;
    if (compact) {
      ++pos;
    } else {
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    }
    std::string token(text.substr(start, pos - start));
    int sign = 1;
    std::ptrdiff_t gen = detail::find_name(names, token);
    if (gen < 0 && token.size() == 1 && std::isupper(static_cast<unsigned char>(token[0]))) {
      std::string lower(1, static_cast<char>(std::tolower(static_cast<unsigned char>(token[0]))));
      gen = detail::find_name(names, lower);
      sign = -1;
    }
    if (gen < 0) {
      pos = start;
      throw fail("unknown generator '" + token + "'");
    }

    long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t num_start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      std::size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == digits) throw fail("expected integer exponent after '^'");
      exponent = std::stol(std::string(text.substr(num_start, pos - num_start)));
    }
    Letter letter{static_cast<std::size_t>(gen), exponent < 0 ? -sign : sign};
    for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) raw.push_back(letter);
  }
  return Word(std::move(raw));
}

/// Canonical rendering: `a b A B` for compact alphabets, `x y^-1` otherwise,
/// the empty string for the empty word.
inline std::string render_word(Word const& w, std::span<std::string const> names) {
  bool const compact = is_compact_alphabet(names);
  std::string out;
  for (auto const& l : w) {
    if (!out.empty()) out += ' ';
    std::string const& name = names[l.generator];
    if (l.sign > 0) {
      out += name;
    } else if (compact) {
      out += static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    } else {
      out += name + "^-1";
    }
  }
  return out;
}

/// `a, b, ...` up to 26 generators, `x1, x2, ...` beyond.
inline std::vector<std::string> default_generator_names(std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    names.push_back(count <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1));
  return names;
}

}  // namespace aspherix
