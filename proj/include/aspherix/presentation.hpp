#pragma once

#include "aspherix/errors.hpp"
#include "aspherix/word.hpp"

#include <cstddef>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aspherix {

/// A finite presentation <generators | relators>. Relators are kept freely
/// reduced and in the given order; empty relators and duplicates are legal.
class Presentation {
 public:
  Presentation() = default;

  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
      : names_(std::move(generator_names)), relators_(std::move(relators)) {
    std::set<std::string> seen;
    for (auto const& n : names_) {
      if (!is_identifier(n)) throw std::invalid_argument("invalid generator name '" + n + "'");
      if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name '" + n + "'");
    }
    for (auto const& r : relators_)
      if (r.generator_bound() > names_.size())
        throw std::out_of_range("relator references a generator outside the alphabet");
  }

  [[nodiscard]] std::vector<std::string> const& generator_names() const noexcept { return names_; }
  [[nodiscard]] std::vector<Word> const& relators() const noexcept { return relators_; }
  [[nodiscard]] std::size_t generator_count() const noexcept { return names_.size(); }
  [[nodiscard]] std::size_t relator_count() const noexcept { return relators_.size(); }
  [[nodiscard]] Word const& relator(std::size_t j) const { return relators_.at(j); }

  // Euler characteristic of the presentation 2-complex: 1 - #gens + #rels.
  [[nodiscard]] long euler_characteristic() const noexcept {
    return 1 - static_cast<long>(names_.size()) + static_cast<long>(relators_.size());
  }

  [[nodiscard]] Presentation cyclically_reduced() const {
    std::vector<Word> rels;
    rels.reserve(relators_.size());
    for (auto const& r : relators_) rels.push_back(r.cyclically_reduced());
    return {names_, std::move(rels)};
  }

  friend bool operator==(Presentation const&, Presentation const&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

// ---------------------------------------------------------------------------
// Text format:
//
//   # comment
//   gens: a b
//   rel: a b A B
//   rel:            <- empty relator

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline Presentation parse_presentation(std::string_view text) {
  std::vector<std::string> names;
  std::vector<Word> relators;
  bool have_gens = false;
  std::size_t line_no = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t indent = 0;
    while (indent < line.size() && std::isspace(static_cast<unsigned char>(line[indent]))) ++indent;
    if (detail::trim(line).empty()) {
      if (end == text.size()) break;
      continue;
    }

    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'gens:' or 'rel:'", line_no, indent + 1);
    std::string_view key = detail::trim(line.substr(0, colon));
    std::string_view body = line.substr(colon + 1);

    if (key == "gens") {
      if (have_gens) throw ParseError("duplicate 'gens:' line", line_no, indent + 1);
      if (!relators.empty()) throw ParseError("'gens:' must precede every 'rel:'", line_no, indent + 1);
      have_gens = true;
      std::set<std::string> seen;
      std::size_t pos = 0;
      while (pos < body.size()) {
        while (pos < body.size() && (std::isspace(static_cast<unsigned char>(body[pos])) || body[pos] == ','))
          ++pos;
        std::size_t tok = pos;
        while (pos < body.size() && !std::isspace(static_cast<unsigned char>(body[pos])) && body[pos] != ',')
          ++pos;
        if (tok == pos) break;
        std::string name(body.substr(tok, pos - tok));
        std::size_t column = colon + 2 + tok;
        if (!is_identifier(name)) throw ParseError("invalid generator name '" + name + "'", line_no, column);
        if (!seen.insert(name).second)
          throw ParseError("duplicate generator name '" + name + "'", line_no, column);
        names.push_back(std::move(name));
      }
    } else if (key == "rel") {
      if (!have_gens) throw ParseError("'rel:' before 'gens:'", line_no, indent + 1);
      relators.push_back(parse_word(body, names, line_no, colon + 1));
    } else {
      throw ParseError("unknown directive '" + std::string(key) + "'", line_no, indent + 1);
    }
    if (end == text.size()) break;
  }
  if (!have_gens) throw ParseError("missing 'gens:' line", line_no == 0 ? 1 : line_no, 1);
  return {std::move(names), std::move(relators)};
}

/// Canonical, byte-stable rendering; parse_presentation(render_presentation(p)) == p.
inline std::string render_presentation(Presentation const& p) {
  std::string out = "gens:";
  for (auto const& n : p.generator_names()) out += " " + n;
  out += '\n';
  for (auto const& r : p.relators()) {
    std::string w = render_word(r, p.generator_names());
    out += w.empty() ? "rel:\n" : "rel: " + w + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tietze moves.

/// k elementary expansions: new generator g_i together with the relator g_i.
inline Presentation tietze_stabilize(Presentation const& p, std::size_t k) {
  std::vector<std::string> names = p.generator_names();
  std::vector<Word> rels = p.relators();
  std::set<std::string> used(names.begin(), names.end());
  std::size_t suffix = 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::string name;
    do {
      name = "g" + std::to_string(suffix++);
    } while (used.contains(name));
    used.insert(name);
    rels.push_back(Word::generator(names.size()));
    names.push_back(std::move(name));
  }
  return {std::move(names), std::move(rels)};
}

/// Appends k empty relators (trivially attached 2-spheres).
inline Presentation add_trivial_relator(Presentation const& p, std::size_t k) {
  std::vector<Word> rels = p.relators();
  rels.insert(rels.end(), k, Word{});
  return {p.generator_names(), std::move(rels)};
}

/// r_j <- r_j * (w r_k w^-1)^sign, freely reduced. Indices are 0-based.
inline Presentation tietze_transvect(Presentation const& p, std::size_t j, std::size_t k, Word const& w, int sign) {
  if (j >= p.relator_count() || k >= p.relator_count()) throw std::out_of_range("relator index out of range");
  if (j == k) throw std::invalid_argument("transvection needs two distinct relators");
  if (sign != 1 && sign != -1) throw std::invalid_argument("transvection sign must be +1 or -1");
  if (w.generator_bound() > p.generator_count())
    throw std::out_of_range("conjugator references a generator outside the alphabet");
  Word conj = w * p.relator(k) * w.inverse();
  std::vector<Word> rels = p.relators();
  rels[j] = rels[j] * (sign > 0 ? conj : conj.inverse());
  return {p.generator_names(), std::move(rels)};
}

/// One factor w r_k^sign w^-1 of a product-of-conjugates certificate.
struct ConjugateFactor {
  Word conjugator;
  std::size_t relator = 0;
  int sign = 1;
};

/// Adds `relator` after checking that the certificate multiplies out to it in
/// the free group. An empty certificate certifies only the empty word.
inline Presentation add_consequence_relator(Presentation const& p, Word const& relator,
                                            std::vector<ConjugateFactor> const& certificate) {
  Word product;
  for (auto const& f : certificate) {
    if (f.relator >= p.relator_count()) throw std::out_of_range("certificate relator index out of range");
    Word r = f.sign > 0 ? p.relator(f.relator) : p.relator(f.relator).inverse();
    product = product * f.conjugator * r * f.conjugator.inverse();
  }
  if (product != relator) throw Error("certificate does not multiply out to the proposed relator");
  std::vector<Word> rels = p.relators();
  rels.push_back(relator);
  return {p.generator_names(), std::move(rels)};
}

}  // namespace aspherix
