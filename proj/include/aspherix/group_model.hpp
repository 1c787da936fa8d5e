#pragma once

#include "aspherix/errors.hpp"
#include "aspherix/word.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aspherix {

/// Canonical normal form of a group element. For free models the code is the
/// reduced word with letter x_i^s stored as s*(i+1); for abelian models it is
/// the exponent vector (free part first, torsion part reduced into [0, d)).
struct GroupElement {
  std::vector<std::int64_t> code;

  friend bool operator==(GroupElement const&, GroupElement const&) = default;
  friend auto operator<=>(GroupElement const&, GroupElement const&) = default;
};

enum class ModelKind { free, free_abelian, abelian };

/// A group with solvable word problem via canonical normal forms:
/// free groups and finitely generated abelian groups. Cheap to copy.
class GroupModel {
 public:
  static GroupModel free(std::size_t rank, std::vector<std::string> names = {}) {
    return GroupModel(ModelKind::free, rank, {}, std::move(names));
  }

  static GroupModel free_abelian(std::size_t rank) { return GroupModel(ModelKind::free_abelian, rank, {}, {}); }

  // Z^rank + Z/d_1 + ... with d_i >= 2 and d_i | d_{i+1}.
  static GroupModel abelian(std::size_t rank, std::vector<std::int64_t> torsion) {
    for (std::size_t i = 0; i < torsion.size(); ++i) {
      if (torsion[i] < 2) throw std::invalid_argument("torsion orders must be at least 2");
      if (i > 0 && torsion[i] % torsion[i - 1] != 0)
        throw std::invalid_argument("torsion orders must form a divisibility chain");
    }
    if (torsion.empty()) return free_abelian(rank);
    return GroupModel(ModelKind::abelian, rank, std::move(torsion), {});
  }

  [[nodiscard]] ModelKind kind() const noexcept { return impl_->kind; }
  [[nodiscard]] std::size_t rank() const noexcept { return impl_->rank; }
  [[nodiscard]] std::vector<std::int64_t> const& torsion() const noexcept { return impl_->torsion; }
  [[nodiscard]] std::vector<std::string> const& names() const noexcept { return impl_->names; }
  [[nodiscard]] bool is_commutative() const noexcept { return kind() != ModelKind::free || rank() <= 1; }

  // Number of standard generators: rank for free groups, rank + #torsion otherwise.
  [[nodiscard]] std::size_t generator_count() const noexcept { return impl_->rank + impl_->torsion.size(); }

  [[nodiscard]] GroupElement identity() const {
    if (kind() == ModelKind::free) return {};
    return {std::vector<std::int64_t>(generator_count(), 0)};
  }

  [[nodiscard]] bool is_identity(GroupElement const& g) const {
    for (auto c : g.code)
      if (c != 0) return false;
    return true;
  }

  [[nodiscard]] GroupElement generator(std::size_t i, int sign = 1) const {
    if (i >= generator_count()) throw std::out_of_range("generator index out of range");
    if (kind() == ModelKind::free) return {{encode(Letter{i, sign})}};
    GroupElement g = identity();
    g.code[i] = sign;
    return normalize(std::move(g));
  }

  [[nodiscard]] GroupElement multiply(GroupElement const& a, GroupElement const& b) const {
    if (kind() == ModelKind::free) {
      GroupElement out = a;
      for (auto c : b.code) {
        if (!out.code.empty() && out.code.back() == -c) {
          out.code.pop_back();
        } else {
          out.code.push_back(c);
        }
      }
      return out;
    }
    GroupElement out = a;
    for (std::size_t i = 0; i < out.code.size(); ++i) out.code[i] += b.code[i];
    return normalize(std::move(out));
  }

  [[nodiscard]] GroupElement inverse(GroupElement const& g) const {
    GroupElement out;
    if (kind() == ModelKind::free) {
      out.code.assign(g.code.rbegin(), g.code.rend());
      for (auto& c : out.code) c = -c;
      return out;
    }
    out = g;
    for (auto& c : out.code) c = -c;
    return normalize(std::move(out));
  }

  [[nodiscard]] GroupElement power(GroupElement const& g, long k) const {
    GroupElement base = k < 0 ? inverse(g) : g;
    GroupElement out = identity();
    for (long n = 0; n < (k < 0 ? -k : k); ++n) out = multiply(out, base);
    return out;
  }

  /// Image of a word whose letters name this model's standard generators.
  [[nodiscard]] GroupElement evaluate(Word const& w) const {
    if (w.generator_bound() > generator_count()) throw std::out_of_range("word uses a generator outside the model");
    if (kind() == ModelKind::free) {
      GroupElement out;
      out.code.reserve(w.size());
      for (auto const& l : w) out.code.push_back(encode(l));
      return out;
    }
    GroupElement out = identity();
    for (auto const& l : w) out.code[l.generator] += l.sign;
    return normalize(std::move(out));
  }

  /// Validates and canonicalizes a raw code (reduces free words, torsion mod d).
  [[nodiscard]] GroupElement from_code(std::vector<std::int64_t> code) const {
    if (kind() == ModelKind::free) {
      std::vector<Letter> letters;
      letters.reserve(code.size());
      for (auto c : code) {
        if (c == 0) throw std::invalid_argument("free normal form contains a zero letter");
        auto gen = static_cast<std::size_t>((c < 0 ? -c : c) - 1);
        if (gen >= rank()) throw std::out_of_range("generator index out of range");
        letters.push_back(Letter{gen, c < 0 ? -1 : 1});
      }
      return evaluate(Word(std::move(letters)));
    }
    if (code.size() != generator_count()) throw std::invalid_argument("exponent vector has the wrong length");
    return normalize(GroupElement{std::move(code)});
  }

  /// Free-model element as a word (free models only).
  [[nodiscard]] Word to_word(GroupElement const& g) const {
    if (kind() != ModelKind::free) throw std::logic_error("to_word needs a free model");
    std::vector<Letter> letters;
    letters.reserve(g.code.size());
    for (auto c : g.code) letters.push_back(decode(c));
    return Word(std::move(letters));
  }

  /// Generator names used to render free normal forms.
  [[nodiscard]] std::vector<std::string> display_names() const {
    if (!names().empty()) return names();
    return default_generator_names(generator_count());
  }

  [[nodiscard]] std::string describe() const {
    switch (kind()) {
      case ModelKind::free:
        return "free(" + std::to_string(rank()) + ")";
      case ModelKind::free_abelian:
        return "free_abelian(" + std::to_string(rank()) + ")";
      case ModelKind::abelian: {
        std::string s = "abelian(" + std::to_string(rank()) + ";";
        for (std::size_t i = 0; i < torsion().size(); ++i) s += (i ? "," : "") + std::to_string(torsion()[i]);
        return s + ")";
      }
    }
    return {};
  }

  // Models compare by group structure; display names are cosmetic.
  friend bool operator==(GroupModel const& a, GroupModel const& b) {
    return a.impl_ == b.impl_ ||
           (a.kind() == b.kind() && a.rank() == b.rank() && a.torsion() == b.torsion());
  }

 private:
  struct Impl {
    ModelKind kind;
    std::size_t rank;
    std::vector<std::int64_t> torsion;
    std::vector<std::string> names;
  };

  GroupModel(ModelKind kind, std::size_t rank, std::vector<std::int64_t> torsion, std::vector<std::string> names) {
    if (!names.empty() && names.size() != rank) throw std::invalid_argument("name count does not match rank");
    impl_ = std::make_shared<Impl const>(Impl{kind, rank, std::move(torsion), std::move(names)});
  }

  static std::int64_t encode(Letter l) { return l.sign * static_cast<std::int64_t>(l.generator + 1); }
  static Letter decode(std::int64_t c) {
    return {static_cast<std::size_t>((c < 0 ? -c : c) - 1), c < 0 ? -1 : 1};
  }

  GroupElement normalize(GroupElement g) const {
    auto const& t = torsion();
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto& c = g.code[rank() + i];
      c %= t[i];
      if (c < 0) c += t[i];
    }
    return g;
  }

  std::shared_ptr<Impl const> impl_;
};

/// Homomorphism from a free model into `target` sending generator i to images[i].
class FreeHomomorphism {
 public:
  FreeHomomorphism(GroupModel source, GroupModel target, std::vector<GroupElement> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (source_.kind() != ModelKind::free) throw std::invalid_argument("homomorphism source must be free");
    if (images_.size() != source_.rank()) throw std::invalid_argument("need one image per source generator");
  }

  // Abelianization of a free group onto Z^rank.
  static FreeHomomorphism abelianization(GroupModel const& source) {
    GroupModel target = GroupModel::free_abelian(source.rank());
    std::vector<GroupElement> images;
    for (std::size_t i = 0; i < source.rank(); ++i) images.push_back(target.generator(i));
    return {source, target, std::move(images)};
  }

  [[nodiscard]] GroupModel const& source() const noexcept { return source_; }
  [[nodiscard]] GroupModel const& target() const noexcept { return target_; }

  [[nodiscard]] GroupElement operator()(GroupElement const& g) const {
    GroupElement out = target_.identity();
    for (auto c : g.code) {
      auto gen = static_cast<std::size_t>((c < 0 ? -c : c) - 1);
      out = target_.multiply(out, c < 0 ? target_.inverse(images_.at(gen)) : images_.at(gen));
    }
    return out;
  }

 private:
  GroupModel source_;
  GroupModel target_;
  std::vector<GroupElement> images_;
};

}  // namespace aspherix
