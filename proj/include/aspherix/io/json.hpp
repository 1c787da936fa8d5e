#pragma once

// JSON and CSV encodings for matrices, group models, group-ring matrices and
// analysis reports. Output uses ordered_json so dumps are byte-stable.

#include "aspherix/errors.hpp"
#include "aspherix/group_ring.hpp"
#include "aspherix/homology.hpp"
#include "aspherix/presentation.hpp"
#include "aspherix/smith.hpp"
#include "aspherix/trace_rank.hpp"
#include "aspherix/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace aspherix::io {

using Json = nlohmann::ordered_json;

// --- numbers ---------------------------------------------------------------

/// JSON number when it fits in int64, decimal string otherwise.
inline Json integer_to_json(Integer const& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline Integer parse_integer(std::string_view s) {
  std::string t(s);
  std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (i == t.size()) throw ParseError("empty integer literal");
  for (std::size_t k = i; k < t.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(t[k]))) throw ParseError("invalid integer literal '" + t + "'");
  if (t[0] == '+') t.erase(0, 1);
  return Integer(t);
}

template <class J>
Integer integer_from_json(J const& j) {
  if (j.is_number_integer()) return Integer(j.template get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.template get<std::string>());
  throw ParseError("expected an integer, got " + std::string(j.type_name()));
}

template <class J>
Rational rational_from_json(J const& j) {
  if (j.is_string()) {
    auto s = j.template get<std::string>();
    if (auto slash = s.find('/'); slash != std::string::npos) {
      Integer den = parse_integer(std::string_view(s).substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator");
      return Rational(parse_integer(std::string_view(s).substr(0, slash)), den);
    }
  }
  return Rational(integer_from_json(j));
}

inline Json rational_to_json(Rational const& q) {
  if (denominator(q) == 1) return integer_to_json(numerator(q));
  return numerator(q).str() + "/" + denominator(q).str();
}

// --- integer matrices --------------------------------------------------------

inline Json to_json(IntMatrix const& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Accepts [[...], ...] or {"rows": r, "cols": c, "entries": [[...], ...]}.
template <class J>
IntMatrix int_matrix_from_json(J const& j) {
  J const* entries = &j;
  std::size_t rows = 0, cols = 0;
  bool explicit_shape = false;
  if (j.is_object()) {
    if (!j.contains("entries")) throw ParseError("matrix object lacks \"entries\"");
    entries = &j.at("entries");
    if (j.contains("rows") && j.contains("cols")) {
      rows = j.at("rows").template get<std::size_t>();
      cols = j.at("cols").template get<std::size_t>();
      explicit_shape = true;
    }
  }
  if (!entries->is_array()) throw ParseError("matrix entries must be an array of rows");
  if (!explicit_shape) {
    rows = entries->size();
    cols = rows ? entries->at(0).size() : 0;
  }
  if (entries->size() != rows) throw ShapeError("matrix row count does not match \"rows\"");
  IntMatrix m(rows, cols, Integer(0));
  for (std::size_t i = 0; i < rows; ++i) {
    auto const& row = entries->at(i);
    if (!row.is_array() || row.size() != cols) throw ShapeError("ragged matrix row " + std::to_string(i));
    for (std::size_t j2 = 0; j2 < cols; ++j2) m(i, j2) = integer_from_json(row.at(j2));
  }
  return m;
}

/// Comma- or whitespace-separated integers, one matrix row per line; `#` comments.
inline IntMatrix int_matrix_from_csv(std::string_view text) {
  std::vector<std::vector<Integer>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    for (auto& c : line)
      if (c == ',' || c == ';' || c == '\t' || c == '\r') c = ' ';
    std::istringstream fields(line);
    std::vector<Integer> row;
    std::string tok;
    while (fields >> tok) {
      try {
        row.push_back(parse_integer(tok));
      } catch (ParseError const& e) {
        throw ParseError(e.what(), line_no, 1);
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()),
                       line_no, 1);
    rows.push_back(std::move(row));
  }
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline std::string int_matrix_to_csv(IntMatrix const& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + m(i, j).str();
    out += '\n';
  }
  return out;
}

// --- group models --------------------------------------------------------------

inline Json to_json(GroupModel const& g) {
  Json j;
  switch (g.kind()) {
    case ModelKind::free:
      j["kind"] = "free";
      j["rank"] = g.rank();
      if (!g.names().empty()) j["names"] = g.names();
      break;
    case ModelKind::free_abelian:
      j["kind"] = "free_abelian";
      j["rank"] = g.rank();
      break;
    case ModelKind::abelian:
      j["kind"] = "abelian";
      j["rank"] = g.rank();
      j["torsion"] = g.torsion();
      break;
  }
  return j;
}

template <class J>
GroupModel model_from_json(J const& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("rank")) throw ParseError("model needs \"kind\" and \"rank\"");
  auto kind = j.at("kind").template get<std::string>();
  auto rank = j.at("rank").template get<std::size_t>();
  if (kind == "free") {
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").template get<std::vector<std::string>>();
    return GroupModel::free(rank, std::move(names));
  }
  if (kind == "free_abelian") return GroupModel::free_abelian(rank);
  if (kind == "abelian") {
    std::vector<std::int64_t> torsion;
    if (j.contains("torsion")) torsion = j.at("torsion").template get<std::vector<std::int64_t>>();
    return GroupModel::abelian(rank, std::move(torsion));
  }
  throw ParseError("unsupported group model kind '" + kind + "' (free, free_abelian, abelian)");
}

/// `free:N`, `free_abelian:N`, `abelian:N:d1,d2,...`.
inline GroupModel parse_model_spec(std::string_view spec) {
  std::string s(spec);
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("model spec must look like kind:rank");
  std::string kind = s.substr(0, colon);
  std::string rest = s.substr(colon + 1);
  std::string torsion_part;
  if (auto c2 = rest.find(':'); c2 != std::string::npos) {
    torsion_part = rest.substr(c2 + 1);
    rest = rest.substr(0, c2);
  }
  auto to_count = [&](std::string const& t) -> std::size_t {
    Integer v = parse_integer(t);
    if (v < 0 || v > 1'000'000) throw ParseError("model rank out of range: " + t);
    return static_cast<std::size_t>(v);
  };
  std::size_t rank = to_count(rest);
  if (kind == "free" && torsion_part.empty()) return GroupModel::free(rank);
  if (kind == "free_abelian" && torsion_part.empty()) return GroupModel::free_abelian(rank);
  if (kind == "abelian") {
    std::vector<std::int64_t> torsion;
    std::stringstream ss(torsion_part);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) torsion.push_back(static_cast<std::int64_t>(to_count(tok)));
    try {
      return GroupModel::abelian(rank, std::move(torsion));
    } catch (std::invalid_argument const& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unsupported model spec '" + s + "'");
}

// --- group elements and group-ring matrices -----------------------------------

/// Free normal forms as words in presentation syntax, abelian ones as exponent vectors.
inline Json element_to_json(GroupModel const& model, GroupElement const& g) {
  if (model.kind() == ModelKind::free) return render_word(model.to_word(g), model.display_names());
  return g.code;
}

template <class J>
GroupElement element_from_json(GroupModel const& model, J const& j) {
  if (model.kind() == ModelKind::free) {
    if (!j.is_string()) throw ParseError("free-group normal forms are word strings");
    auto names = model.display_names();
    return model.evaluate(parse_word(j.template get<std::string>(), names));
  }
  if (!j.is_array()) throw ParseError("abelian normal forms are exponent vectors");
  std::vector<std::int64_t> code;
  for (auto const& e : j) code.push_back(e.template get<std::int64_t>());
  try {
    return model.from_code(std::move(code));
  } catch (std::invalid_argument const& e) {
    throw ParseError(e.what());
  }
}

inline Json term_to_json(GroupModel const& model, GroupElement const& g, Integer const& c) {
  return Json::array({element_to_json(model, g), integer_to_json(c)});
}

inline Json term_to_json(GroupModel const& model, GroupElement const& g, GaussianRational const& c) {
  Json t = Json::array({element_to_json(model, g), integer_to_json(numerator(c.real()))});
  if (denominator(c.real()) != 1 || !c.is_real()) t.push_back(integer_to_json(denominator(c.real())));
  if (!c.is_real()) t.push_back(rational_to_json(c.imag()));
  return t;
}

template <Scalar S>
Json element_terms_to_json(GroupRingElement<S> const& x) {
  Json terms = Json::array();
  for (auto const& [g, c] : x.terms()) terms.push_back(term_to_json(x.model(), g, c));
  return terms;
}

template <Scalar S>
Json to_json(GroupRingMatrix<S> const& m, bool lifted = false) {
  Json j;
  j["model"] = to_json(m.model());
  if (lifted) j["lifted"] = true;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(element_terms_to_json(m(i, k)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

struct ParsedGroupRingMatrix {
  GroupRingMatrix<GaussianRational> matrix;
  bool lifted = false;
};

/// Reads the group-ring matrix document. `fallback_model` is used when the
/// document has no "model" (or must agree with it when both are present).
template <class J>
ParsedGroupRingMatrix group_ring_matrix_from_json(J const& j, std::optional<GroupModel> const& fallback_model = {}) {
  if (!j.is_object()) throw ParseError("group-ring matrix must be a JSON object");
  std::optional<GroupModel> model = fallback_model;
  if (j.contains("model")) {
    GroupModel declared = model_from_json(j.at("model"));
    if (model && !(*model == declared))
      throw ParseError("document model " + declared.describe() + " differs from requested " + model->describe());
    model = declared;
  }
  if (!model) throw ParseError("group-ring matrix lacks a \"model\"");
  if (!j.contains("entries")) throw ParseError("group-ring matrix lacks \"entries\"");
  auto const& entries = j.at("entries");
  std::size_t rows = j.contains("rows") ? j.at("rows").template get<std::size_t>() : entries.size();
  std::size_t cols = j.contains("cols") ? j.at("cols").template get<std::size_t>()
                                        : (entries.empty() ? 0 : entries.at(0).size());
  if (!entries.is_array() || entries.size() != rows) throw ShapeError("entries do not match \"rows\"");

  ParsedGroupRingMatrix out{GroupRingMatrix<GaussianRational>(*model, rows, cols),
                            j.contains("lifted") && j.at("lifted").template get<bool>()};
  for (std::size_t r = 0; r < rows; ++r) {
    auto const& row = entries.at(r);
    if (!row.is_array() || row.size() != cols) throw ShapeError("ragged group-ring matrix row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) {
      GroupRingElement<GaussianRational> x(*model);
      for (auto const& term : row.at(c)) {
        if (!term.is_array() || term.size() < 2 || term.size() > 4)
          throw ParseError("term must be [normal_form, num, den?, imag?]");
        Integer num = integer_from_json(term.at(1));
        Integer den = term.size() > 2 ? integer_from_json(term.at(2)) : Integer(1);
        if (den == 0) throw ParseError("zero denominator");
        Rational imag = term.size() > 3 ? rational_from_json(term.at(3)) : Rational(0);
        x.add_term(element_from_json(*model, term.at(0)), GaussianRational(Rational(num, den), imag));
      }
      out.matrix.set(r, c, std::move(x));
    }
  }
  return out;
}

/// Restricts to integer coefficients; throws when any coefficient is not in Z.
inline GroupRingMatrix<Integer> to_integer_matrix(GroupRingMatrix<GaussianRational> const& m) {
  GroupRingMatrix<Integer> out(m.model(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      GroupRingElement<Integer> x(m.model());
      for (auto const& [g, c] : m(i, j).terms()) {
        if (!c.is_real() || denominator(c.real()) != 1)
          throw Error("matrix has non-integral coefficients; an integral group-ring matrix is required");
        x.add_term(g, numerator(c.real()));
      }
      out.set(i, j, std::move(x));
    }
  return out;
}

// --- reports ---------------------------------------------------------------------

inline Json tool_json() { return Json{{"name", kToolName}, {"version", kVersion}}; }

inline Json to_json(AbelianGroup const& g) {
  Json t = Json::array();
  for (auto const& d : g.torsion) t.push_back(integer_to_json(d));
  return Json{{"free_rank", g.free_rank}, {"torsion", std::move(t)}};
}

inline Json divisors_to_json(std::vector<Integer> const& ds) {
  Json a = Json::array();
  for (auto const& d : ds) a.push_back(integer_to_json(d));
  return a;
}

inline Json to_json(HomologyReport const& h) {
  return Json{{"generators", h.generators},
              {"relators", h.relators},
              {"h1", to_json(h.h1)},
              {"h2_rank", h.h2_rank},
              {"betti", Json::array({h.betti.b0, h.betti.b1, h.betti.b2})},
              {"euler", h.euler}};
}

inline Json to_json(SmithDecomposition const& s) {
  return Json{{"divisors", divisors_to_json(s.divisors)},
              {"rank", s.rank()},
              {"U", to_json(s.U)},
              {"V", to_json(s.V)},
              {"D", to_json(s.D)}};
}

inline Json to_json(AsphericityReport const& r) {
  Json j;
  j["tool"] = tool_json();
  j["assumptions"] = Json{{"cd2_asserted", r.cd2_asserted}};
  j["homology"] = to_json(r.homology);
  j["sigma_rank"] = r.sigma_rank ? Json(*r.sigma_rank) : Json(nullptr);
  j["h2g"] = r.h2g ? to_json(*r.h2g) : Json(nullptr);
  j["pair_divisors"] = divisors_to_json(r.pair_divisors);
  j["torsion_free"] = r.torsion_free;
  j["direct_summand"] = r.direct_summand;
  j["contradiction"] = r.contradiction;
  j["verdict"] = to_string(r.verdict);
  j["path"] = r.path;
  j["reason"] = r.reason;
  j["idempotent"] = Json{{"supplied", r.idempotent_supplied},
                         {"idempotency_checked", r.validation.idempotency_checked},
                         {"splitting_checked", r.validation.splitting_checked}};
  j["notes"] = r.notes;
  return j;
}

inline Json to_json(BalancedCheck const& c) {
  return Json{{"balanced", c.balanced},
              {"beta1_zero", c.beta1_zero},
              {"b2_forced_zero", c.b2_forced_zero},
              {"beta2", c.beta2}};
}

inline Json to_json(RankComparison const& c) {
  Json j{{"t_rank", integer_to_json(c.t_rank)},
         {"eps_rank", c.eps_rank},
         {"agree", c.agree},
         {"idempotent_valid", c.idempotent_valid},
         {"t_rank_in_bounds", c.t_rank_in_bounds}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

/// Flattens a report into `path: value` lines; the text output mode.
inline std::string text_projection(Json const& j, std::string const& prefix = "") {
  std::string out;
  if (j.is_object()) {
    for (auto const& [k, v] : j.items()) out += text_projection(v, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](Json const& e) { return e.is_structured(); })) {
    std::size_t i = 0;
    for (auto const& v : j) out += text_projection(v, prefix + "[" + std::to_string(i++) + "]");
  } else {
    out += prefix + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
  return out;
}

}  // namespace aspherix::io
