#pragma once

// Command-line front end. Exit codes: 0 success, 1 domain error (invalid E,
// contradiction flags, failed corpus entries), 2 usage or parse error.

#include "aspherix/aspherix.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace aspherix::cli {

enum class OutputFormat { json, text };

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  OutputFormat format = OutputFormat::json;
  bool assert_cd2 = false;
  bool augmented = false;
  std::string matrix_format = "json";  // jacobian --augmented: json | csv
  std::optional<std::string> idempotent_path;
  std::optional<std::string> group_spec;
  std::uint64_t seed = 0;
  // tietze
  std::size_t stabilize = 0;
  std::size_t add_trivial = 0;
  std::vector<std::size_t> transvect;  // 1-based j k
  std::string conjugator;
  bool inverse = false;
  bool cyclic_reduce = false;
};

inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

// Domain failures map to exit code 1; anything about malformed input to 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void emit(io::Json const& j, OutputFormat f, std::ostream& out) {
  if (f == OutputFormat::json) {
    out << j.dump(2) << '\n';
  } else {
    out << io::text_projection(j);
  }
}

inline Presentation load_presentation(std::string const& path) {
  if (!std::filesystem::exists(path)) throw UsageError("no such file: " + path);
  return parse_presentation(read_file(path));
}

inline bool looks_like_json(std::string const& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (text[pos] == '[' || text[pos] == '{');
}

inline IntMatrix load_int_matrix(std::string const& path) {
  if (!std::filesystem::exists(path)) throw UsageError("no such file: " + path);
  std::string text = read_file(path);
  if (looks_like_json(text)) return io::int_matrix_from_json(nlohmann::json::parse(text));
  return io::int_matrix_from_csv(text);
}

inline io::ParsedGroupRingMatrix load_group_ring_matrix(std::string const& path,
                                                        std::optional<GroupModel> const& model = {}) {
  if (!std::filesystem::exists(path)) throw UsageError("no such file: " + path);
  return io::group_ring_matrix_from_json(nlohmann::json::parse(read_file(path)), model);
}

inline io::Json with_tool(RunConfig const& cfg, io::Json j) {
  io::Json out;
  out["tool"] = io::tool_json();
  out["cd2_asserted"] = cfg.assert_cd2;
  for (auto& [k, v] : j.items()) out[k] = v;
  return out;
}

inline int cmd_homology(RunConfig const& cfg, std::ostream& out) {
  Presentation p = load_presentation(cfg.inputs.at(0));
  io::Json j = io::to_json(homology(p));
  j["balanced"] = io::to_json(balanced_perfect_check(p));
  emit(with_tool(cfg, std::move(j)), cfg.format, out);
  return kOk;
}

inline int cmd_jacobian(RunConfig const& cfg, std::ostream& out) {
  Presentation p = load_presentation(cfg.inputs.at(0));
  if (!cfg.augmented) {
    emit(io::to_json(jacobian(p)), OutputFormat::json, out);
    return kOk;
  }
  IntMatrix e = augmented_jacobian(p);
  if (cfg.matrix_format == "csv") {
    out << io::int_matrix_to_csv(e);
  } else {
    emit(io::Json{{"rows", e.rows()}, {"cols", e.cols()}, {"entries", io::to_json(e)}}, OutputFormat::json, out);
  }
  return kOk;
}

inline int cmd_snf(RunConfig const& cfg, std::ostream& out) {
  IntMatrix a = load_int_matrix(cfg.inputs.at(0));
  emit(with_tool(cfg, io::to_json(snf(a))), cfg.format, out);
  return kOk;
}

inline int cmd_rank_check(RunConfig const& cfg, std::ostream& out) {
  std::optional<GroupModel> model;
  if (cfg.group_spec) model = io::parse_model_spec(*cfg.group_spec);
  auto parsed = load_group_ring_matrix(cfg.inputs.at(0), model);
  GroupRingMatrix<Integer> E = io::to_integer_matrix(parsed.matrix);
  RankComparison rc = compare_ranks(E);
  io::Json j = io::to_json(rc);
  j["model"] = io::to_json(E.model());
  if (!rc.agree) j["counterexample_candidate"] = io::to_json(E);
  emit(with_tool(cfg, std::move(j)), cfg.format, out);
  return kOk;
}

inline int cmd_aspherical(RunConfig const& cfg, std::ostream& out) {
  Presentation p = load_presentation(cfg.inputs.at(0));
  std::optional<IdempotentInput> E;
  if (cfg.idempotent_path) {
    auto parsed = load_group_ring_matrix(*cfg.idempotent_path);
    E = IdempotentInput{io::to_integer_matrix(parsed.matrix), parsed.lifted};
  }
  AsphericityReport rep = asphericity_verdict(p, E, cfg.assert_cd2);
  emit(io::to_json(rep), cfg.format, out);
  return rep.contradiction ? kDomainError : kOk;
}

inline int cmd_tietze(RunConfig const& cfg, std::ostream& out) {
  Presentation p = load_presentation(cfg.inputs.at(0));
  if (cfg.cyclic_reduce) p = p.cyclically_reduced();
  if (cfg.stabilize) p = tietze_stabilize(p, cfg.stabilize);
  if (cfg.add_trivial) p = add_trivial_relator(p, cfg.add_trivial);
  if (!cfg.transvect.empty()) {
    if (cfg.transvect.size() != 2 || cfg.transvect[0] == 0 || cfg.transvect[1] == 0)
      throw UsageError("--transvect takes two 1-based relator indices");
    Word w = parse_word(cfg.conjugator, p.generator_names());
    try {
      p = tietze_transvect(p, cfg.transvect[0] - 1, cfg.transvect[1] - 1, w, cfg.inverse ? -1 : 1);
    } catch (std::logic_error const& e) {
      throw UsageError(e.what());
    }
  }
  out << render_presentation(p);
  return kOk;
}

inline int cmd_corpus(RunConfig const& cfg, std::ostream& out) {
  if (!std::filesystem::is_directory(cfg.inputs.at(0))) throw UsageError("not a directory: " + cfg.inputs.at(0));
  io::Json summary = run_corpus(cfg.inputs.at(0), CorpusOptions{cfg.assert_cd2, cfg.seed});
  emit(summary, cfg.format, out);
  bool failed = summary["errors"].get<std::size_t>() > 0 || summary["contradictions"].get<std::size_t>() > 0;
  return failed ? kDomainError : kOk;
}

}  // namespace detail

/// Runs the tool on argv-style arguments (args[0] is the program name).
inline int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Asphericity invariants of finite group presentations", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  app.add_option("--seed", cfg.seed, "Seed for randomized checks (never affects analysis results)");

  std::string input;
  auto add_format = [&](CLI::App* sub) {
    auto* j = sub->add_flag_callback("--json", [&] { cfg.format = OutputFormat::json; }, "JSON output (default)");
    auto* t = sub->add_flag_callback("--text", [&] { cfg.format = OutputFormat::text; }, "Flat text projection");
    j->excludes(t);
  };

  auto* homology_cmd = app.add_subcommand("homology", "H1(K), H2(K), Betti numbers and Euler characteristic");
  homology_cmd->add_option("presentation", input, "Presentation file")->required();
  homology_cmd->add_flag("--assert-cd2", cfg.assert_cd2, "Echo the cd(G) = 2 assertion");
  add_format(homology_cmd);

  auto* jacobian_cmd = app.add_subcommand("jacobian", "Fox Jacobian d2 over Z[F]");
  jacobian_cmd->add_option("presentation", input, "Presentation file")->required();
  jacobian_cmd->add_flag("--augmented", cfg.augmented, "Emit the integer matrix eps(d2)");
  jacobian_cmd->add_option("--format", cfg.matrix_format, "Format for --augmented")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix (CSV or JSON)");
  snf_cmd->add_option("matrix", input, "Matrix file")->required();
  add_format(snf_cmd);

  auto* rank_cmd = app.add_subcommand("rank-check", "Compare t-rank and eps-rank of an idempotent");
  rank_cmd->add_option("idempotent", input, "Group-ring matrix JSON")->required();
  rank_cmd->add_option("--group", cfg.group_spec, "Model spec: free:N, free_abelian:N, abelian:N:d1,d2,...");
  add_format(rank_cmd);

  auto* asph_cmd = app.add_subcommand("aspherical", "Sigma_K, H2(G) and the asphericity verdict");
  asph_cmd->add_option("presentation", input, "Presentation file")->required();
  asph_cmd->add_option("--idempotent", cfg.idempotent_path, "Idempotent E as group-ring matrix JSON");
  asph_cmd->add_flag("--assert-cd2", cfg.assert_cd2, "Assert that G has cohomological dimension 2");
  add_format(asph_cmd);

  auto* tietze_cmd = app.add_subcommand("tietze", "Apply Tietze moves and print the resulting presentation");
  tietze_cmd->add_option("presentation", input, "Presentation file")->required();
  tietze_cmd->add_option("--stabilize", cfg.stabilize, "Add k generators g_i with relators g_i");
  tietze_cmd->add_option("--add-trivial", cfg.add_trivial, "Append k empty relators");
  tietze_cmd->add_option("--transvect", cfg.transvect, "r_j <- r_j (w r_k w^-1)^sign, 1-based j k")
      ->expected(2);
  tietze_cmd->add_option("--conjugator", cfg.conjugator, "Conjugating word w (default: empty)");
  tietze_cmd->add_flag("--inverse", cfg.inverse, "Use sign -1 in the transvection");
  tietze_cmd->add_flag("--cyclic-reduce", cfg.cyclic_reduce, "Cyclically reduce relators first");

  auto* corpus_cmd = app.add_subcommand("corpus", "Analyze a directory of presentations");
  corpus_cmd->add_option("directory", input, "Directory of *.pres files with optional *.E.json sidecars")
      ->required();
  corpus_cmd->add_flag("--assert-cd2", cfg.assert_cd2, "Assert cd(G) = 2 for every entry");
  add_format(corpus_cmd);

  std::vector<char const*> argv;
  argv.reserve(args.size());
  for (auto const& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::Success const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.inputs = {input};
  try {
    if (cfg.subcommand == "homology") return detail::cmd_homology(cfg, out);
    if (cfg.subcommand == "jacobian") return detail::cmd_jacobian(cfg, out);
    if (cfg.subcommand == "snf") return detail::cmd_snf(cfg, out);
    if (cfg.subcommand == "rank-check") return detail::cmd_rank_check(cfg, out);
    if (cfg.subcommand == "aspherical") return detail::cmd_aspherical(cfg, out);
    if (cfg.subcommand == "tietze") return detail::cmd_tietze(cfg, out);
    if (cfg.subcommand == "corpus") return detail::cmd_corpus(cfg, out);
  } catch (UsageError const& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (ParseError const& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (nlohmann::json::exception const& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (std::logic_error const& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  err << "error: unknown subcommand\n";
  return kUsageError;
}

}  // namespace aspherix::cli
