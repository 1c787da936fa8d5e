#pragma once

#include "aspherix/io/json.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace aspherix {

inline std::string read_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error("cannot read " + path.string());
  return ss.str();
}

struct CorpusOptions {
  bool cd2_asserted = false;
  std::uint64_t seed = 0;  // drives only the randomized Tietze spot check
};

namespace detail {

inline bool same_homology(HomologyReport const& a, HomologyReport const& b) {
  return a.h1 == b.h1 && a.h2_rank == b.h2_rank;
}

// Seeded Tietze spot check: stabilization, a random transvection and one
// trivial relator must act on homology as predicted.
inline io::Json tietze_spot_check(Presentation const& p, HomologyReport const& h, std::mt19937_64& rng) {
  io::Json j;
  j["stabilize"] = same_homology(homology(tietze_stabilize(p, 1)), h);
  if (p.relator_count() >= 2 && p.generator_count() >= 1) {
    std::uniform_int_distribution<std::size_t> rel(0, p.relator_count() - 1);
    std::uniform_int_distribution<std::size_t> gen(0, p.generator_count() - 1);
    std::size_t jdx = rel(rng), kdx = rel(rng);
    while (kdx == jdx) kdx = rel(rng);
    std::vector<Letter> raw;
    for (int n = 0; n < 3; ++n) raw.push_back({gen(rng), (rng() & 1) ? 1 : -1});
    int sign = (rng() & 1) ? 1 : -1;
    j["transvect"] = same_homology(homology(tietze_transvect(p, jdx, kdx, Word(raw), sign)), h);
  }
  HomologyReport t = homology(add_trivial_relator(p, 1));
  j["trivial_relator"] = t.h1 == h.h1 && t.h2_rank == h.h2_rank + 1;
  return j;
}

}  // namespace detail

/// Analyzes every `*.pres` file in `dir` (sorted by path). A sidecar
/// `<stem>.E.json` supplies the idempotent E. Failures are recorded per entry.
inline io::Json run_corpus(std::filesystem::path const& dir, CorpusOptions const& opts) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir.string());

  std::vector<fs::path> files;
  for (auto const& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".pres") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::mt19937_64 rng(opts.seed);
  io::Json entries = io::Json::array();
  std::size_t errors = 0, contradictions = 0, rank_disagreements = 0, tietze_failures = 0;
  std::size_t n_aspherical = 0, n_not = 0, n_inconclusive = 0;

  for (auto const& path : files) {
    io::Json e;
    e["file"] = path.filename().string();
    try {
      Presentation p = parse_presentation(read_file(path));
      HomologyReport h = homology(p);
      e["homology"] = io::to_json(h);
      e["fundamental_identity"] = fundamental_identity_check(p);
      e["balanced"] = io::to_json(balanced_perfect_check(p));

      std::optional<IdempotentInput> E;
      fs::path sidecar = path.parent_path() / (path.stem().string() + ".E.json");
      if (fs::exists(sidecar)) {
        auto parsed = io::group_ring_matrix_from_json(nlohmann::json::parse(read_file(sidecar)));
        E = IdempotentInput{io::to_integer_matrix(parsed.matrix), parsed.lifted};
        e["idempotent_file"] = sidecar.filename().string();
      }

      AsphericityReport rep = asphericity_verdict(p, E, opts.cd2_asserted);
      e["report"] = io::to_json(rep);
      if (rep.contradiction) ++contradictions;
      switch (rep.verdict) {
        case Verdict::aspherical: ++n_aspherical; break;
        case Verdict::not_aspherical: ++n_not; break;
        case Verdict::inconclusive: ++n_inconclusive; break;
      }

      if (E && !E->lifted) {
        RankComparison rc = compare_ranks(E->matrix);
        io::Json rj = io::to_json(rc);
        if (!rc.agree) {
          ++rank_disagreements;
          rj["counterexample_candidate"] = io::to_json(E->matrix);
        }
        e["rank_check"] = std::move(rj);
      }

      io::Json tz = detail::tietze_spot_check(p, h, rng);
      for (auto const& [k, v] : tz.items())
        if (!v.get<bool>()) {
          ++tietze_failures;
          break;
        }
      e["tietze_check"] = std::move(tz);
      e["status"] = "ok";
    } catch (std::exception const& ex) {
      ++errors;
      e["status"] = "error";
      e["error"] = ex.what();
    }
    entries.push_back(std::move(e));
  }

  io::Json summary;
  summary["tool"] = io::tool_json();
  summary["cd2_asserted"] = opts.cd2_asserted;
  summary["seed"] = opts.seed;
  summary["files"] = files.size();
  summary["errors"] = errors;
  summary["contradictions"] = contradictions;
  summary["rank_disagreements"] = rank_disagreements;
  summary["tietze_failures"] = tietze_failures;
  summary["verdicts"] = io::Json{{"aspherical", n_aspherical}, {"not_aspherical", n_not}, {"inconclusive", n_inconclusive}};
  summary["entries"] = std::move(entries);
  return summary;
}

}  // namespace aspherix
