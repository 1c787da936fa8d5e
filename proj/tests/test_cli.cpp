#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace aspherix;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  io::Json json() const { return io::Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "aspherix");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path corpus_dir() {
  char const* dir = std::getenv("ASPHERIX_CORPUS");
  return dir ? fs::path(dir) : fs::path(ASPHERIX_SOURCE_DIR) / "corpus";
}

std::string corpus(std::string const& name) { return (corpus_dir() / name).string(); }

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("aspherix-test-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(std::string const& name, std::string const& content) const {
    std::ofstream(path_ / name) << content;
    return (path_ / name).string();
  }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, HomologyTorus) {
  Result r = run({"homology", corpus("torus.pres")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["h1"]["free_rank"], 2);
  EXPECT_TRUE(j["h1"]["torsion"].empty());
  EXPECT_EQ(j["h2_rank"], 1);
  EXPECT_EQ(j["tool"]["version"], kVersion);
  EXPECT_EQ(j["cd2_asserted"], false);
}

TEST(Cli, SnfFromCsvAndJson) {
  TempDir tmp;
  Result r = run({"snf", tmp.write("m.csv", "2,4\n6,8\n")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["divisors"], io::Json::parse("[2,4]"));
  EXPECT_EQ(j["rank"], 2);
  IntMatrix U = io::int_matrix_from_json(j["U"]), V = io::int_matrix_from_json(j["V"]);
  EXPECT_EQ(U * int_matrix({{2, 4}, {6, 8}}) * V, io::int_matrix_from_json(j["D"]));

  Result rj = run({"snf", tmp.write("m.json", "[[2,4],[6,8]]")});
  EXPECT_EQ(rj.json()["divisors"], j["divisors"]);
}

TEST(Cli, AsphericalSphereWithZeroIdempotent) {
  Result r = run({"aspherical", corpus("sphere.pres"), "--idempotent", corpus("sphere.E.json"), "--assert-cd2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["verdict"], "not_aspherical");
  EXPECT_EQ(j["sigma_rank"], 1);
  EXPECT_EQ(j["assumptions"]["cd2_asserted"], true);
  EXPECT_EQ(j["tool"]["name"], kToolName);
}

TEST(Cli, AsphericalTorusAndKlein) {
  Result t = run({"aspherical", corpus("torus.pres"), "--idempotent", corpus("torus.E.json"), "--assert-cd2"});
  EXPECT_EQ(t.json()["verdict"], "aspherical");
  Result k = run({"aspherical", corpus("klein.pres"), "--assert-cd2"});
  EXPECT_EQ(k.json()["verdict"], "aspherical");
  EXPECT_EQ(k.json()["path"], "h2_vanishes");
  Result n = run({"aspherical", corpus("klein.pres")});
  EXPECT_EQ(n.json()["verdict"], "inconclusive");
}

TEST(Cli, ExitCodes) {
  TempDir tmp;
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"homology", corpus("torus.pres"), "--bogus"}).code, 2);
  EXPECT_EQ(run({"homology", tmp.str() + "/missing.pres"}).code, 2);
  Result bad = run({"homology", tmp.write("bad.pres", "gens: a\nrel: a q\n")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"snf", tmp.write("bad.json", "[[1,2],[3]]")}).code, 1);

  std::string two = tmp.write("two.json", R"({"model": {"kind": "free", "rank": 1}, "entries": [[[["", 2]]]]})");
  Result invalid = run({"aspherical", corpus("disc.pres"), "--idempotent", two, "--assert-cd2"});
  EXPECT_EQ(invalid.code, 1);
  EXPECT_FALSE(invalid.err.empty());
  EXPECT_EQ(run({"rank-check", two}).code, 1);
  EXPECT_EQ(run({"--version"}).code, 0);
}

TEST(Cli, ByteStableOutput) {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {"homology", corpus("genus2.pres")},
           {"jacobian", corpus("trefoil.pres")},
           {"aspherical", corpus("torus.pres"), "--idempotent", corpus("torus.E.json"), "--assert-cd2"},
           {"--seed", "7", "corpus", corpus_dir().string(), "--assert-cd2"}}) {
    Result a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Cli, SeedDoesNotChangeAnalysis) {
  auto a = run({"--seed", "1", "corpus", corpus_dir().string(), "--assert-cd2"}).json();
  auto b = run({"--seed", "99", "corpus", corpus_dir().string(), "--assert-cd2"}).json();
  ASSERT_EQ(a["entries"].size(), b["entries"].size());
  for (std::size_t i = 0; i < a["entries"].size(); ++i) {
    EXPECT_EQ(a["entries"][i]["report"], b["entries"][i]["report"]);
    EXPECT_EQ(a["entries"][i]["homology"], b["entries"][i]["homology"]);
  }
}

TEST(Cli, BundledCorpusHasNoContradictions) {
  Result r = run({"corpus", corpus_dir().string(), "--assert-cd2"});
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = r.json();
  EXPECT_GE(j["files"].get<int>(), 8);
  EXPECT_EQ(j["errors"], 0);
  EXPECT_EQ(j["contradictions"], 0);
  EXPECT_EQ(j["rank_disagreements"], 0);
  EXPECT_EQ(j["tietze_failures"], 0);
  for (auto const& e : j["entries"]) EXPECT_EQ(e["fundamental_identity"], true) << e["file"];
}

TEST(Cli, EmptyAndCorruptedCorpora) {
  TempDir tmp;
  Result empty = run({"corpus", tmp.str()});
  ASSERT_EQ(empty.code, 0);
  EXPECT_EQ(empty.json()["files"], 0);
  EXPECT_TRUE(empty.json()["entries"].empty());

  tmp.write("a.pres", "gens: a b\nrel: a b A B\n");
  tmp.write("b.pres", "gens: a\nrel: a ?\n");
  tmp.write("c.pres", "gens: a\nrel: a a\n");
  Result r = run({"corpus", tmp.str()});
  EXPECT_EQ(r.code, 1);
  auto j = r.json();
  EXPECT_EQ(j["files"], 3);
  EXPECT_EQ(j["errors"], 1);
  EXPECT_EQ(j["entries"][1]["status"], "error");
  EXPECT_EQ(j["entries"][2]["status"], "ok");
}

TEST(Cli, Tietze) {
  Result s = run({"tietze", corpus("torus.pres"), "--stabilize", "1"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.out, "gens: a b g1\nrel: a b a^-1 b^-1\nrel: g1\n");

  TempDir tmp;
  std::string dup = tmp.write("dup.pres", "gens: a\nrel: a\nrel: a\n");
  Result t = run({"tietze", dup, "--transvect", "2", "1", "--inverse"});
  EXPECT_EQ(t.out, "gens: a\nrel: a\nrel:\n");
  EXPECT_EQ(run({"tietze", dup, "--transvect", "1", "3"}).code, 2);
  EXPECT_EQ(run({"tietze", dup, "--add-trivial", "2"}).out, "gens: a\nrel: a\nrel: a\nrel:\nrel:\n");
}

TEST(Cli, RankCheck) {
  Result r = run({"rank-check", corpus("torus_sphere.E.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["t_rank"], 1);
  EXPECT_EQ(j["eps_rank"], 1);
  EXPECT_EQ(j["agree"], true);

  TempDir tmp;
  std::string no_model = tmp.write("e.json", R"({"entries": [[[["", 1]], []], [[], []]]})");
  EXPECT_EQ(run({"rank-check", no_model}).code, 2);
  Result g = run({"rank-check", no_model, "--group", "free:2"});
  EXPECT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(g.json()["model"]["kind"], "free");
}

TEST(Cli, JacobianAugmented) {
  Result csv = run({"jacobian", corpus("klein.pres"), "--augmented", "--format", "csv"});
  EXPECT_EQ(csv.out, "2\n0\n");
  Result j = run({"jacobian", corpus("klein.pres"), "--augmented"});
  EXPECT_EQ(io::int_matrix_from_json(j.json()), int_matrix({{2}, {0}}));
  Result full = run({"jacobian", corpus("torus.pres")});
  auto parsed = io::group_ring_matrix_from_json(full.json());
  EXPECT_EQ(io::to_integer_matrix(parsed.matrix), jacobian(parse_presentation("gens: a b\nrel: a b A B\n")));
}

TEST(Cli, TextModeProjectsJson) {
  Result r = run({"homology", corpus("klein.pres"), "--text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("h1.free_rank: 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("h1.torsion: [2]\n"), std::string::npos);
  EXPECT_NE(r.out.find("tool.version: " + std::string(kVersion)), std::string::npos);
  EXPECT_EQ(run({"homology", corpus("klein.pres"), "--text", "--json"}).code, 2);
}
