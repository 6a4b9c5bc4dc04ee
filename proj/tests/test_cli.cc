#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "pn2sc/cli.h"
#include "pn2sc/text_format.h"
#include "support/oracles.h"

using namespace pn2sc;
namespace fs = std::filesystem;

namespace {

const fs::path kData = PN2SC_TESTDATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("pn2sc_cli_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("convert matches the golden statechart") {
  TempDir tmp;
  Run r = cli({"convert", "--in", (kData / "chain.pn").string(), "--out", tmp / "chain.sc",
               "--trace", tmp / "chain.trace", "--net-out", tmp / "chain_reduced.pn"});
  CHECK(r.code == kExitOk);
  CHECK(r.err.empty());
  CHECK(slurp(tmp / "chain.sc") == slurp(kData / "chain.sc"));
  CHECK(slurp(tmp / "chain.trace") == "or-reduce @ t [bound: q, r]\n");
  CHECK(slurp(tmp / "chain_reduced.pn") == "place q_OR_r\n");
}

TEST_CASE("duplicate names are an input error") {
  TempDir tmp;
  std::string dup = (kData / "dup.pn").string();
  Run r = cli({"convert", "--in", dup, "--out", tmp / "x.sc"});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find(dup + ":3:7: error: duplicate name q") != std::string::npos);
  CHECK_FALSE(fs::exists(tmp / "x.sc"));
}

TEST_CASE("check reports every invariant") {
  Run r = cli({"check", "--in", (kData / "chain.pn").string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("PASS inv-after-initialise") != std::string::npos);
  CHECK(r.out.find("all invariants passed") != std::string::npos);

  Run sc = cli({"check", "--in", (kData / "chain.sc").string()});
  CHECK(sc.code == kExitOk);

  Run dup = cli({"check", "--in", (kData / "dup.pn").string()});
  CHECK(dup.code == kExitInputError);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == kExitInputError);
  Run bogus = cli({"convert", "--in", "a.pn", "--out", "b.sc", "--bogus"});
  CHECK(bogus.code == kExitInputError);
  CHECK(bogus.err.find("--bogus") != std::string::npos);
  CHECK(bogus.err.find("Usage") != std::string::npos);
  CHECK(cli({"frobnicate"}).code == kExitInputError);
  CHECK(cli({"convert", "--in", "/nonexistent/x.pn", "--out", "y.sc"}).code == kExitInputError);
  Run help = cli({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("convert") != std::string::npos);
}

TEST_CASE("the result-check flag and the seed keep output byte-stable") {
  TempDir tmp;
  std::mt19937_64 rng(89);
  for (int i = 0; i < 20; ++i) {
    spit(tmp / "in.pn", serialize_petri_net(pn2sc::testing::random_net(rng, 12, 12)));
    std::string seed = std::to_string(rng() % 1000);
    auto run = [&](const std::string& tag, std::vector<std::string> extra) {
      std::vector<std::string> args{"convert", "--in", tmp / "in.pn", "--out", tmp / (tag + ".sc"),
                                    "--trace", tmp / (tag + ".trace"), "--seed", seed};
      args.insert(args.end(), extra.begin(), extra.end());
      REQUIRE(cli(args).code == kExitOk);
      return slurp(tmp / (tag + ".sc")) + "---\n" + slurp(tmp / (tag + ".trace"));
    };
    std::string a = run("a", {});
    CHECK(run("b", {"--no-nac-opt"}) == a);
    CHECK(run("c", {}) == a);
    CHECK(run("d", {"--paranoid"}) == a);
  }
}

TEST_CASE("init-only, reduce-only and invert chain together") {
  TempDir tmp;
  std::string net = (kData / "chain.pn").string();
  REQUIRE(cli({"init-only", "--in", net, "--out", tmp / "flat.sc"}).code == kExitOk);
  CHECK(slurp(tmp / "flat.sc") == slurp(kData / "chain_flat.sc"));

  REQUIRE(cli({"invert", "--in", tmp / "flat.sc", "--out", tmp / "back.pn"}).code == kExitOk);
  CHECK(slurp(tmp / "back.pn") == slurp(net));

  REQUIRE(cli({"reduce-only", "--in", net, "--sc-in", tmp / "flat.sc", "--out", tmp / "red.sc",
               "--net-out", tmp / "red.pn"})
              .code == kExitOk);
  CHECK(slurp(tmp / "red.pn") == "place q_OR_r\n");
  CHECK(slurp(tmp / "red.sc").find("or q_OR_r\n") != std::string::npos);

  Run refused = cli({"invert", "--in", (kData / "chain.sc").string(), "--out", tmp / "no.pn"});
  CHECK(refused.code == kExitInputError);
}

TEST_CASE("gen and bench") {
  TempDir tmp;
  REQUIRE(cli({"gen", "--places", "50", "--seed", "3", "--out", tmp / "g1.pn"}).code == kExitOk);
  REQUIRE(cli({"gen", "--places", "50", "--seed", "3", "--out", tmp / "g2.pn"}).code == kExitOk);
  CHECK(slurp(tmp / "g1.pn") == slurp(tmp / "g2.pn"));
  CHECK(cli({"gen", "--places", "0", "--out", tmp / "g3.pn"}).code == kExitInputError);

  Run bench = cli({"bench", "--sizes", "1,50", "--reps", "1", "--csv", tmp / "b.csv"});
  CHECK(bench.code == kExitOk);
  CHECK(slurp(tmp / "b.csv").rfind("size,phase,median_ms,final_places\n", 0) == 0);
  CHECK(cli({"bench", "--sizes", "1,x"}).code == kExitInputError);
}
