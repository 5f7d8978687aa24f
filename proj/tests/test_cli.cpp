#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "arx/cli.hpp"
#include "arx/io.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = arx::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("arx_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string file(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string value(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  return "";
}

// Drops the lines that legitimately vary between runs or machines.
std::string stable(const std::string& report) {
  std::istringstream in(report);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("time_ms: ", 0) == 0 || line.rfind("out: ", 0) == 0) continue;
    out << line << '\n';
  }
  return out.str();
}

void golden(const std::string& name, const std::string& report) {
  fs::path p = fs::path(ARX_GOLDEN_DIR) / (name + ".txt");
  if (std::getenv("ARX_UPDATE_GOLDEN")) std::ofstream(p) << stable(report);
  CHECK_MESSAGE(fs::exists(p), "missing golden " << p);
  CHECK(stable(report) == arx::read_file(p.string()));
}

const std::string kC4 = "4 4\n0 1\n1 2\n2 3\n0 3\n";
const std::string kPaw = "4 4\n0 1\n0 2\n1 2\n0 3\n";

}  // namespace

TEST_CASE("generated chordal bipartite: fast and oracle eccentricities agree") {
  std::string g = (scratch() / "cb.txt").string();
  auto gen = run({"gen", "--family", "chordal-bipartite", "--n", "100", "--seed", "7", "--out", g});
  REQUIRE(gen.code == 0);
  golden("gen_chordal_bipartite", gen.out);
  auto fast = run({"ecc", "--in", g, "--class", "chordal-bipartite"});
  auto slow = run({"ecc", "--in", g, "--class", "oracle"});
  REQUIRE(fast.code == 0);
  REQUIRE(slow.code == 0);
  CHECK(!value(fast.out, "ecc").empty());
  CHECK(value(fast.out, "ecc") == value(slow.out, "ecc"));
  CHECK(value(fast.out, "input_hash") == value(slow.out, "input_hash"));
}

TEST_CASE("split diameter of C4 is a certificate") {
  auto r = run({"diam", "--class", "split", "--in", file("c4.txt", kC4)});
  CHECK(r.code == 2);
  CHECK(value(r.out, "certificate") == "NotSplit");
  golden("diam_split_c4", r.out);
}

TEST_CASE("planar embedding then retract check") {
  std::string c4 = (scratch() / "c4e.txt").string();
  REQUIRE(run({"gen", "--family", "cycle", "--n", "4", "--embedded", "--seed", "1", "--out", c4}).code == 0);
  std::string out = (scratch() / "c4_retract.txt").string();
  std::string map = (scratch() / "c4_map.txt").string();
  auto e = run({"planar-embed", "--in", c4, "--out", out, "--map", map});
  REQUIRE(e.code == 0);
  golden("planar_embed_c4", e.out);
  CHECK(arx::read_file(map) == "0 0\n1 1\n2 2\n3 3\n");
  auto c = run({"check", "--property", "planar-retract", "--in", out});
  CHECK(c.code == 0);
  CHECK(value(c.out, "outcome") == "pass");
  auto raw = run({"check", "--property", "planar-retract", "--in", c4});
  CHECK(raw.code == 2);
  CHECK(value(raw.out, "outcome") == "fail");
}

TEST_CASE("checks report replayable witnesses") {
  auto h = run({"check", "--property", "helly", "--in", file("c4.txt", kC4)});
  CHECK(h.code == 2);
  golden("check_helly_c4", h.out);

  auto hb = run({"check", "--property", "half-ball-helly", "--seed", "3", "--in", file("c4.txt", kC4)});
  CHECK(hb.code == 0);
  CHECK(value(hb.out, "outcome") == "pass");

  auto c6 = run({"check", "--property", "chordal-bipartite", "--in",
                 file("c6.txt", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n")});
  CHECK(c6.code == 2);
  golden("check_chordal_bipartite_c6", c6.out);

  auto paw = run({"check", "--property", "split-retract", "--in", file("paw.txt", kPaw)});
  CHECK(paw.code == 2);
  auto p4 = run({"check", "--property", "split-retract", "--in", file("p4.txt", "4 3\n0 1\n1 2\n2 3\n")});
  CHECK(p4.code == 0);

  auto k3 = run({"check", "--property", "kchrom-characterization", "--seed", "0", "--in",
                 file("k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")});
  CHECK(k3.code == 0);
  CHECK(value(k3.out, "k") == "4");
}

TEST_CASE("reduce-split writes the pruned graph and removal log") {
  std::string out = (scratch() / "paw_pruned.txt").string();
  std::string log = (scratch() / "paw_log.txt").string();
  auto r = run({"reduce-split", "--in", file("paw.txt", kPaw), "--out", out, "--log", log});
  REQUIRE(r.code == 0);
  CHECK(arx::read_file(log) == "1\n2\n3\n");
  CHECK(arx::read_file(out) == "1 0\n");
  golden("reduce_split_paw", r.out);
}

TEST_CASE("seeds are printed and replay") {
  std::string g = (scratch() / "cb2.txt").string();
  auto gen = run({"gen", "--family", "chordal-bipartite", "--n", "300", "--out", g});
  REQUIRE(gen.code == 0);
  std::string seed = value(gen.out, "seed");
  REQUIRE(!seed.empty());
  std::string g2 = (scratch() / "cb3.txt").string();
  REQUIRE(run({"gen", "--family", "chordal-bipartite", "--n", "300", "--seed", seed, "--out", g2}).code == 0);
  CHECK(arx::read_file(g) == arx::read_file(g2));

  auto d = run({"diam", "--class", "bipartite-retract", "--in", g});
  REQUIRE(d.code == 0);
  auto again = run({"diam", "--class", "bipartite-retract", "--in", g, "--seed", value(d.out, "seed")});
  CHECK(value(again.out, "diameter") == value(d.out, "diameter"));
  CHECK(value(again.out, "ops") == value(d.out, "ops"));
  CHECK(value(d.out, "diameter") == value(run({"diam", "--class", "oracle", "--in", g}).out, "diameter"));
}

TEST_CASE("k-chromatic diameter through the command line") {
  std::string g = (scratch() / "kc.txt").string();
  REQUIRE(run({"gen", "--family", "kchromatic", "--n", "40", "--k", "3", "--seed", "5", "--out", g}).code == 0);
  auto d = run({"diam", "--class", "k-chromatic-retract", "--in", g, "--seed", "1", "--colors"});
  REQUIRE(d.code == 0);
  CHECK(value(d.out, "k") == "3");
  CHECK(!value(d.out, "colors").empty());
  CHECK(value(d.out, "diameter") == value(run({"diam", "--class", "oracle", "--in", g}).out, "diameter"));
}

TEST_CASE("bench table") {
  auto b = run({"bench", "--class", "chordal-bipartite", "--n", "512", "--reps", "1", "--seed", "2"});
  REQUIRE(b.code == 0);
  CHECK(value(b.out, "columns") == "n m algo_ms oracle_ms ops match");
  std::istringstream in(b.out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.rfind("row: ", 0) != 0) continue;
    ++rows;
    CHECK(line.substr(line.size() - 3) == "yes");
  }
  CHECK(rows == 2);
}

TEST_CASE("usage and input errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"diam", "--class", "nope", "--in", file("c4.txt", kC4)}).code == 1);
  CHECK(run({"diam", "--class", "oracle", "--in", (scratch() / "missing.txt").string()}).code == 1);
  auto bad = run({"diam", "--class", "oracle", "--in", file("bad.txt", "3 1\n0 7\n")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("error:") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}
