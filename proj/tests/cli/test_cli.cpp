#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(AHNCUT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Scratch directory shared by all cases, wiped per process run.
const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "ahncut-cli-tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream out(p, std::ios::binary);
  out << text;
  REQUIRE(out.good());
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kCliqueNet =
    "AHN 1\n"
    "LABELS 2\n"
    "LEVELS 2\n"
    "VARS 1 3\n"
    "VARS 2 1\n"
    "UNARY 2 0 0 0 2\n"
    "LINK 2 0 0 1\nLINK 2 0 1 1\nLINK 2 0 2 1\n";

}  // namespace

TEST_CASE("validate accepts a consistent network") {
  const std::string net = write_file("clique.ahn", kCliqueNet);
  const RunResult r = run("validate " + net);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("consistency: ok") != std::string::npos);
}

TEST_CASE("validate rejects malformed files at the parse stage") {
  const std::string net = write_file(
      "negative.ahn", "AHN 1\nLABELS 2\nLEVELS 1\nVARS 1 2\nEDGE 1 0 1 -1\n");
  const RunResult r = run("validate " + net);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("line 5") != std::string::npos);
}

TEST_CASE("validate flags margin violations with exit 1") {
  // One parent whose label cost 5 dwarfs its half-weight margin 1.
  const std::string net = write_file("violating.ahn",
                                     "AHN 1\nLABELS 2\nLEVELS 2\nVARS 1 2\nVARS 2 1\n"
                                     "UNARY 2 0 5 5 5\nLINK 2 0 0 1\nLINK 2 0 1 1\n");
  const RunResult r = run("validate " + net);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("consistency: FAIL") != std::string::npos);
  CHECK(r.output.find("level 2 var 0") != std::string::npos);
}

TEST_CASE("eval prints hand-checkable energies") {
  const std::string net = write_file("clique2.ahn", kCliqueNet);
  const std::string full = write_file("full.lab", "0 0 1\n0\n");
  const RunResult joint = run("eval " + net + " " + full);
  CHECK(joint.exit_code == 0);
  CHECK(joint.output == "joint=1\nhigher_order=1\n");

  const std::string base_only = write_file("base.lab", "0 0 1\n");
  const RunResult higher = run("eval " + net + " " + base_only);
  CHECK(higher.exit_code == 0);
  CHECK(higher.output == "higher_order=1\n");
}

TEST_CASE("eval rejects shape mismatches with exit 2") {
  const std::string net = write_file("clique3.ahn", kCliqueNet);
  const std::string bad = write_file("bad.lab", "0 0\n");
  const RunResult r = run("eval " + net + " " + bad);
  CHECK(r.exit_code == 2);
}

TEST_CASE("solve emits deterministic artifacts") {
  const std::string spec =
      write_file("gen.spec", "kind=random_small labels=3 seed=5 base_vars=5 base_edges=5 aux_vars=2\n");
  const std::string net = (scratch() / "generated.ahn").string();
  CHECK(run("gen " + spec + " --out " + net).exit_code == 0);
  CHECK(run("validate " + net).exit_code == 0);

  const std::string lab1 = (scratch() / "a.lab").string();
  const std::string lab2 = (scratch() / "b.lab").string();
  const std::string tr1 = (scratch() / "a.csv").string();
  const std::string tr2 = (scratch() / "b.csv").string();
  const RunResult r1 =
      run("solve " + net + " --algorithm range-expansion --trace " + tr1 + " --out " + lab1);
  const RunResult r2 =
      run("solve " + net + " --algorithm range-expansion --trace " + tr2 + " --out " + lab2);
  CHECK(r1.exit_code == 0);
  CHECK(r1.output == r2.output);
  CHECK(slurp(lab1) == slurp(lab2));
  CHECK(slurp(tr1) == slurp(tr2));
  CHECK(r1.output.find("final_joint=") != std::string::npos);
  CHECK(r1.output.find("sweeps=") != std::string::npos);

  // The solved labeling round-trips through eval to the same energies.
  const RunResult ev = run("eval " + net + " " + lab1);
  CHECK(ev.exit_code == 0);
}

TEST_CASE("range swap matches exhaustive search on binary corpora") {
  for (int seed = 1; seed <= 3; ++seed) {
    const std::string spec = write_file(
        "k2-" + std::to_string(seed) + ".spec",
        "kind=random_small labels=2 seed=" + std::to_string(seed) +
            " base_vars=5 base_edges=4 aux_vars=2\n");
    const std::string net = (scratch() / ("k2-" + std::to_string(seed) + ".ahn")).string();
    REQUIRE(run("gen " + spec + " --out " + net).exit_code == 0);
    const RunResult swap = run("solve " + net + " --algorithm range-swap");
    const RunResult brute = run("solve " + net + " --algorithm brute");
    CHECK(swap.exit_code == 0);
    CHECK(brute.exit_code == 0);
    // Identical summary energies (sweep counts differ).
    const auto energies = [](const std::string& s) { return s.substr(0, s.find("sweeps=")); };
    CHECK(energies(swap.output) == energies(brute.output));
  }
}

TEST_CASE("gen writes parseable networks to stdout by default") {
  const std::string spec = write_file(
      "grid.spec",
      "kind=grid_hierarchy labels=4 seed=7 width=8 height=8 partitions=2 segments=4 "
      "super_segments=2\n");
  const RunResult r = run("gen " + spec);
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("AHN 1\n", 0) == 0);
  CHECK(r.output.find("VARS 1 64") != std::string::npos);
  CHECK(r.output.find("VARS 2 8") != std::string::npos);
  CHECK(r.output.find("VARS 3 2") != std::string::npos);
}

TEST_CASE("compare runs spec-file corpora and directory corpora") {
  const std::string corpus = write_file(
      "corpus.txt",
      "kind=random_small labels=2 seed=1 base_vars=4 base_edges=3 aux_vars=1\n"
      "# a comment line\n"
      "kind=random_small labels=2 seed=2 base_vars=4 base_edges=3 aux_vars=1\n");
  const std::string csv = (scratch() / "report.csv").string();
  const RunResult file_run = run("compare " + corpus + " --csv " + csv);
  CHECK(file_run.exit_code == 0);
  CHECK(file_run.output.find("instances: 2") != std::string::npos);
  CHECK(slurp(csv).rfind("algorithm,", 0) == 0);

  const fs::path dir = scratch() / "corpus-dir";
  fs::create_directories(dir);
  for (int seed = 1; seed <= 2; ++seed) {
    const std::string spec = write_file(
        "dir-" + std::to_string(seed) + ".spec",
        "kind=random_small labels=2 seed=" + std::to_string(seed) +
            " base_vars=4 base_edges=3 aux_vars=1\n");
    REQUIRE(run("gen " + spec + " --out " +
                (dir / ("net" + std::to_string(seed) + ".ahn")).string())
                .exit_code == 0);
  }
  const RunResult dir_run = run("compare " + dir.string() + " --algorithms expansion,icm");
  CHECK(dir_run.exit_code == 0);
  CHECK(dir_run.output.find("instances: 2") != std::string::npos);
  CHECK(dir_run.output.find("icm") != std::string::npos);

  const RunResult too_few = run("compare " + dir.string() + " --algorithms icm");
  CHECK(too_few.exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("frobnicate x").exit_code == 2);
  CHECK(run("solve").exit_code == 2);
  const std::string net = write_file("clique4.ahn", kCliqueNet);
  CHECK(run("solve " + net + " --algorithm simulated-annealing").exit_code == 2);
  CHECK(run("solve " + net + " --init uniform:x").exit_code == 2);
  CHECK(run("validate " + scratch().string() + "/does-not-exist.ahn").exit_code == 2);
}
