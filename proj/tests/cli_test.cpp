#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "fano/io.hpp"
#include "json.hpp"

namespace {

std::string fano_bin() {
  const char* bin = std::getenv("FANO_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "FANO_BIN must point at the CLI binary");
  return bin;
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// run the CLI with the given arguments; env may carry VAR=VALUE prefixes
RunResult run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  std::string of = "cli_out_" + std::to_string(counter) + ".txt";
  std::string ef = "cli_err_" + std::to_string(counter) + ".txt";
  ++counter;
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += "'" + fano_bin() + "' " + args + " >" + of + " 2>" + ef;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(of);
  r.err = slurp(ef);
  std::remove(of.c_str());
  std::remove(ef.c_str());
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// shared artifacts, generated once per binary run
const std::string& reflexive2_file() {
  static std::string path = [] {
    auto r = run("reflexive --dim 2 --out cli_r2.txt");
    REQUIRE(r.code == 0);
    return std::string("cli_r2.txt");
  }();
  return path;
}

const std::string& classified2_file() {
  static std::string path = [] {
    auto r = run("classify --dim 2 --out cli_f2.txt --jobs 1");
    REQUIRE(r.code == 0);
    return std::string("cli_f2.txt");
  }();
  return path;
}

const std::string& classified3_file() {
  static std::string path = [] {
    auto r = run("classify --dim 3 --out cli_f3.txt --jobs 1");
    REQUIRE(r.code == 0);
    REQUIRE(contains(r.out, "unique classes: 18"));
    return std::string("cli_f3.txt");
  }();
  return path;
}

}  // namespace

TEST_CASE("reflexive enumeration counts and refusal above dimension two") {
  auto r1 = run("reflexive --dim 1 --out cli_r1.txt");
  CHECK(r1.code == 0);
  CHECK(contains(r1.out, "reflexive classes (dim 1): 1"));
  CHECK(fano::read_vertex_blocks("cli_r1.txt").size() == 1);

  CHECK(fano::read_vertex_blocks(reflexive2_file()).size() == 16);

  auto r3 = run("reflexive --dim 3 --out cli_r3.txt");
  CHECK(r3.code == 1);
  CHECK(contains(r3.err, "import a database"));
}

TEST_CASE("classify prints stage counters and writes a manifest") {
  auto r = run("classify --dim 2 --out cli_f2b.txt --jobs 1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "inputs: 1"));
  CHECK(contains(r.out, "admissible inputs: 1"));
  CHECK(contains(r.out, "candidates:"));
  CHECK(contains(r.out, "fano survivors:"));
  CHECK(contains(r.out, "unique classes: 5"));
  CHECK(fano::read_vertex_blocks("cli_f2b.txt").size() == 5);

  auto j = nlohmann::json::parse(slurp("cli_f2b.txt.manifest.json"));
  CHECK(j["outputs"]["classes"] == 5);
  CHECK(j["outputs"]["inputs"] == 1);
  CHECK(j["workers"] == 1);
  CHECK(j["version"] == std::string(fano::kVersion));
  CHECK(contains(j["command"].get<std::string>(), "classify --dim 2"));
  std::remove("cli_f2b.txt");
  std::remove("cli_f2b.txt.manifest.json");
}

TEST_CASE("classify accepts an imported reflexive database") {
  auto r = run("classify --dim 3 --reflexive-db " + reflexive2_file() +
               " --out cli_f3db.txt --jobs 1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "unique classes: 18"));
  CHECK(slurp("cli_f3db.txt") == slurp(classified3_file()));

  auto j = nlohmann::json::parse(slurp("cli_f3db.txt.manifest.json"));
  REQUIRE(j["inputs"].size() == 1);
  CHECK(j["inputs"][0]["fnv1a"] == fano::hash_file(reflexive2_file()));
  std::remove("cli_f3db.txt");
  std::remove("cli_f3db.txt.manifest.json");

  // a database of the wrong dimension is a user error
  auto bad = run("classify --dim 3 --reflexive-db cli_r1.txt --out cli_x.txt");
  CHECK(bad.code == 1);

  auto missing = run("classify --dim 4 --out cli_x.txt");
  CHECK(missing.code == 1);
  CHECK(contains(missing.err, "--reflexive-db"));
}

TEST_CASE("oracle and classify agree through diff") {
  auto o2 = run("oracle --dim 2 --out cli_o2.txt --jobs 1");
  CHECK(o2.code == 0);
  CHECK(contains(o2.out, "(dim 2): 5"));
  auto d2 = run("diff " + classified2_file() + " cli_o2.txt");
  CHECK(d2.code == 0);
  CHECK(contains(d2.out, "identical key sets (5 classes)"));

  auto o3 = run("oracle --dim 3 --out cli_o3.txt --jobs 2");
  CHECK(o3.code == 0);
  auto d3 = run("diff " + classified3_file() + " cli_o3.txt");
  CHECK(d3.code == 0);
  CHECK(contains(d3.out, "identical key sets (18 classes)"));
  std::remove("cli_o3.txt");

  auto off = run("diff " + classified2_file() + " cli_o2.txt");
  CHECK(off.code == 0);
  auto mixed = run("diff cli_o2.txt " + classified3_file());
  CHECK(mixed.code == 1);
  CHECK(contains(mixed.out, "< "));
  CHECK(contains(mixed.out, "> "));
  std::remove("cli_o2.txt");
}

TEST_CASE("normal-form prints one canonical key per block") {
  {
    std::ofstream f("cli_nf_in.txt");
    f << "2 3\n1 0\n0 1\n-1 -1\n\n2 3\n0 1\n1 0\n-1 -1\n";
  }
  auto r = run("normal-form cli_nf_in.txt");
  CHECK(r.code == 0);
  CHECK(r.out == "2 3 1 0 -1;0 1 -1\n2 3 1 0 -1;0 1 -1\n");

  {
    std::ofstream f("cli_nf_t.txt");
    f << "2 3\n1 0 -1\n0 1 -1\n";
  }
  auto t = run("normal-form cli_nf_t.txt --transpose");
  CHECK(t.code == 0);
  CHECK(t.out == "2 3 1 0 -1;0 1 -1\n");
  std::remove("cli_nf_in.txt");
  std::remove("cli_nf_t.txt");
}

TEST_CASE("stats prints the summary and the csv schema") {
  auto s = run("stats " + classified2_file());
  CHECK(s.code == 0);
  CHECK(contains(s.out, "dimension 2: 5 classes"));
  CHECK(contains(s.out, "max degree    9 (1 class)"));

  auto c = run("stats " + classified2_file() + " --csv");
  CHECK(c.code == 0);
  CHECK(c.out.rfind("key,dim,vertices,facets,picard,degree,h0,max_edge,index,ewald\n",
                    0) == 0);
  CHECK(contains(c.out, ",2,3,3,1,9,10,3,3,true"));
}

TEST_CASE("verify passes classified output and rejects non-simplicial input") {
  auto v = run("verify " + classified3_file() + " --jobs 2");
  CHECK(v.code == 0);
  CHECK(contains(v.out, "all checks passed over 18 classes"));
  CHECK(contains(v.out, "0 failed"));

  // every polygon is simplicial, so the full reflexive list verifies too
  auto all2 = run("verify " + reflexive2_file());
  CHECK(all2.code == 0);

  // the cube is reflexive but not simplicial: a user error
  {
    std::ofstream f("cli_cube.txt");
    f << "3 8\n";
    for (int s : {1, -1})
      for (int t : {1, -1})
        for (int u : {1, -1}) f << s << " " << t << " " << u << "\n";
  }
  auto bad = run("verify cli_cube.txt");
  CHECK(bad.code == 1);
  CHECK(contains(bad.err, "simplicial"));
  std::remove("cli_cube.txt");
}

TEST_CASE("equal inputs give byte-identical outputs whatever the schedule") {
  auto a = run("classify --dim 3 --out cli_det_a.txt --jobs 1");
  auto b = run("classify --dim 3 --out cli_det_b.txt --jobs 4");
  auto c = run("classify --dim 3 --out cli_det_c.txt", "FANO_JOBS=2");
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(c.code == 0);
  auto bytes = slurp("cli_det_a.txt");
  CHECK(bytes == slurp("cli_det_b.txt"));
  CHECK(bytes == slurp("cli_det_c.txt"));
  CHECK(!bytes.empty());
  for (const char* f : {"cli_det_a.txt", "cli_det_b.txt", "cli_det_c.txt"}) {
    std::remove(f);
    std::remove((std::string(f) + ".manifest.json").c_str());
  }

  auto bad_env = run("classify --dim 2 --out cli_x.txt", "FANO_JOBS=soon");
  CHECK(bad_env.code == 1);
}

TEST_CASE("argument errors exit with code one, help with zero") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("reflexive --dim 2").code == 1);       // --out missing
  CHECK(run("normal-form cli_absent.txt").code == 1);
  CHECK(run("--help").code == 0);
  {
    std::ofstream f("cli_bad.txt");
    f << "2 2\n1 0\nx y\n";
  }
  auto bad = run("normal-form cli_bad.txt");
  CHECK(bad.code == 1);
  CHECK(contains(bad.err, "line 3"));
  std::remove("cli_bad.txt");
}

TEST_CASE("cleanup of shared artifacts") {
  // not a check; drops the files the earlier cases shared
  std::remove("cli_r1.txt");
  std::remove(reflexive2_file().c_str());
  std::remove(classified2_file().c_str());
  std::remove((classified2_file() + ".manifest.json").c_str());
  std::remove(classified3_file().c_str());
  std::remove((classified3_file() + ".manifest.json").c_str());
  CHECK(true);
}
