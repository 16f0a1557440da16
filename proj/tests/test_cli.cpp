#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "atgp/instance_io.hpp"
#include "fixtures.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "atgp_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  fs::path out_file = work_dir() / "stdout.txt";
  std::string cmd = std::string(ATGP_CLI_PATH) + " " + args + " > " + out_file.string() + " 2> " +
                    (work_dir() / "stderr.txt").string();
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream f(out_file);
  std::ostringstream ss;
  ss << f.rdbuf();
  return {code, ss.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path p = work_dir() / name;
  std::ofstream f(p);
  f << text;
  return p.string();
}

}  // namespace

TEST_CASE("cli: solve a fixture with certification") {
  std::string inst = write_file("t1.json", atgp::serialize_instance(atgp::testing::t1(), {"T1", {}}));
  RunResult r = run("solve " + inst + " --certify");
  CHECK(r.exit_code == 0);
  atgp::SolutionDocument doc = atgp::parse_solution_text(r.out);
  REQUIRE(doc.guards.size() == 2);
  CHECK(doc.guards[0] == atgp::testing::rat("5/2"));
  CHECK(doc.guards[1] == atgp::Rational(8));
  CHECK(doc.valid);
}

TEST_CASE("cli: verify accepts the solver's output and rejects tampering") {
  std::string inst = write_file("t1v.json", atgp::serialize_instance(atgp::testing::t1()));
  std::string sol = (work_dir() / "t1v.sol.json").string();
  CHECK(run("solve " + inst + " --out " + sol).exit_code == 0);
  CHECK(run("verify " + inst + " " + sol).exit_code == 0);

  // tamper: drop a guard
  std::ifstream f(sol);
  std::ostringstream ss;
  ss << f.rdbuf();
  std::string text = ss.str();
  auto pos = text.find("\"5/2\",");
  REQUIRE(pos != std::string::npos);
  text.erase(pos, 7);
  std::string tampered = write_file("tampered.json", text);
  CHECK(run("verify " + inst + " " + tampered).exit_code == 3);
}

TEST_CASE("cli: invalid instances exit with code 2") {
  std::string bad = write_file("bad.json", R"({"format":"atgp-v1","vertices":[[0,0],[0,1]],"altitude":5})");
  CHECK(run("solve " + bad).exit_code == 2);
  std::string unknown = write_file("unknown.json", R"({"format":"nope","vertices":[[0,0],[1,1]]})");
  CHECK(run("solve " + unknown).exit_code == 2);
  CHECK(run("gen --n 1").exit_code == 2);
}

TEST_CASE("cli: gen | solve - pipeline") {
  fs::path gen_file = work_dir() / "gen50.json";
  CHECK(run("gen --n 50 --seed 9 --out " + gen_file.string()).exit_code == 0);
  RunResult r = run("solve " + gen_file.string() + " --certify < " + gen_file.string());
  CHECK(r.exit_code == 0);
  // literal pipe through stdin
  std::string cmd = std::string(ATGP_CLI_PATH) + " gen --n 50 --seed 9 | " + ATGP_CLI_PATH +
                    " solve - --certify > " + (work_dir() / "pipe.json").string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 0);
}

TEST_CASE("cli: polygon input reports back-mapped guards") {
  std::string poly = write_file(
      "poly.json",
      atgp::serialize_polygon(atgp::PolygonRing{{atgp::testing::pt(0, 0), atgp::testing::pt(8, 0),
                                                 atgp::testing::pt(8, 1), atgp::testing::pt(0, 1)}}));
  RunResult r = run("solve " + poly);
  CHECK(r.exit_code == 0);
  atgp::SolutionDocument doc = atgp::parse_solution_text(r.out);
  REQUIRE(doc.guards.size() == 1);
  REQUIRE(doc.polygon_guards.size() == 1);
  CHECK(doc.polygon_guards[0].y == atgp::Rational(1));
}

TEST_CASE("cli: render writes an svg document") {
  std::string inst = write_file("t1r.json", atgp::serialize_instance(atgp::testing::t1()));
  fs::path svg = work_dir() / "t1.svg";
  CHECK(run("solve " + inst + " --render " + svg.string() + " --out " +
            (work_dir() / "t1r.sol.json").string())
            .exit_code == 0);
  std::ifstream f(svg);
  std::ostringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().find("<svg") == 0);
  CHECK(ss.str().find("class=\"guard\"") != std::string::npos);
}

TEST_CASE("cli: profile prints one row per height") {
  std::string inst = write_file("t1p.json", atgp::serialize_instance(atgp::testing::t1()));
  RunResult r = run("profile " + inst + " --heights 5,100");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("5\t2") != std::string::npos);
  CHECK(r.out.find("100\t1") != std::string::npos);
  CHECK(run("profile " + inst + " --heights 3").exit_code == 2);
}

TEST_CASE("cli: bench runs on small sizes") {
  RunResult r = run("bench --sizes 50,100 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("50\t") != std::string::npos);
  CHECK(r.out.find("100\t") != std::string::npos);
}
