#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rsos/cli.hpp"

using namespace rsos;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string spec(const char* name) { return std::string(RSOS_SPEC_DIR) + "/" + name + ".rs-spec"; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("run: the classic reading of the running example") {
  const auto r = cli({"run", spec("example1"), "P0", "--steps", "4"});
  CHECK(r.code == exit_ok);
  CHECK(contains(r.out, "initial: #0 [([a,b] -| [c] -> [b]) | {a,b}.{a}.{c}.{c}.0]\n"));
  CHECK(contains(r.out, "step 1: #0 --- a,b |> a,b ; c ; b ---> #1"));
  CHECK(contains(r.out, "states: {a,b} {a,b} {b,c} {c}\n"));
  CHECK(contains(r.out, "results: {} {b} {b} {}\n"));
  CHECK(contains(cli({"run", spec("example1"), "P0"}).out, "DEADLOCK #4\n"));
}

TEST_CASE("run: zero steps prints only the initial state") {
  const auto r = cli({"run", spec("example1"), "P0", "--steps", "0"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "initial: #0 [([a,b] -| [c] -> [b]) | {a,b}.{a}.{c}.{c}.0]\n");
}

TEST_CASE("run: a deadlocked system") {
  const auto r = cli({"run", spec("example1"), "P4"});
  CHECK(r.code == exit_ok);
  CHECK(contains(r.out, "DEADLOCK #0"));
}

TEST_CASE("run: a link") {
  const auto r = cli({"run", spec("connector"), "Linked"});
  CHECK(r.code == exit_ok);
  CHECK(contains(r.out, "<{c}>"));
  CHECK(contains(r.out, "DEADLOCK"));
}

TEST_CASE("run: unknown system") {
  const auto r = cli({"run", spec("example1"), "Nope"});
  CHECK(r.code == exit_usage);
  CHECK(contains(r.err, "Nope"));
}

TEST_CASE("lts summaries and exports") {
  const auto r = cli({"lts", spec("example1"), "P0"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "states=5 transitions=4 deadlocks=1\n");

  const auto raw = cli({"lts", spec("example1"), "P3", "--mode", "raw"});
  CHECK(raw.out == "states=2 transitions=7 deadlocks=1\n");

  CHECK(cli({"lts", spec("recursion"), "Loop"}).out == "states=3 transitions=3 deadlocks=0\n");

  const auto dir = std::filesystem::temp_directory_path() / "rsos_cli_test";
  std::filesystem::create_directories(dir);
  const auto dot = (dir / "p0.dot").string(), json = (dir / "p0.json").string();
  CHECK(cli({"lts", spec("example1"), "P0", "--dot", dot, "--json", json}).code == exit_ok);
  std::ifstream dot_in(dot), json_in(json);
  std::stringstream dot_text;
  dot_text << dot_in.rdbuf();
  CHECK(dot_text.str().rfind("digraph lts {", 0) == 0);
  const auto doc = nlohmann::json::parse(json_in);
  CHECK(doc["transitions"].size() == 4);
  std::filesystem::remove_all(dir);

  CHECK(cli({"lts", spec("example1"), "Nope"}).code == exit_usage);
  CHECK(cli({"lts", spec("example1"), "P0", "--mode", "fast"}).code == exit_usage);
}

TEST_CASE("lts: limit exceeded") {
  ::setenv("RSOS_MAX_STATES", "2", 1);
  const auto r = cli({"lts", spec("example1"), "P0"});
  ::unsetenv("RSOS_MAX_STATES");
  CHECK(r.code == exit_limit);
  CHECK(contains(r.err, "max_states"));
}

TEST_CASE("bisim") {
  const auto no = cli({"bisim", spec("biobis"), "P0", "P0'", "--assert", "F1"});
  CHECK(no.code == exit_false);
  CHECK(contains(no.out, "NOT BISIMILAR\nformula: "));
  CHECK(contains(no.out, "P0 satisfies it, P0' does not"));

  const auto yes = cli({"bisim", spec("biobis"), "P0", "P0'", "--assert", "F2"});
  CHECK(yes.code == exit_ok);
  CHECK(yes.out == "BISIMILAR\n");

  CHECK(cli({"bisim", spec("biobis"), "P0", "P0", "--assert", "F1"}).code == exit_ok);
  CHECK(cli({"bisim", spec("biobis"), "P0", "P0'"}).code == exit_usage);  // two assertions, none chosen
  CHECK(cli({"bisim", spec("biobis"), "P0", "P0'", "--assert", "F9"}).code == exit_usage);
}

TEST_CASE("check") {
  CHECK(cli({"check", spec("biobis"), "P0", "G"}).out == "UNSAT\n");
  CHECK(cli({"check", spec("biobis"), "P0", "G"}).code == exit_false);
  CHECK(cli({"check", spec("biobis"), "P0'", "G"}).out == "SAT\n");
  CHECK(cli({"check", spec("biobis"), "P0'", "G", "--assert", "F1", "--box", "strict"}).code == exit_ok);
  CHECK(cli({"check", spec("biobis"), "P0", "T", "--assert", "F2"}).code == exit_ok);
  CHECK(cli({"check", spec("biobis"), "P0", "G", "--assert", "F2"}).code == exit_usage);
  CHECK(cli({"check", spec("biobis"), "P0", "H"}).code == exit_usage);
}

TEST_CASE("quant") {
  const auto r = cli({"quant", spec("hsf"), "HSF"});
  CHECK(r.code == exit_false);
  CHECK(contains(r.out, "step 0: hsf: 3 <= x\n"));
  CHECK(contains(r.out, "step 1: hsf: 3 <= 2 (VIOLATED)\n"));
  CHECK(contains(r.out, "infeasible\n"));

  const auto v = cli({"quant", spec("hsf"), "HSF", "--valuation", "x=5"});
  CHECK(v.code == exit_false);
  CHECK(contains(v.out, "step 0: hsf: 3 <= x (ok)\n"));
  CHECK(contains(v.out, "step 1: hsf: 3 <= 2 (VIOLATED)\n"));

  const auto none = cli({"quant", spec("example1"), "P0"});
  CHECK(none.code == exit_ok);
  CHECK(contains(none.out, "no constraints\n"));

  CHECK(cli({"quant", spec("hsf"), "HSF", "--valuation", "y=5"}).code == exit_usage);
  CHECK(cli({"quant", spec("hsf"), "HSF", "--valuation", "x"}).code == exit_usage);
}

TEST_CASE("usage and parse errors") {
  CHECK(cli({}).code == exit_usage);
  CHECK(cli({"frobnicate"}).code == exit_usage);
  CHECK(cli({"run", "/nonexistent.rs-spec", "P0"}).code == exit_usage);

  const auto path = (std::filesystem::temp_directory_path() / "rsos_bad.rs-spec").string();
  {
    std::ofstream f(path);
    f << "entities a;\nreaction bad: [a] -| [a] -> [a];\n";
  }
  const auto r = cli({"run", path, "P"});
  CHECK(r.code == exit_usage);
  CHECK(contains(r.err, "2:"));
  CHECK(contains(r.err, "ReactionInvariantViolation"));
  std::filesystem::remove(path);
}

TEST_CASE("outputs are deterministic") {
  for (int k = 0; k < 3; ++k) {
    CHECK(cli({"bisim", spec("biobis"), "P0", "P0'", "--assert", "F1"}).out ==
          cli({"bisim", spec("biobis"), "P0", "P0'", "--assert", "F1"}).out);
    CHECK(cli({"run", spec("recursion"), "Choice", "--steps", "6"}).out ==
          cli({"run", spec("recursion"), "Choice", "--steps", "6"}).out);
  }
}
