#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(STAIRPRUNE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  result.exit_code = WEXITSTATUS(status);
  return result;
}

// one scratch directory with all the fixture files, built on first use
const fs::path& fixture_dir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "stairprune_cli_fixtures";
    fs::create_directories(d);
    auto put = [&](const char* name, const std::string& text) {
      std::ofstream out(d / name, std::ios::binary);
      out << text;
    };
    put("far.json",
        "{\"dim\":2,\"summands\":[{\"generators\":[[\"0\",\"10\"]]},"
        "{\"generators\":[[\"10\",\"0\"]]}]}");
    put("diag_m.json",
        "{\"dim\":2,\"summands\":[{\"generators\":[[\"2\",\"2\"]]},"
        "{\"generators\":[[\"4\",\"4\"]]},{\"generators\":[[\"6\",\"6\"]]}]}");
    put("diag_n.json",
        "{\"dim\":2,\"summands\":[{\"generators\":[[\"7\",\"7\"]]},"
        "{\"generators\":[[\"7\",\"7\"]]},{\"generators\":[[\"7\",\"7\"]]}]}");
    put("corner.json", "{\"dim\":2,\"summands\":[{\"generators\":[[\"0\",\"0\"]]}]}");
    put("line.json", "{\"dim\":1,\"summands\":[{\"generators\":[[\"0\"]]}]}");
    // two summands, so count checks pass and the dimension mismatch surfaces
    put("threed.json",
        "{\"dim\":3,\"summands\":[{\"generators\":[[\"0\",\"0\",\"0\"]]},"
        "{\"generators\":[[\"1\",\"1\",\"1\"]]}]}");
    put("bad.json", "{\"dim\":2,");
    return d;
  }();
  return dir;
}

std::string fixture(const char* name) { return (fixture_dir() / name).string(); }

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("gen is deterministic and honours its knobs") {
    const auto r = run_cli("gen --seed 42 --r 2 --dim 2 --gens 2 --coord-bound 9");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "{\"dim\":2,\"summands\":[{\"generators\":[[\"-5\",\"4\"]]},"
          "{\"generators\":[[\"0\",\"7\"],[\"6\",\"-6\"]]}]}\n");
    CHECK(run_cli("gen --seed 42 --r 2 --dim 2 --gens 2 --coord-bound 9").output == r.output);

    const auto defaults = run_cli("gen");
    CHECK(defaults.exit_code == 0);
    CHECK(defaults.output.rfind("{\"dim\":2,", 0) == 0);
  }

  TEST_CASE("prune moves isolated summands and leaves scale zero alone") {
    const auto pruned = run_cli("prune " + fixture("far.json") + " --alpha 1");
    CHECK(pruned.exit_code == 0);
    CHECK(pruned.output ==
          "{\"dim\":2,\"summands\":[{\"generators\":[[\"1\",\"11\"]]},"
          "{\"generators\":[[\"11\",\"1\"]]}]}\n");

    const auto same = run_cli("prune " + fixture("far.json") + " --alpha 0");
    CHECK(same.exit_code == 0);
    CHECK(same.output == slurp(fixture("far.json")) + "\n");
  }

  TEST_CASE("prune writes to a file with -o") {
    const fs::path out = fixture_dir() / "pruned_out.json";
    fs::remove(out);
    const auto r = run_cli("prune " + fixture("far.json") + " --alpha 1 -o " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    CHECK(slurp(out) ==
          "{\"dim\":2,\"summands\":[{\"generators\":[[\"1\",\"11\"]]},"
          "{\"generators\":[[\"11\",\"1\"]]}]}\n");
  }

  TEST_CASE("the three distances on the diagonal family") {
    const std::string pair = fixture("diag_m.json") + " " + fixture("diag_n.json");
    const auto dp = run_cli("dp " + pair + " --exact");
    CHECK(dp.exit_code == 0);
    CHECK(dp.output == "1\n");

    const auto db = run_cli("db " + pair);
    CHECK(db.exit_code == 0);
    CHECK(db.output == "5\n");

    const auto di = run_cli("di " + pair);
    CHECK(di.exit_code == 0);
    CHECK(di.output == "5\n");

    const auto di3 = run_cli("di " + pair + " --field f3 --max-r 3");
    CHECK(di3.exit_code == 0);
    CHECK(di3.output == "5\n");
  }

  TEST_CASE("bisection output carries a bracket") {
    const auto dp = run_cli("dp " + fixture("diag_m.json") + " " + fixture("diag_n.json") +
                            " --tol 1/64");
    CHECK(dp.exit_code == 0);
    CHECK(dp.output.rfind("≈ ", 0) == 0);
    CHECK(dp.output.find('[') != std::string::npos);
  }

  TEST_CASE("mismatched summand counts print inf") {
    const auto db = run_cli("db " + fixture("diag_m.json") + " " + fixture("far.json"));
    CHECK(db.exit_code == 0);
    CHECK(db.output == "inf\n");
  }

  TEST_CASE("graph emits DOT") {
    const auto g = run_cli("graph " + fixture("far.json") + " --alpha 1 --dot");
    CHECK(g.exit_code == 0);
    CHECK(g.output ==
          "digraph G {\n"
          "  \"M1\";\n"
          "  \"M2\";\n"
          "  \"M1\" -> \"M1\" [label=\"t=0\"];\n"
          "  \"M2\" -> \"M2\" [label=\"t=0\"];\n"
          "}\n");
  }

  TEST_CASE("plot emits the fixed corner SVG") {
    const auto p = run_cli("plot " + fixture("corner.json"));
    CHECK(p.exit_code == 0);
    CHECK(p.output ==
          "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"80.000\" "
          "height=\"80.000\" viewBox=\"0 0 80.000 80.000\">\n"
          "  <rect x=\"0\" y=\"0\" width=\"80.000\" height=\"80.000\" fill=\"white\"/>\n"
          "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" "
          "points=\"40.000,0.000 40.000,40.000 80.000,40.000\"/>\n"
          "</svg>\n");
  }

  TEST_CASE("parse failures exit with code 2") {
    CHECK(run_cli("prune " + fixture("bad.json") + " --alpha 1").exit_code == 2);
    CHECK(run_cli("prune " + fixture_dir().string() + "/missing.json --alpha 1").exit_code == 2);
    CHECK(run_cli("prune " + fixture("far.json") + " --alpha 1/x").exit_code == 2);
  }

  TEST_CASE("validation failures exit with code 3") {
    CHECK(run_cli("prune " + fixture("far.json") + " --alpha -1").exit_code == 3);
    CHECK(run_cli("plot " + fixture("line.json")).exit_code == 3);
    CHECK(run_cli("db " + fixture("far.json") + " " + fixture("threed.json")).exit_code == 3);
    CHECK(run_cli("dp " + fixture("far.json") + " " + fixture("far.json") + " --tol 0").exit_code ==
          3);
    CHECK(run_cli("di " + fixture("diag_m.json") + " " + fixture("diag_n.json") + " --max-r 2")
              .exit_code == 3);
  }

  TEST_CASE("usage errors are nonzero and do not crash") {
    CHECK(run_cli("frobnicate").exit_code != 0);
    CHECK(run_cli("prune").exit_code != 0);
    CHECK(run_cli("").exit_code != 0);
  }

  TEST_CASE("verify runs every built-in check and passes") {
    const auto v = run_cli("verify");
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("FAIL") == std::string::npos);
    CHECK(v.output.find("ok   ") != std::string::npos);
    CHECK(v.output.find("all checks passed\n") != std::string::npos);
  }
}
