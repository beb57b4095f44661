// Parser unit tests plus the exit-code contract of the command-line
// tool.  Expects two arguments: the tool binary and the fixture
// directory.
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "filaff/algebra_file.hpp"
#include "filaff/filiform.hpp"

#include "json.hpp"

#include <cstdio>
#include <sstream>
#include <string>

using namespace filaff;

namespace {

std::string g_binary;
std::string g_fixtures;

struct RunResult {
  int rc = -1;
  std::string out;
};

// Runs the tool with the given (pre-quoted) argument string, capturing
// standard output; standard error is discarded.
RunResult run_tool(const std::string& args) {
  const std::string cmd = g_binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
    r.out.append(buf, got);
  const int status = pclose(pipe);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) {
  return g_fixtures + "/" + name;
}

AlgebraFile parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_algebra_file(in);
}

int error_line(const std::string& text) {
  try {
    parse_text(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("algebra file parsing") {
  SUBCASE("full document") {
    const AlgebraFile f = parse_text(
        "# leading comment\n"
        "n: 9\n"
        "label: my algebra\n"
        "seed: 42\n"
        "alpha:\n"
        "  2,5: 1\n"
        "  3,7: -2/3   # trailing comment\n"
        "\n");
    CHECK(f.n == 9);
    CHECK(f.label == "my algebra");
    CHECK(f.seed == 42);
    CHECK(f.alpha.size() == 2);
    CHECK(f.alpha.at("3,7") == "-2/3");
    const FiliformParams p = to_params(f);
    CHECK(p.alpha.at({2, 5}) == 1);
    CHECK(p.alpha.at({3, 7}) == Rational(-2, 3));
  }

  SUBCASE("minimal document and zero entries") {
    const AlgebraFile f = parse_text("n: 5\nalpha:\n  2,5: 0\n");
    CHECK(!f.label.has_value());
    CHECK(!f.seed.has_value());
    // explicit zeros are dropped on conversion
    CHECK(to_params(f).alpha.empty());
  }

  SUBCASE("diagnostics carry the offending line") {
    CHECK(error_line("n: 6\nwat: 1\n") == 2);
    CHECK(error_line("n: 6\nalpha:\n  25: 1\n") == 3);
    CHECK(error_line("n: 6\nalpha:\n  2,5: x\n") == 3);
    CHECK(error_line("n: 6\nalpha:\n  2,5: 1/0\n") == 3);
    CHECK(error_line("n: 6\nalpha:\n  2,5: 1\n  2,5: 2\n") == 4);
    CHECK(error_line("n: six\n") == 1);
    CHECK(error_line("just words\n") == 1);
    CHECK(error_line("label: no dimension\n") == 1);  // missing n
    CHECK(error_line("n: 2\n") == 1);                 // n too small
    CHECK(error_line("alpha: 3\n") == 1);  // block marker with a value
  }

  SUBCASE("key admissibility is checked on conversion") {
    const AlgebraFile f = parse_text("n: 6\nalpha:\n  2,4: 1\n");
    CHECK_THROWS_AS(to_params(f), ParseError);
    const AlgebraFile g = parse_text("n: 6\nalpha:\n  4,9: 1\n");
    CHECK_THROWS_AS(to_params(g), ParseError);
  }

  SUBCASE("formatting round-trips") {
    FiliformParams p;
    p.n = 9;
    p.alpha[{2, 5}] = Rational(1, 2);
    p.alpha[{4, 9}] = Rational(-3);
    const std::string text = format_algebra_file(p, "roundtrip", 7);
    const AlgebraFile f = parse_text(text);
    CHECK(f.label == "roundtrip");
    CHECK(f.seed == 7);
    const FiliformParams q = to_params(f);
    CHECK(q.n == p.n);
    CHECK(q.alpha == p.alpha);
  }
}

TEST_CASE("tool exit codes and reports") {
  SUBCASE("reports on valid inputs") {
    const RunResult betti = run_tool("betti " + fixture("l3.alg"));
    CHECK(betti.rc == 0);
    CHECK(betti.out == "betti: 1 2 2 1\n");

    const RunResult cls = run_tool("classify " + fixture("l5.alg"));
    CHECK(cls.rc == 0);
    CHECK(cls.out == "A_5\n");

    const RunResult cls9 = run_tool("classify " + fixture("a93.alg"));
    CHECK(cls9.rc == 0);
    CHECK(cls9.out == "A_{9,3}\n");

    const RunResult mu = run_tool("mu-abelian 10");
    CHECK(mu.rc == 0);
    CHECK(mu.out == "6\n");
  }

  SUBCASE("property-false results exit 1") {
    const RunResult jac = run_tool("jacobi " + fixture("bad_jacobi.alg"));
    CHECK(jac.rc == 1);
    CHECK(jac.out.find("defects: 1") == 0);

    CHECK(run_tool("affine " + fixture("a61.alg")).rc == 1);
    CHECK(run_tool("lsa " + fixture("a61.alg")).rc == 1);
    CHECK(run_tool("extend " + fixture("a61.alg")).rc == 1);
    CHECK(run_tool("witness 'A_{9,7}'").rc == 1);  // no such class
  }

  SUBCASE("input errors exit 2") {
    CHECK(run_tool("classify " + fixture("bad_jacobi.alg")).rc == 2);
    CHECK(run_tool("classify " + fixture("bad_key.alg")).rc == 2);
    CHECK(run_tool("classify " + fixture("bad_pair.alg")).rc == 2);
    CHECK(run_tool("classify " + fixture("bad_rational.alg")).rc == 2);
    CHECK(run_tool("betti " + fixture("no_such_file.alg")).rc == 2);
    CHECK(run_tool("frobnicate x").rc == 2);
    CHECK(run_tool("extended 11").rc == 2);
    CHECK(run_tool("mu-abelian 0").rc == 2);
  }

  SUBCASE("affine and jacobi success paths exit 0") {
    const RunResult aff = run_tool("affine " + fixture("l5.alg"));
    CHECK(aff.rc == 0);
    CHECK(aff.out.find("affine: true") == 0);
    CHECK(run_tool("jacobi " + fixture("a93.alg")).rc == 0);
  }

  SUBCASE("witness output is itself a valid input file") {
    const RunResult w = run_tool("witness 'A_{9,2}' --seed 3");
    REQUIRE(w.rc == 0);
    const AlgebraFile f = parse_text(w.out);
    CHECK(f.n == 9);
    CHECK(f.label == "A_{9,2}");
    CHECK(classify(to_params(f)) == "A_{9,2}");
  }

  SUBCASE("json output is well-formed") {
    const RunResult betti =
        run_tool("betti " + fixture("l3.alg") + " --format json");
    REQUIRE(betti.rc == 0);
    const auto parsed = nlohmann::json::parse(betti.out);
    CHECK(parsed["betti"] == nlohmann::json({1, 2, 2, 1}));

    const RunResult lsa =
        run_tool("lsa " + fixture("l3.alg") + " --format json");
    REQUIRE(lsa.rc == 0);
    CHECK(nlohmann::json::parse(lsa.out)["verified"] == true);
  }

  SUBCASE("narrow table runs clean") {
    const RunResult t = run_tool("table --min 3 --max 6");
    CHECK(t.rc == 0);
    // header plus five classes in range
    CHECK(t.out.find("A_{6,1}") != std::string::npos);
    CHECK(t.out.find("no-witness") == std::string::npos);
    const RunResult tj = run_tool("table --min 3 --max 6 --format json");
    REQUIRE(tj.rc == 0);
    CHECK(nlohmann::json::parse(tj.out)["all_ok"] == true);
  }
}

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr,
                 "usage: test_cli <tool-binary> <fixture-dir> [doctest args]\n");
    return 1;
  }
  g_binary = argv[1];
  g_fixtures = argv[2];
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
