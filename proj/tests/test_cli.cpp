#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef FUZZTOP_CLI_PATH
#error "FUZZTOP_CLI_PATH must be defined by the build"
#endif
#ifndef FUZZTOP_FIXTURE_DIR
#error "FUZZTOP_FIXTURE_DIR must be defined by the build"
#endif
#ifndef FUZZTOP_TEST_DATA_DIR
#error "FUZZTOP_TEST_DATA_DIR must be defined by the build"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string capture =
      "cli_capture_" + std::to_string(counter++) + ".txt";
  std::string cmd = std::string(FUZZTOP_CLI_PATH) + " " + args + " > " +
                    capture + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream in(capture);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(capture.c_str());
#ifdef _WIN32
  int code = rc;
#else
  int code = WEXITSTATUS(rc);
#endif
  return {code, ss.str()};
}

const std::string kFixture =
    std::string(FUZZTOP_FIXTURE_DIR) + "/two_point.space";
const std::string kData = FUZZTOP_TEST_DATA_DIR;

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("validate: valid file exits 0") {
  RunResult r = run_cli("validate " + kFixture);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "valid"));
}

TEST_CASE("validate: missing 1_X exits 2 and names the axiom") {
  RunResult r = run_cli("validate " + kData + "/missing_top.space");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "1_X"));
}

TEST_CASE("validate: out-of-range numerator is a parse error, exit 1") {
  RunResult r = run_cli("validate " + kData + "/out_of_range.space");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "outside"));
}

TEST_CASE("eval: golden boundary") {
  RunResult r = run_cli("eval " + kFixture + " --set 4,3 --ops bd");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "bd = 3 4"));
  CHECK(contains(r.output, "closed=false"));
  CHECK(contains(r.output, "open=true"));
}

TEST_CASE("eval: operator listing follows the requested order") {
  RunResult r =
      run_cli("eval " + kFixture + " --set 4,3 --ops cl,int,bdI,bdII,bdIII");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "cl = 7 6\n"
        "int = 3 2\n"
        "bdI = 7 6\n"
        "bdII = 7 6\n"
        "bdIII = 7 6\n");
}

TEST_CASE("eval: bottom argument") {
  RunResult r = run_cli("eval " + kFixture + " --set 0,0 --ops bd,bdII");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "bd = 0 0"));
  CHECK(contains(r.output, "bdII = 0 0"));
}

TEST_CASE("eval: unknown operator exits 1") {
  RunResult r = run_cli("eval " + kFixture + " --set 4,3 --ops nope");
  CHECK(r.exit_code == 1);
}

TEST_CASE("eval: malformed set exits 1") {
  RunResult r = run_cli("eval " + kFixture + " --set 4 --ops bd");
  CHECK(r.exit_code == 1);
}

TEST_CASE("complete: generator closure matches the hand-computed family") {
  RunResult r = run_cli("complete " + kData + "/generators.space");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "carrier a b\n"
        "denom 10\n"
        "open 0 0\n"
        "open 2 4\n"
        "open 2 6\n"
        "open 8 4\n"
        "open 8 6\n"
        "open 10 10\n");
}

TEST_CASE("complete: idempotent on a valid topology") {
  RunResult first = run_cli("complete " + kFixture);
  CHECK(first.exit_code == 0);
  std::string tmp = "cli_complete_roundtrip.space";
  {
    std::ofstream out(tmp);
    out << first.output;
  }
  RunResult second = run_cli("complete " + tmp);
  CHECK(second.output == first.output);
  std::remove(tmp.c_str());
}

TEST_CASE("check: refuted claim with --fail-on-refuted exits 3") {
  RunResult r = run_cli(
      "check --claims T3.1 --mode exhaustive --n 1 --d 1 "
      "--format machine --fail-on-refuted");
  CHECK(r.exit_code == 3);
  CHECK(contains(r.output, "\"id\":\"T3.1\""));
  CHECK(contains(r.output, "\"status\":\"REFUTED\""));
  CHECK(contains(r.output, "\"status\":\"SKIPPED\""));
}

TEST_CASE("check: verified claim exits 0 under --fail-on-refuted") {
  RunResult r = run_cli(
      "check --claims T2.1.iv --mode exhaustive --n 1 --d 2 "
      "--format machine --fail-on-refuted");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"status\":\"VERIFIED_IN_BUDGET\""));
  CHECK(contains(r.output, "\"fails\":0"));
}

TEST_CASE("check: unknown claim id exits 1") {
  RunResult r = run_cli("check --claims T9.9 --mode exhaustive --n 1 --d 1");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "unknown claim id"));
}

TEST_CASE("check: infeasible exhaustive grid exits 1 with the bound") {
  RunResult r = run_cli("check --mode exhaustive --n 2 --d 3");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "random mode"));
}

TEST_CASE("check: identical flags and seed give identical machine bytes") {
  std::string flags =
      "check --claims all --mode random --n 2 --d 10 --spaces 40 --seed 9 "
      "--format machine";
  RunResult a = run_cli(flags);
  RunResult b = run_cli(flags);
  RunResult c = run_cli(flags + " --workers 4");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output == c.output);
}

TEST_CASE("enumerate: counts for the tabulated grids") {
  CHECK(run_cli("enumerate --n 1 --d 1 --count-only").output == "1\n");
  CHECK(run_cli("enumerate --n 1 --d 2 --count-only").output == "2\n");
  CHECK(run_cli("enumerate --n 2 --d 1 --count-only").output == "4\n");
}

TEST_CASE("enumerate: full listing renders space files") {
  RunResult r = run_cli("enumerate --n 1 --d 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "# topology 1 of 2"));
  CHECK(contains(r.output, "carrier a"));
  CHECK(contains(r.output, "open 2"));
}

TEST_CASE("enumerate: oversized grid exits 1") {
  RunResult r = run_cli("enumerate --n 2 --d 5 --count-only");
  CHECK(r.exit_code == 1);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("validate").exit_code == 1);  // missing file argument
  CHECK(run_cli("validate /no/such/file.space").exit_code == 1);
}
