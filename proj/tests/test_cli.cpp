#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string bin_path() {
  const char* p = std::getenv("DGLAB_BIN");
  REQUIRE_MESSAGE(p != nullptr, "DGLAB_BIN must point at the CLI binary");
  return p;
}

std::string golden_dir() {
  const char* p = std::getenv("DGLAB_GOLDEN_DIR");
  REQUIRE_MESSAGE(p != nullptr, "DGLAB_GOLDEN_DIR must point at tests/golden");
  return p;
}

std::string in(const std::string& name) { return golden_dir() + "/" + name; }

struct CliResult {
  std::string out;
  int exit_code = -1;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = bin_path() + " " + args + " 2>&1";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  int st = pclose(f);
  r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream f(in(name));
  REQUIRE_MESSAGE(f.good(), ("missing golden file " + name).c_str());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string strip_wall(const std::string& s) {
  std::istringstream is(s);
  std::ostringstream os;
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("wall ms:", 0) == 0) continue;
    os << line << "\n";
  }
  return os.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("positivity check against golden") {
  CliResult r = run_cli("positivity check --elem " + in("in_elem_neg.json") +
                        " --set " + in("in_set_half.json"));
  CHECK(r.exit_code == 3);
  CHECK(r.out == golden("positivity_check.txt"));
}

TEST_CASE("sandwich solve against golden") {
  CliResult r = run_cli("sandwich solve --problem " + in("in_sandwich.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("sandwich_solve.txt"));
}

TEST_CASE("sandwich degree cap exhaustion exits 4") {
  CliResult r = run_cli("sandwich solve --problem " + in("in_sandwich_narrow.json"));
  CHECK(r.exit_code == 4);
  CHECK(r.out.find("search exhausted") != std::string::npos);
}

TEST_CASE("riesz interpolate against golden") {
  CliResult r = run_cli("riesz interpolate --x1 " + in("in_zero.json") + " --x2 " +
                        in("in_zero.json") + " --y1 " + in("in_two.json") + " --y2 " +
                        in("in_two.json") + " --spec " + in("in_spec_half.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("riesz_interpolate.txt"));
}

TEST_CASE("coker solve against golden") {
  CliResult r = run_cli("coker solve --elem " + in("in_coboundary.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("coker_solve.txt"));
}

TEST_CASE("coker in-image json output against golden") {
  CliResult r =
      run_cli("--format json coker in-image --elem " + in("in_coboundary.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("coker_in_image.json"));
}

TEST_CASE("coker in-image negative verdict exits 3") {
  CliResult r = run_cli("coker in-image --elem " + in("in_unit.json"));
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("in image: no") != std::string::npos);
}

TEST_CASE("coker s-map against golden") {
  CliResult r = run_cli("coker s-map --elem " + in("in_wide.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("coker_s_map.txt"));
}

TEST_CASE("coker positive-rep against golden") {
  CliResult r = run_cli("coker positive-rep --elem " + in("in_x2tm1.json") +
                        " --spec " + in("in_spec_disjoint.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("coker_positive_rep.txt"));
}

TEST_CASE("kms spectrum against golden") {
  CliResult r = run_cli("kms spectrum --spec " + in("in_spec_two_points.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("kms_spectrum.txt"));
}

TEST_CASE("kms classify against golden") {
  CliResult r =
      run_cli("kms classify --s 1/2 --spec " + in("in_spec_two_points.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("kms_classify.txt"));

  CliResult miss = run_cli("kms classify --s 1/5 --spec " + in("in_spec_half.json"));
  CHECK(miss.exit_code == 3);

  CliResult one = run_cli("kms classify --s 1 --spec " + in("in_spec_half.json"));
  CHECK(one.exit_code == 2);
}

TEST_CASE("kms trace against golden") {
  CliResult r = run_cli("kms trace --measure " + in("in_measure.json") + " --elem " +
                        in("in_unit.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("kms_trace.txt"));
}

TEST_CASE("verify small against golden and deterministic") {
  CliResult a = run_cli("verify --seed 42 --scale small");
  CHECK(a.exit_code == 0);
  CHECK(strip_wall(a.out) == golden("verify_small.txt"));
  CliResult b = run_cli("verify --seed 42 --scale small");
  CHECK(strip_wall(a.out) == strip_wall(b.out));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("positivity check").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("positivity check --elem /nonexistent.json --set " +
                in("in_set_half.json"))
            .exit_code == 2);
  // A parameter-set file where a ring element is expected is a parse error.
  CHECK(run_cli("positivity check --elem " + in("in_set_half.json") + " --set " +
                in("in_set_half.json"))
            .exit_code == 2);
}

}  // TEST_SUITE
