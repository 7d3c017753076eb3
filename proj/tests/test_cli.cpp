#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef TNCALC_CLI_PATH
#error "TNCALC_CLI_PATH must point at the tncalc binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  std::string command = std::string(TNCALC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("eval routes print exact values") {
  CHECK(run_cli("eval 4 1 --method power").output == "1569\n");
  CHECK(run_cli("eval 5 -5 --method rec").output == "120\n");
  CHECK(run_cli("eval 2 2 --method direct").output == "26\n");
  CHECK(run_cli("eval 3 3 --method shifted").output == "366\n");
  CHECK(run_cli("eval 4 1 --method power").exit_code == 0);
  // default method
  CHECK(run_cli("eval 4 1").output == "1569\n");
}

TEST_CASE("eval rational arguments agree across methods") {
  for (const char* z : {"1/2", "-7/3", "5", "-11"}) {
    std::string direct = run_cli(std::string("eval 3 ") + z + " --method direct").output;
    for (const char* method : {"rec", "power", "shifted"})
      CHECK(run_cli(std::string("eval 3 ") + z + " --method " + method).output == direct);
  }
  CHECK(run_cli("eval 3 1/2 --method power").output == "853/8\n");
}

TEST_CASE("eval gamma method prints value and deviation") {
  RunResult r = run_cli("eval 2 1 --method gamma");
  REQUIRE(r.exit_code == 0);
  double value = 0.0, deviation = 0.0;
  REQUIRE(std::sscanf(r.output.c_str(), "%lf %lf", &value, &deviation) == 2);
  CHECK(value == doctest::Approx(17.0).epsilon(1e-10));
  CHECK(deviation <= 1e-10);
}

TEST_CASE("eval gamma method needs z + n > 0") {
  CHECK(run_cli("eval 3 -3 --method gamma").exit_code == 3);
  CHECK(run_cli("eval 3 -5 --method gamma").exit_code == 3);
}

TEST_CASE("table output") {
  CHECK(run_cli("table 2 4").output == "0 1\n1 4\n2 26\n3 236\n4 2760\n");
  CHECK(run_cli("table -0 0").output == "0 1\n");
  RunResult r = run_cli("table 3 4");
  CHECK(r.output.substr(r.output.rfind("4 ")) == "4 4553\n");
}

TEST_CASE("poly output") {
  CHECK(run_cli("poly 2 -2").output == "2 2 1\n");
  CHECK(run_cli("poly 2 -3").output == "1 0 1\n");
  CHECK(run_cli("poly 0 0").output == "1\n");
  CHECK(run_cli("poly 2 0").output == "10 6 1\n");
  CHECK(run_cli("poly 1 1/2").output == "5/2 1\n");
}

TEST_CASE("bfile emission") {
  CHECK(run_cli("bfile --seq A000166 --count 3").output == "# A000166\n0 1\n1 0\n2 1\n");
  CHECK(run_cli("bfile --seq A001865 --count 5").output ==
        "# A001865\n0 1\n1 3\n2 17\n3 142\n4 1569\n");
  CHECK(run_cli("bfile --seq A000001 --count 3").exit_code == 2);

  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/tncalc_bfile_test.txt";
  CHECK(run_cli("bfile --seq A129137 --count 2 --out " + path).exit_code == 0);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == "# A129137\n0 1\n1 5\n");
  std::remove(path.c_str());
}

TEST_CASE("gamma subcommand") {
  RunResult r = run_cli("gamma 4 0");
  REQUIRE(r.exit_code == 0);
  double value = 0.0, bound = 0.0;
  REQUIRE(std::sscanf(r.output.c_str(), "%lf %lf", &value, &bound) == 2);
  CHECK(value == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(bound <= 1e-10);
  CHECK(run_cli("gamma -1 2").exit_code == 3);
  CHECK(run_cli("gamma 1 -2").exit_code == 3);
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate 1 2").exit_code == 2);
  CHECK(run_cli("eval 4").exit_code == 2);
  CHECK(run_cli("eval 4 x").exit_code == 2);
  CHECK(run_cli("eval 4 1/0").exit_code == 2);
  CHECK(run_cli("eval 4 1.5").exit_code == 2);
  CHECK(run_cli("eval 4 1 --method nope").exit_code == 2);
  CHECK(run_cli("table 2").exit_code == 2);
}

TEST_CASE("check passes on the default and trivial ranges") {
  RunResult trivial = run_cli("check --n-max 0 --z-min 0 --z-max 0");
  CHECK(trivial.exit_code == 0);
  RunResult standard = run_cli("check --n-max 20 --z-min -30 --z-max 30");
  CHECK(standard.exit_code == 0);
  CHECK(standard.output.find("FAIL") == std::string::npos);
  CHECK(standard.output.find("four-route-equality: PASS") != std::string::npos);
  CHECK(standard.output.find("18/18 suites passed") != std::string::npos);
}

TEST_CASE("check reports mismatches against a corrupted fixture") {
  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/tncalc_corrupt_fixture.txt";
  {
    std::ofstream out(path);
    out << "# A000166\n0 1\n1 0\n2 1\n3 2\n4 9\n5 43\n";  // d_5 corrupted
  }
  RunResult r = run_cli("check --n-max 5 --z-min -5 --z-max 5 --fixture " + path);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("reference-fixture: FAIL") != std::string::npos);
  CHECK(r.output.find("index 5") != std::string::npos);
  CHECK(r.output.find("44") != std::string::npos);
  CHECK(r.output.find("43") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("five methods agree where preconditions overlap") {
  for (const char* nz : {"0 3", "2 1", "5 2", "7 -4"}) {
    std::string exact = run_cli(std::string("eval ") + nz + " --method power").output;
    CHECK(run_cli(std::string("eval ") + nz + " --method direct").output == exact);
    CHECK(run_cli(std::string("eval ") + nz + " --method rec").output == exact);
    CHECK(run_cli(std::string("eval ") + nz + " --method shifted").output == exact);

    RunResult g = run_cli(std::string("eval ") + nz + " --method gamma");
    REQUIRE(g.exit_code == 0);
    double numeric = 0.0, deviation = 0.0;
    REQUIRE(std::sscanf(g.output.c_str(), "%lf %lf", &numeric, &deviation) == 2);
    double exact_value = std::strtod(exact.c_str(), nullptr);
    CHECK(std::fabs(numeric - exact_value) / exact_value <= 1e-10);
    CHECK(deviation <= 1e-10);
  }
}
