// Integration tests driving the installed CLI binary end to end.  The
// binary path arrives as the first program argument (wired up by CMake).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

std::string g_cli_path;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.output.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

nlohmann::json results_of(const RunResult& r) {
  return nlohmann::json::parse(r.output).at("results");
}

}  // namespace

TEST_CASE("betti report") {
  const RunResult r = run_cli("betti --d 2 --n 3 --format json");
  REQUIRE(r.exit_code == 0);
  const auto res = results_of(r);
  CHECK(res.at("d") == 2);
  CHECK(res.at("n") == 3);
  CHECK(res.at("dimension") == 3);
  CHECK(res.at("betti") == nlohmann::json::parse("[1,4,4,1]"));
  CHECK(res.at("euler") == 10);
}

TEST_CASE("integrate report matches the base case") {
  const RunResult r = run_cli(
      R"(integrate --d 1 --n 3 --monomial [[["1","2","3"],1]])");
  REQUIRE(r.exit_code == 0);
  CHECK(results_of(r).at("integral") == "-1");
}

TEST_CASE("verify-gf passes and exits zero") {
  const RunResult r = run_cli("verify-gf --d 3 --order 6");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  for (const auto& [name, pass] : j.at("verdicts").items()) {
    CAPTURE(name);
    CHECK(pass == true);
  }
}

TEST_CASE("ring-rank single degree and full table") {
  const RunResult full = run_cli("ring-rank --d 2 --n 3");
  REQUIRE(full.exit_code == 0);
  CHECK(results_of(full).at("ranks") == nlohmann::json::parse("[1,4,4,1]"));
  const RunResult one = run_cli("ring-rank --d 1 --n 4 --degree 1");
  REQUIRE(one.exit_code == 0);
  CHECK(results_of(one).at("rank") == 5);
}

TEST_CASE("strata and trees") {
  const RunResult s = run_cli("strata --n 4");
  REQUIRE(s.exit_code == 0);
  CHECK(results_of(s).at("count") == 26);
  const RunResult t = run_cli("trees --n 3");
  REQUIRE(t.exit_code == 0);
  CHECK(results_of(t).at("count") == 4);
}

TEST_CASE("fm-betti") {
  const RunResult r = run_cli("fm-betti --space Pm --m 2 --n 2");
  REQUIRE(r.exit_code == 0);
  CHECK(results_of(r).at("betti") ==
        nlohmann::json::parse(R"(["1","3","4","3","1"])"));
  const RunResult named = run_cli("fm-betti --space P1 --n 3");
  REQUIRE(named.exit_code == 0);
  CHECK(results_of(named).at("betti") ==
        nlohmann::json::parse(R"(["1","4","4","1"])"));
}

TEST_CASE("pairing and conjecture verdicts") {
  const RunResult p = run_cli("pairing --d 2 --n 3");
  REQUIRE(p.exit_code == 0);
  const auto j = nlohmann::json::parse(p.output);
  CHECK(j.at("verdicts").at("matches_closed_form") == true);
  CHECK(j.at("verdicts").at("determinant_unit") == true);

  const RunResult c = run_cli("conjecture --d 1 --n 4");
  REQUIRE(c.exit_code == 0);
  CHECK(results_of(c).at("all_magnitude_one") == true);

  const RunResult single = run_cli(
      R"(conjecture --d 1 --n 4 --family [[1,2],[1,2,3]])");
  REQUIRE(single.exit_code == 0);
  CHECK(results_of(single).at("families_checked") == 1);

  const RunResult nef = run_cli("nef --d 2 --n 3");
  CHECK(nef.exit_code == 0);
}

TEST_CASE("deterministic runs are byte-identical") {
  for (const std::string cmd :
       {std::string("betti --d 2 --n 3 --deterministic"),
        std::string("pairing --d 1 --n 4 --deterministic --format csv"),
        std::string("series --d 2 --order 5 --deterministic")}) {
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK_FALSE(a.output.empty());
  }
  // Without --deterministic the payload carries timing, so byte equality
  // is not promised; the results block still matches.
  const RunResult a = run_cli("betti --d 1 --n 4");
  const RunResult b = run_cli("betti --d 1 --n 4");
  CHECK(results_of(a) == results_of(b));
}

TEST_CASE("exit codes") {
  CHECK(run_cli("betti --d 2 --n 3 --no-such-flag").exit_code == 1);
  CHECK(run_cli("betti --d 0 --n 3").exit_code == 1);
  CHECK(run_cli("strata --n 9 --max-families 100").exit_code == 2);
  CHECK(run_cli("ring-rank --d 4 --n 4").exit_code == 2);  // d*n over cap
  // CSV is only defined for flat tables.
  CHECK(run_cli("strata --n 3 --format csv").exit_code == 1);
  CHECK(run_cli("integrate --d 1 --n 3 --monomial not-json").exit_code == 1);
  // Degree-mismatched monomials are validation errors.
  CHECK(run_cli(R"(integrate --d 1 --n 4 --monomial [[[1,2],1]])").exit_code ==
        1);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-tdn-binary> [doctest args]\n");
    return 2;
  }
  g_cli_path = argv[1];
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv + 1);
  return ctx.run();
}
