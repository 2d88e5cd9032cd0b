#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("PERMSTAT_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "PERMSTAT_BIN must point at the permstat binary");
  const std::string cmd = std::string("'") + bin + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

} // namespace

TEST_CASE("stat evaluates integer and set statistics") {
  CHECK(run_cli("stat 321654 foze2").output == "4\n");
  CHECK(run_cli("stat 321654 lrmax").output == "{(1,3),(4,6)}\n");
  CHECK(run_cli("stat 321654 maj").output == "12\n");
  CHECK(run_cli("stat \"\" inv").output == "0\n");
  CHECK(run_cli("stat 7653124 idrsizes").output == "(4,2,1)\n");
  CHECK(run_cli("stat 321654 foze2").exit_code == 0);
}

TEST_CASE("stat --format json carries alias and display name") {
  RunResult r = run_cli("stat 321654 foze2 --format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["statistic"]["alias"] == "foze2");
  CHECK(j["statistic"]["name"] == "foze''");
  CHECK(j["value"] == 4);
}

TEST_CASE("map applies the bijections by name") {
  CHECK(run_cli("map 321 phi").output == "312\n");
  CHECK(run_cli("map 312 phi-inv").output == "321\n");
  CHECK(run_cli("map 32658741 psi").output == "31628457\n");
  CHECK(run_cli("map 31628457 psi-inv").output == "32658741\n");
  CHECK(run_cli("map 7653124 theta").output == "7163254\n");
  CHECK(run_cli("map 7163254 theta-inv").output == "7653124\n");
  CHECK(run_cli("map 4675321 cr-conjugate").output == "4365271\n");
}

TEST_CASE("exit codes are stable") {
  CHECK(run_cli("stat 3x2 inv").exit_code == 2);
  CHECK(run_cli("stat 321 nosuch").exit_code == 3);
  CHECK(run_cli("map 231 nosuch").exit_code == 3);
  CHECK(run_cli("verify nosuch").exit_code == 3);
  RunResult prec = run_cli("map 231 phi");
  CHECK(prec.exit_code == 4);
  CHECK(prec.output.find("231") != std::string::npos);
  CHECK(run_cli("map 312 psi").exit_code == 4);
  CHECK(run_cli("dist 231 13 inv").exit_code == 5);
  CHECK(run_cli("scan inv 13").exit_code == 5);
  CHECK(run_cli("dist 231 3 inv --compare").exit_code == 2);  // needs two statistics
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("dist prints tables and compares") {
  CHECK(run_cli("dist 231 3 inv").output == "# class=Av(231) n=3 schema=inv\n0 1\n1 2\n2 1\n3 1\n");
  CHECK(run_cli("dist 231 0 maj").output == "# class=Av(231) n=0 schema=maj\n0 1\n");
  CHECK(run_cli("dist 231 8 maj,makl --compare").output == "EQUIDISTRIBUTED\n");
  CHECK(run_cli("dist 312 6 foze2,mad --compare").output == "NOT EQUIDISTRIBUTED\n");
  RunResult csv = run_cli("dist 231 3 inv --format csv");
  CHECK(csv.output == "inv,count\n0,1\n1,2\n2,1\n3,1\n");
  const nlohmann::json j = nlohmann::json::parse(run_cli("dist 231 3 inv --format json").output);
  CHECK(j["class"] == "Av(231)");
  CHECK(j["n"] == 3);
  CHECK(j["counts"].size() == 4);
}

TEST_CASE("identical invocations are byte-identical, independent of workers") {
  const std::string base = run_cli("dist 231 7 maj,Des").output;
  CHECK(base == run_cli("dist 231 7 maj,Des").output);
  CHECK(base == run_cli("dist 231 7 maj,Des --workers 3").output);
  CHECK(base == run_cli("dist 231 7 maj,Des --workers 5").output);
  const std::string scan = run_cli("scan inv,foze2 6").output;
  CHECK(scan == run_cli("scan inv,foze2 6 --workers 4").output);
}

TEST_CASE("verify runs suites and reports per-claim lines") {
  RunResult r = run_cli("verify thm1 7");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS thm1.pointwise") != std::string::npos);
  CHECK(r.output.find("0 failed") != std::string::npos);
  RunResult neg = run_cli("verify negative-controls 8");
  CHECK(neg.exit_code == 0);
  CHECK(neg.output.find("witness n=") != std::string::npos);
  RunResult list = run_cli("verify table1 --list");
  CHECK(list.exit_code == 0);
  CHECK(list.output.find("table1.12") != std::string::npos);
}

TEST_CASE("scan emits the trivial diagonal") {
  RunResult r = run_cli("scan inv 4");
  CHECK(r.exit_code == 0);
  for (const char* s : {"123", "132", "213", "231", "312", "321"})
    CHECK(r.output.find("(inv,inv;" + std::string(s) + "," + s + ") diagonal") !=
          std::string::npos);
}
