#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string capture = "cli_capture.txt";
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += std::string(PGRAPH_BIN) + " " + args + " > " + capture + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(capture);
  std::ostringstream text;
  text << in.rdbuf();
  r.out = text.str();
  std::remove(capture.c_str());
  return r;
}

}  // namespace

TEST_CASE("analyze text output") {
  const auto r = run("analyze --group cyclic:12");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("min degree:          7") != std::string::npos);
  CHECK(r.out.find("edge connectivity:   7") != std::string::npos);
  CHECK(r.out.find("vertex connectivity: 6") != std::string::npos);
}

TEST_CASE("analyze json output") {
  const auto r = run("analyze --group cyclic:12 --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("min_degree") == 7);
  CHECK(j.at("edge_connectivity") == 7);
  CHECK(j.at("vertex_connectivity") == 6);
  CHECK(j.at("kappa_equals_delta") == false);

  const auto d = run("analyze --group dihedral:5 --format json");
  REQUIRE(d.exit_code == 0);
  const json dj = json::parse(d.out);
  CHECK(dj.at("min_degree") == 1);
  CHECK(dj.at("vertex_connectivity") == 1);
  CHECK(dj.at("kappa_equals_delta") == true);
}

TEST_CASE("analyze a complete power graph") {
  const auto r = run("analyze --group cyclic:7 --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("vertex_connectivity") == 6);
  bool note = false;
  for (const auto& a : j.at("annotations"))
    if (a.get<std::string>().find("complete") != std::string::npos) note = true;
  CHECK(note);
}

TEST_CASE("kappa auto-skip above the limit and --kappa override") {
  const auto skipped = run("analyze --group cyclic:330 --format json");
  REQUIRE(skipped.exit_code == 0);
  CHECK(json::parse(skipped.out).at("vertex_connectivity").is_null());

  const auto forced = run("analyze --group cyclic:330 --format json --kappa");
  REQUIRE(forced.exit_code == 0);
  const json j = json::parse(forced.out);
  CHECK(j.at("vertex_connectivity").is_number());
  CHECK(j.at("vertex_connectivity") < j.at("edge_connectivity"));
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("analyze --group cyclic:x").exit_code == 1);
  CHECK(run("analyze --group frobnicate:3").exit_code == 1);
  CHECK(run("analyze").exit_code == 1);
  CHECK(run("").exit_code == 1);
  CHECK(run("no-such-command").exit_code == 1);
  CHECK(run("analyze --group cyclic:12 --format yaml").exit_code == 1);
  CHECK(run("analyze --group dicyclic:2000").exit_code == 1);  // above the cap
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("vertex cap from the environment") {
  CHECK(run("analyze --group cyclic:18", "PG_VERTEX_CAP=20").exit_code == 0);
  const auto blocked = run("analyze --group cyclic:18", "PG_VERTEX_CAP=10");
  CHECK(blocked.exit_code == 1);
  CHECK(blocked.out.find("exceeds vertex cap") != std::string::npos);
}

TEST_CASE("output file") {
  const auto r = run("analyze --group cyclic:12 --format json --output cli_report.json");
  REQUIRE(r.exit_code == 0);
  std::ifstream in("cli_report.json");
  REQUIRE(in.good());
  json j;
  in >> j;
  CHECK(j.at("min_degree") == 7);
  std::remove("cli_report.json");
}

TEST_CASE("classify") {
  const auto yes = run("classify --group cyclic:18");
  CHECK(yes.exit_code == 0);
  CHECK(yes.out.find("kappa == delta: yes") != std::string::npos);
  CHECK(yes.out.find("kappa: 9") != std::string::npos);

  const auto no = run("classify --group cyclic:12");
  CHECK(no.exit_code == 0);
  CHECK(no.out.find("kappa == delta: no") != std::string::npos);
  CHECK(no.out.find("kappa: 6") != std::string::npos);

  const auto big = run("classify --group cyclic:123456789012");
  CHECK(big.exit_code == 0);  // no graph gets built, size does not matter
}

TEST_CASE("export-dot") {
  const auto r = run("export-dot --group dihedral:4");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("graph G {", 0) == 0);
  CHECK(r.out.find("[label=\"e\"]") != std::string::npos);
  CHECK(r.out.find("v7") != std::string::npos);

  const auto tilde = run("export-dot --group cyclic:15 --tilde");
  REQUIRE(tilde.exit_code == 0);
  CHECK(tilde.out.find("v5") != std::string::npos);
  CHECK(tilde.out.find("v6") == std::string::npos);  // only 6 vertices remain

  CHECK(run("export-dot --group cyclic:15 --tilde --proper").exit_code == 1);
  CHECK(run("export-dot --group cyclic:7 --tilde").exit_code == 1);
}

TEST_CASE("sweep") {
  const auto r = run("sweep --family cyclic --max 40");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ok   min-degree  cyclic:12") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find(" 0 failures") != std::string::npos);

  const auto all = run("sweep --family all --max 24");
  CHECK(all.exit_code == 0);
  CHECK(all.out.find("dihedral:12") != std::string::npos);
  CHECK(all.out.find("dicyclic:6") != std::string::npos);
  CHECK(all.out.find("abelianp:2:1,1") != std::string::npos);

  const auto subset = run("sweep --family cyclic --max 30 --checks min-degree,edge-connectivity");
  CHECK(subset.exit_code == 0);
  CHECK(subset.out.find("min-degree") != std::string::npos);
  CHECK(subset.out.find("eta-bounds") == std::string::npos);

  CHECK(run("sweep --checks not-a-check").exit_code == 1);
  CHECK(run("sweep --family klein").exit_code == 1);
}
