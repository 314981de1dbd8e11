#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "ilab/report.hpp"

using namespace ilab;

namespace {

struct RunResult {
  int exitCode;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(ILAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

// the deterministic body: everything under "report" (meta carries the stamp)
std::string reportBody(const std::string& doc) {
  nlohmann::json j = nlohmann::json::parse(doc);
  return dumpDeterministic(j.at("report"));
}

}  // namespace

TEST_CASE("deterministic serializer") {
  nlohmann::json j;
  j["b"] = 0.1;
  j["a"] = 1;
  j["c"] = {{"z", true}, {"y", nlohmann::json::array({1.5, "x"})}};
  std::string s = dumpDeterministic(j, 0);
  // keys sorted, floats at 17 significant digits
  CHECK(s.find("\"a\"") < s.find("\"b\""));
  CHECK(s.find("0.10000000000000001") != std::string::npos);
  CHECK(s.find("\"y\"") < s.find("\"z\""));
}

TEST_CASE("report body hash ignores the timestamp") {
  Report a("demo", 7);
  a.add({"x.check", true, 0.5, 1.0, ""});
  Report b("demo", 7);
  b.add({"x.check", true, 0.5, 1.0, ""});
  CHECK(a.bodyHash() == b.bodyHash());
  CHECK(a.document().at("meta").contains("timestamp"));
  b.add({"y.check", false, 2.0, 1.0, ""});
  CHECK(a.bodyHash() != b.bodyHash());
  CHECK(!b.allPass());
}

TEST_CASE("results are sorted by check id in the body") {
  Report r("demo", 0);
  r.add({"zz", true, 0, 0, ""});
  r.add({"aa", true, 0, 0, ""});
  nlohmann::json body = r.body();
  CHECK(body["results"][0]["id"] == "aa");
  CHECK(body["results"][1]["id"] == "zz");
  CHECK(body["schemaVersion"] == 1);
}

TEST_CASE("ym subcommand runs clean and is byte-deterministic") {
  RunResult a = run("--seed 3 ym --r0 0.1 --u0 -0.990099 --v0 0 --r-end 10");
  CHECK(a.exitCode == 0);
  RunResult b = run("--seed 3 ym --r0 0.1 --u0 -0.990099 --v0 0 --r-end 10");
  CHECK(reportBody(a.output) == reportBody(b.output));
  CHECK(a.output.find("\"suite\": \"ym\"") != std::string::npos);
}

TEST_CASE("nahm subcommand golden determinism") {
  RunResult a = run("--seed 1 nahm --solution pole --dim 1");
  CHECK(a.exitCode == 0);
  RunResult b = run("--seed 1 nahm --solution pole --dim 1");
  CHECK(reportBody(a.output) == reportBody(b.output));
  // a different seed samples different points: body may differ, exit stays 0
  RunResult c = run("--seed 2 nahm --solution pole --dim 1");
  CHECK(c.exitCode == 0);
}

TEST_CASE("exit code 2 on usage errors") {
  CHECK(run("bogus-subcommand").exitCode == 2);
  CHECK(run("instanton --no-such-flag 1").exitCode == 2);
  CHECK(run("instanton --geometry su2 --C -1").exitCode == 2);
  CHECK(run("instanton --geometry borromean").exitCode == 2);
  CHECK(run("negative --geometry so5").exitCode == 2);
  CHECK(run("ym --r0 -1").exitCode == 2);
  CHECK(run("").exitCode == 2);  // a subcommand is required
}

TEST_CASE("exit code 1 when a check fails") {
  // an unreasonably tight tolerance forces a field-check failure
  RunResult r = run("instanton --geometry su2 --C 1 --points 4 --tol 1e-18");
  CHECK(r.exitCode == 1);
  CHECK(r.output.find("\"overallPass\": false") != std::string::npos);
}

TEST_CASE("instanton subcommand passes for each geometry") {
  for (const std::string g : {"su2", "g2"}) {
    RunResult r = run("instanton --geometry " + g + " --C 1 --points 12");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("\"overallPass\": true") != std::string::npos);
  }
}

TEST_CASE("INSTANTON_LAB_SEED environment variable overrides --seed") {
  RunResult a = run("--seed 5 ym --r0 0.5 --u0 -0.5 --v0 0.1 --r-end 2");
  RunResult b = run("--seed 9999 ym --r0 0.5 --u0 -0.5 --v0 0.1 --r-end 2");
  // same inputs, different seeds: seed is recorded in the body
  CHECK(a.output.find("\"seed\": 5") != std::string::npos);
  RunResult d = [&] {
    std::string cmd = "INSTANTON_LAB_SEED=5 " + std::string(ILAB_CLI_PATH) +
                      " --seed 9999 ym --r0 0.5 --u0 -0.5 --v0 0.1 --r-end 2 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    return RunResult{WEXITSTATUS(pclose(pipe)), out};
  }();
  CHECK(d.output.find("\"seed\": 5") != std::string::npos);
  CHECK(reportBody(d.output) == reportBody(a.output));
  CHECK(b.output.find("\"seed\": 9999") != std::string::npos);
}

TEST_CASE("report written to --out") {
  std::string path = "/tmp/ilab_test_report.json";
  RunResult r = run("--seed 0 ym --r0 0.5 --u0 0 --v0 0 --r-end 1 --out " + path);
  CHECK(r.exitCode == 0);
  CHECK(r.output.empty());
  FILE* f = fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  fclose(f);
  std::remove(path.c_str());
}
