#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

std::string cli_path() {
  const char* path = std::getenv("CUBICCOUNT_CLI");
  REQUIRE_MESSAGE(path != nullptr, "CUBICCOUNT_CLI must point at the binary");
  return path;
}

CliResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.output.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, int expect_code = 0) {
  CliResult r = run(args);
  CAPTURE(r.output);
  REQUIRE(r.exit_code == expect_code);
  return json::parse(r.output);
}

json strip_timing(json j) {
  j.erase("timing_ms");
  return j;
}

}  // namespace

TEST_CASE("field subcommand") {
  json j = run_json("field --p 7 --k 2 --modulus 1,0,1");
  CHECK(j["field"]["q"] == 49);
  CHECK(j["field"]["q_mod_3"] == 1);
  CHECK(j["field"]["p_mod_3"] == 1);
  CHECK(j["field"]["modulus"] == "1,0,1");

  json f5 = run_json("field --p 5");
  CHECK(f5["field"]["q"] == 5);
  CHECK(f5["field"]["q_mod_3"] == 2);

  // default modulus for (7,2) is the worked example's u^2 + 1
  json def = run_json("field --p 7 --k 2");
  CHECK(def["field"]["modulus"] == "1,0,1");

  CliResult bad = run("field --p 6");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("not prime") != std::string::npos);

  CliResult reducible = run("field --p 7 --k 2 --modulus 6,0,1");
  CHECK(reducible.exit_code == 2);
  CHECK(reducible.output.find("irreducible") != std::string::npos);
}

TEST_CASE("cd subcommand") {
  json j = run_json("cd --p 7 --k 2 --modulus 1,0,1 --z 1,1");
  CHECK(j["result"]["c"] == 13);
  CHECK(j["result"]["d"] == -1);
  CHECK(j["result"]["branch"] == "P1MOD3_NONCUBIC");
  CHECK(j["result"]["cube_class"]["value"] == 4);
  CHECK(j["result"]["cube_class"]["tag"] == "NONCUBIC");

  json cubic = run_json("cd --p 7 --z 1");
  CHECK(cubic["result"]["c"] == 1);
  CHECK(cubic["result"]["d"].is_null());
  CHECK(cubic["result"]["d_note"] == "undefined (z cubic)");
  CHECK(cubic["result"]["cube_class"]["tag"] == "CUBIC");

  json even = run_json("cd --p 5 --k 2 --z 1,1");
  CHECK(even["result"]["c"] == 10);
  CHECK(even["result"]["d"] == 0);
  CHECK(even["result"]["branch"] == "P2MOD3_EVEN_K");

  CHECK(run("cd --p 5 --z 2").exit_code == 2);  // q ≡ 2 (mod 3)
  CHECK(run("cd --p 7 --z 0").exit_code == 2);  // z = 0
}

TEST_CASE("count subcommand") {
  json n49 = run_json(
      "count --formula N --p 7 --k 2 --modulus 1,0,1 "
      "--a1 1,0 --a2 1,0 --a3 1,1 --check");
  CHECK(n49["result"]["count"] == 36);
  CHECK(n49["check"]["brute"] == 36);
  CHECK(n49["check"]["match"] == true);

  json m49 = run_json(
      "count --formula M --p 7 --k 2 --modulus 1,0,1 "
      "--a1 1,0 --a2 1,0 --a3 1,1");
  CHECK(m49["result"]["count"] == 1873);
  CHECK(m49["result"]["cd"]["c"] == 13);
  CHECK(m49["result"]["cd"]["d"] == -1);

  json a = run_json("count --formula A --p 7 --z 3 --n 2 --check");
  CHECK(a["result"]["count"] == 0);
  CHECK(a["check"]["match"] == true);

  json b = run_json("count --formula B --p 7 --z 3 --n 0");
  CHECK(b["result"]["count"] == 1);

  CHECK(run("count --formula X --p 7 --z 1 --n 1").exit_code == 2);
  CHECK(run("count --formula A --p 7 --n 1").exit_code == 2);  // missing --z
  CHECK(run("count --formula M --p 7 --a1 1 --a2 1").exit_code == 2);
}

TEST_CASE("series subcommand") {
  json a7 = run_json("series --formula A --p 7 --z 1 --terms 4");
  CHECK(a7["result"]["n_start"] == 1);
  CHECK(a7["result"]["values"] == json::array({3, 6, 90, 336}));

  json a5 = run_json("series --formula A --p 5 --z 2 --terms 3");
  CHECK(a5["result"]["values"] == json::array({1, 5, 25}));

  json b49 = run_json(
      "series --formula B --p 7 --k 2 --modulus 1,0,1 --z 1,1 --terms 2");
  CHECK(b49["result"]["n_start"] == 0);
  CHECK(b49["result"]["values"][0] == 1);

  CliResult csv = run("series --formula A --p 7 --z 1 --terms 4 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output == "n,count\n1,3\n2,6\n3,90\n4,336\n");
}

TEST_CASE("verify subcommand") {
  json ok = run_json("verify --max-q 13");
  CHECK(ok["result"]["ok"] == true);
  CHECK(ok["result"]["total_issues"] == 0);
  CHECK(ok["result"]["total_checks"].get<int>() > 0);
  // q = 4, 7, 13 are the applicable fields
  REQUIRE(ok["result"]["fields"].size() == 3);
  CHECK(ok["result"]["fields"][0]["q"] == 4);
  CHECK(ok["result"]["fields"][1]["q"] == 7);
  CHECK(ok["result"]["fields"][2]["q"] == 13);

  CliResult fault = run("verify --max-q 16 --inject-c 3");
  CHECK(fault.exit_code == 1);

  // the smallest applicable field: q = 4 alone
  json tiny = run_json("verify --max-q 4");
  REQUIRE(tiny["result"]["fields"].size() == 1);
  CHECK(tiny["result"]["fields"][0]["q"] == 4);
  CHECK(tiny["result"]["ok"] == true);
  CHECK(tiny["result"]["total_skipped"] == 0);
}

TEST_CASE("verify skips oracle comparisons past the budget") {
  // At q > 100 the (n+1)-variable enumeration for n = 3 would exceed
  // 1e8 points; those comparisons are skipped, not failed.
  json j = run_json("verify --max-q 103 --triples 5");
  CHECK(j["result"]["ok"] == true);
  CHECK(j["result"]["total_skipped"].get<int>() > 0);
}

TEST_CASE("verify is deterministic across thread counts") {
  CliResult one = run("verify --max-q 31 --triples 10",
                      "CUBICCOUNT_THREADS=1");
  CliResult four = run("verify --max-q 31 --triples 10",
                       "CUBICCOUNT_THREADS=4");
  REQUIRE(one.exit_code == 0);
  REQUIRE(four.exit_code == 0);
  CHECK(strip_timing(json::parse(one.output)) ==
        strip_timing(json::parse(four.output)));
}

TEST_CASE("sums subcommand") {
  json j = run_json("sums --p 7 --k 2 --modulus 1,0,1 --z 1,1");
  CHECK(j["result"]["jacobi"]["a"] == 5);
  CHECK(j["result"]["jacobi"]["b"] == -3);
  CHECK(j["result"]["jacobi_norm"] == 49);
  for (const auto& r : j["result"]["cubic_equation_residuals"])
    CHECK(r.get<double>() < 1e-5);
  CHECK(j["result"]["gauss_cubed_vs_q_jacobi_residual"].get<double>() < 1e-5);
  CHECK(j["result"]["hasse_davenport_residual"].get<double>() < 1e-5);
  CHECK(j["result"]["weighted_cube_identity"]["rhs"] == -1617);

  CHECK(run("sums --p 7 --z 1").exit_code == 2);  // cubic z
}

TEST_CASE("records echo their command and round-trip") {
  json first = run_json(
      "count --formula N --p 7 --k 2 --modulus 1,0,1 "
      "--a1 1,0 --a2 1,0 --a3 1,1");
  std::string args;
  for (const auto& piece : first["argv"])
    args += piece.get<std::string>() + " ";
  json second = run_json(args);
  CHECK(strip_timing(first) == strip_timing(second));
}
