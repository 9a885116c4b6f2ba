#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "flatperm/cli.hpp"

using flatperm::cli::run;
using Json = nlohmann::ordered_json;

TEST_CASE("distribution") {
  const auto r = run({"distribution", "--pattern", "12-3", "--n", "3", "--method", "both", "--format", "json"});
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["coefficients"] == Json::parse(R"({"0": "2", "1": "4"})"));
  CHECK(j["match"] == true);
  CHECK(j.dump(2) + "\n" == r.out);

  for (const char* pat : {"12-3", "21-3", "23-1", "32-1", "31-2"}) {
    const auto two = run({"distribution", "--pattern", pat, "--n", "2", "--format", "json"});
    CHECK(Json::parse(two.out)["coefficients"] == Json::parse(R"({"0": "2"})"));
  }
  CHECK(run({"distribution", "--pattern", "31-2", "--n", "0"}).exit_code == 2);
  CHECK(run({"distribution", "--pattern", "13-2", "--n", "4"}).exit_code == 2);
  CHECK(run({"distribution", "--pattern", "13-2", "--n", "4", "--method", "brute"}).exit_code == 0);

  const auto csv = run({"distribution", "--pattern", "31-2", "--n", "5", "--method", "both", "--format", "csv"});
  CHECK(csv.out == "exponent,recurrence,brute\n0,70,70\n1,38,38\n2,12,12\n");
}

TEST_CASE("big integers are strings") {
  const auto r = run({"distribution", "--pattern", "32-1", "--n", "30", "--format", "json"});
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  for (const auto& [k, v] : j["coefficients"].items()) CHECK(v.is_string());
}

TEST_CASE("caps") {
  const auto brute = run({"distribution", "--pattern", "31-2", "--n", "11", "--method", "brute"});
  CHECK(brute.exit_code == 2);
  CHECK(brute.err.find("cap 10") != std::string::npos);
  const auto rec = run({"distribution", "--pattern", "31-2", "--n", "201"});
  CHECK(rec.exit_code == 2);
  CHECK(rec.err.find("cap 200") != std::string::npos);
  CHECK(run({"series", "--which", "egf_21_3", "--order", "65"}).exit_code == 2);
}

TEST_CASE("FLATPERM_MAX_N moves the brute-force cap") {
  ::setenv("FLATPERM_MAX_N", "3", 1);
  const auto low = run({"distribution", "--pattern", "31-2", "--n", "4", "--method", "brute"});
  ::setenv("FLATPERM_MAX_N", "many", 1);
  const auto bad = run({"distribution", "--pattern", "31-2", "--n", "3", "--method", "brute"});
  ::unsetenv("FLATPERM_MAX_N");
  CHECK(low.exit_code == 2);
  CHECK(low.err.find("cap 3") != std::string::npos);
  CHECK(bad.exit_code == 2);
}

TEST_CASE("table") {
  const auto r = run({"table", "--n-max", "4", "--format", "csv"});
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "pattern,n,avoiders,average_num,average_den");
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  CHECK(lines.size() == 24);
  CHECK(std::count(lines.begin(), lines.end(), "31-2,4,20,1,6") == 1);
  CHECK(std::count(lines.begin(), lines.end(), "23-1,4,22,1,12") == 1);
  CHECK(std::count(lines.begin(), lines.end(), "32-1,4,22,1,12") == 1);
  for (const char* p : {"12-3", "21-3", "23-1", "32-1", "31-2", "13-2"})
    CHECK(std::count(lines.begin(), lines.end(), std::string(p) + ",1,1,0,1") == 1);

  const Json j = Json::parse(run({"table", "--n-max", "4", "--format", "json", "--pattern", "31-2"}).out);
  CHECK(j["rows"].size() == 4);
  CHECK(j["rows"][3]["average"] == "1/6");
  CHECK(j["rows"][3]["average_decimal"] == "0.166667");
}

TEST_CASE("verify") {
  const auto oracle = run({"verify", "--suite", "oracle", "--n-max", "7"});
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.out.find("FAIL") == std::string::npos);
  const auto bij = run({"verify", "--suite", "bijections", "--n-max", "6", "--format", "json"});
  CHECK(bij.exit_code == 0);
  CHECK(Json::parse(bij.out)["ok"] == true);
  CHECK(run({"verify", "--suite", "nonsense"}).exit_code == 2);
}

TEST_CASE("series") {
  const auto g0 = run({"series", "--which", "g31_2_r0", "--order", "6", "--format", "json"});
  REQUIRE(g0.exit_code == 0);
  CHECK(Json::parse(g0.out)["coefficients"] == Json::parse(R"(["0","0","0","6","20","70"])"));
  const auto egf = run({"series", "--which", "egf_21_3", "--order", "3", "--format", "json"});
  const Json e = Json::parse(egf.out);
  CHECK(e["coefficients"] == Json::parse(R"(["2","6","10"])"));
  CHECK(e["egf_scaled"] == Json::parse(R"(["2","6","20"])"));
  CHECK(run({"series", "--which", "egf_21_3", "--order", "0"}).exit_code == 2);
  CHECK(run({"series", "--which", "g31_2_r7"}).exit_code == 2);
}

TEST_CASE("output is deterministic and --out writes the file") {
  const std::vector<std::string> args{"table", "--n-max", "6", "--format", "json"};
  CHECK(run(args).out == run(args).out);

  const auto path = std::filesystem::temp_directory_path() / "flatperm_cli_test.json";
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", path.string()});
  const auto r = run(with_out);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  const std::string written((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(written == run(args).out);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"distribution", "--n", "3"}).exit_code == 2);
  CHECK(run({"table", "--format", "xml"}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
}
