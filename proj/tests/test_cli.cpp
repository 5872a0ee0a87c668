#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string bin() {
  const char* b = std::getenv("GDTA_BIN");
  REQUIRE(b != nullptr);
  return b;
}

std::string work_dir() {
  const char* d = std::getenv("GDTA_WORK_DIR");
  return d ? d : ".";
}

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string out_file = work_dir() + "/cli_out.txt";
  std::string cmd = bin() + " " + args + " > " + out_file + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream is(out_file);
  std::stringstream ss;
  ss << is.rdbuf();
  r.output = ss.str();
  return r;
}

}  // namespace

TEST_CASE("analyze reports the worked decomposition") {
  RunResult r = run("analyze --params 2x2 --char 2 --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["wedderburn"]["n_classes"] == 2);
  CHECK(j["wedderburn"]["blocks"][0]["size"] == 2);
  CHECK(j["wedderburn"]["blocks"][1]["size"] == 1);
  CHECK(j["radical_dim"] == 5);

  RunResult t = run("analyze --params 2x3,3x3 --char 3 --format csv");
  REQUIRE(t.exit_code == 0);
  CHECK(t.output.find("4x1;2x4;1x4") != std::string::npos);
  CHECK(t.output.find(",5,9,") != std::string::npos);  // nilpotency 5, 9 classes
}

TEST_CASE("analyze output is byte-identical across runs") {
  RunResult a = run("analyze --params 2x3,3x3 --char 2 --format json");
  RunResult b = run("analyze --params 2x3,3x3 --char 2 --format json");
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("analyze of a semisimple cell") {
  RunResult r = run("analyze --params 2x2 --char 0 --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["is_semisimple"] == true);
  CHECK(j["radical_dim"] == 0);
}

TEST_CASE("verify passes on a golden cell") {
  RunResult r = run("verify --params 2x3 --char 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("verification passed") != std::string::npos);
  CHECK(r.output.find("[FAIL]") == std::string::npos);
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run("analyze --params bogus").exit_code == 2);
  CHECK(run("analyze --params 1x2").exit_code == 2);
  CHECK(run("analyze --params 2x2 --char 4").exit_code == 2);
  CHECK(run("analyze").exit_code == 2);
  CHECK(run("analyze --params 2x2 --no-such-flag").exit_code == 2);
  CHECK(run("analyze --params 2x2 --out /nonexistent-dir/x.json").exit_code == 2);
}

TEST_CASE("vertex cap exits with code three") {
  RunResult r = run("verify --params 17x16 --char 2");
  CHECK(r.exit_code == 3);
  RunResult ok = run("verify --params 17x16 --char 2 --max-vertices 300");
  CHECK(ok.exit_code == 0);

  // the color enumeration cap guards analyze on very long factor lists
  std::string many = "2x2";
  for (int i = 1; i < 14; ++i) many += ",2x2";
  CHECK(run("analyze --params " + many).exit_code == 3);
}

TEST_CASE("sweep over a grid with a resume cache") {
  std::string grid = work_dir() + "/grid.json";
  {
    std::ofstream os(grid);
    os << R"({"params": ["2x2", "2x3"], "chars": [0, 2, 3]})";
  }
  std::string out1 = work_dir() + "/sweep1.json";
  std::string cache = work_dir() + "/sweep_cache";
  RunResult r1 = run("sweep --grid " + grid + " --out " + out1 + " --cache-dir " + cache +
                     " --jobs 2");
  REQUIRE(r1.exit_code == 0);
  std::ifstream is(out1);
  nlohmann::json arr = nlohmann::json::parse(is);
  REQUIRE(arr.size() == 6);
  CHECK(arr[0]["params"] == "2x2");
  CHECK(arr[0]["char"] == 0);
  CHECK(arr[5]["params"] == "2x3");
  CHECK(arr[5]["char"] == 3);

  // second run resumes from the cache and produces the same dataset
  std::string out2 = work_dir() + "/sweep2.json";
  RunResult r2 = run("sweep --grid " + grid + " --out " + out2 + " --cache-dir " + cache);
  REQUIRE(r2.exit_code == 0);
  std::ifstream is1(out1), is2(out2);
  std::stringstream s1, s2;
  s1 << is1.rdbuf();
  s2 << is2.rdbuf();
  CHECK(s1.str() == s2.str());

  RunResult csv = run("sweep --grid " + grid + " --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("params,char,n,") == 0);
  // one header plus one row per cell, matching the single-cell projection
  CHECK(std::count(csv.output.begin(), csv.output.end(), '\n') == 7);
  RunResult single = run("analyze --params 2x3 --char 2 --format csv");
  std::string row = single.output.substr(single.output.find('\n') + 1);
  CHECK(csv.output.find(row.substr(0, row.find('\n'))) != std::string::npos);

  CHECK(run("sweep --grid /does-not-exist.json").exit_code == 2);
  std::string bad = work_dir() + "/bad_grid.json";
  {
    std::ofstream os(bad);
    os << R"({"params": ["2x2"]})";
  }
  CHECK(run("sweep --grid " + bad).exit_code == 2);
}
