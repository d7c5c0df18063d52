#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "psg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = psg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented outputs") {
  CHECK(run({"classify", "1,2/1,3"}).out == "SD-Left preperiod=PNLN period=L\n");
  CHECK(run({"frobenius", "3,5"}).out == "7\n");
  CHECK(run({"form", "1,2/1,3"}).out == "preperiod=PNLN period=L\n");
  CHECK(run({"sequence", "1,2/1,3", "7"}).out == "PNLNLLLL\n");
  CHECK(run({"outcome", "1,2/1,3", "1"}).out == "N\n");
  CHECK(run({"reduce", "3,5", "8"}).out == "1/2,4 8 representable\n");
  CHECK(run({"tset", "lines", "2"}).out == "1:1 1:2 2:1\n");
  CHECK(run({"tset", "member", "4", "6", "--alpha", "3"}).out == "true\n");
  CHECK(run({"tset", "distance", "3", "3", "--alpha", "1"}).out == "0\n");
}

TEST_CASE("json output") {
  const auto r = run({"--json", "classify", "1,2/1,3"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["class"] == "SD-Left");
  CHECK(j["rules"] == "1,2/1,3");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == psg::cli::kExitUsage);
  CHECK(run({"classify"}).code == psg::cli::kExitUsage);
  CHECK(run({"classify", "1,2"}).code == psg::cli::kExitUsage);
  CHECK(run({"frobenius", "4,6"}).code == psg::cli::kExitUsage);
  CHECK(run({"--isa", "sse9", "classify", "1/2"}).code == psg::cli::kExitUsage);
  CHECK(run({"verify", "nonexistent"}).code == psg::cli::kExitUsage);
  const auto r = run({"form", "2,3/1,30", "--cap", "61"});
  CHECK(r.code == psg::cli::kExitPeriodNotFound);
  CHECK(r.err.find("cap 61") != std::string::npos);
  CHECK(run({"--help"}).code == psg::cli::kExitOk);
}

TEST_CASE("isa override keeps results") {
  for (const char* isa : {"scalar", "word"}) {
    CHECK(run({"--isa", isa, "classify", "2,3/1,6"}).out ==
          "Fair preperiod= period=PRNLPNNN\n");
  }
}

TEST_CASE("map output") {
  const auto csv = run({"map", "1", "2", "--c-range", "3:4", "--d-range", "3:4"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("c,d,class\n", 0) == 0);
  const auto path = std::filesystem::temp_directory_path() / "psg_cli_test.ppm";
  const auto ppm = run({"map", "1", "2", "--c-range", "3:5", "--d-range", "3:4",
                        "--format", "ppm", "--out", path.string()});
  CHECK(ppm.code == 0);
  std::ifstream file(path, std::ios::binary);
  const std::string body((std::istreambuf_iterator<char>(file)), {});
  CHECK(body.rfind("P6\n3 2\n255\n", 0) == 0);
  std::filesystem::remove(path);
  CHECK(run({"map", "1", "2", "--c-range", "3-4"}).code == psg::cli::kExitUsage);
  CHECK(run({"map", "1", "2", "--format", "gif"}).code == psg::cli::kExitUsage);
}

TEST_CASE("verify is deterministic") {
  const auto a = run({"verify", "knapsack", "--seed", "3"});
  const auto b = run({"verify", "knapsack", "--seed", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("PASS 7 knapsack", 0) == 0);
}
