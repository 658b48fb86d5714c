#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "addcomp/cli.hpp"
#include "addcomp/serialization.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "addcomp");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = addcomp::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / "addcomp_cli_test";
    fs::remove_all(path);
    fs::create_directories(path);
    setenv("ADDCOMP_SEED_DIR", path.c_str(), 1);
  }
  ~TempDir() {
    unsetenv("ADDCOMP_SEED_DIR");
    fs::remove_all(path);
  }
};

}  // namespace

TEST_CASE("cli cover") {
  auto r = run({"cover", "--m", "4", "--elements", "1,4", "--mode", "exact"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"L\":2,\"translates\":[1,3]}\n");
  r = run({"cover", "--m", "4", "--elements", "1,4", "--mode", "structured", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"L\":2,\"translates\":[0,2]}\n");
}

TEST_CASE("cli lemma") {
  auto r = run({"lemma", "--max", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "3969/3969 hold\n");
}

TEST_CASE("cli pipeline") {
  TempDir tmp;
  auto r = run({"construct", "--levels", "2"});
  REQUIRE(r.code == 0);
  CHECK(addcomp::read_text_file(tmp.path / "seq.json") ==
        "{\"terms\":[\"1\",\"4\",\"130\",\"31591\"],\"growth_exponent\":4,\"growth_factor_rule\":\"linear\"}\n");

  REQUIRE(run({"complement"}).code == 0);
  const std::string comp = addcomp::read_text_file(tmp.path / "comp.json");
  REQUIRE(run({"complement"}).code == 0);
  CHECK(addcomp::read_text_file(tmp.path / "comp.json") == comp);

  r = run({"verify-coverage"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"N0\":\"5\"") != std::string::npos);

  r = run({"criterion", "--at", "130"});
  CHECK(r.code == 0);
  CHECK(r.out.find("130,3,66,130,74,3,130,9,111,65,99,65") != std::string::npos);

  r = run({"criterion", "--at-level", "1", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"R\":\"111/65\"") != std::string::npos);

  r = run({"report"});
  CHECK(r.code == 0);
  CHECK(fs::exists(tmp.path / "report.svg"));
}

TEST_CASE("cli errors are categorized") {
  TempDir tmp;
  auto r = run({"cover", "--m", "4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("\"error\":\"parse\"") != std::string::npos);

  r = run({"cover", "--m", "40000", "--elements", "1", "--mode", "exact"});
  CHECK(r.code == 2);
  CHECK(r.err.find("\"error\":\"cap\"") != std::string::npos);

  r = run({"criterion"});  // no seq.json yet
  CHECK(r.code == 2);

  REQUIRE(run({"construct", "--levels", "2"}).code == 0);
  REQUIRE(run({"complement"}).code == 0);
  r = run({"criterion", "--at", "100000"});
  CHECK(r.code == 2);
  CHECK(r.err.find("\"error\":\"span\"") != std::string::npos);

  r = run({"construct", "--levels", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("\"error\":\"cap\"") != std::string::npos);

  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
}
