#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int const code = depthkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(std::string const& name) { return std::string(DEPTHKIT_TEST_DATA) + "/" + name; }

fs::path temp_file(std::string const& name) {
  return fs::temp_directory_path() / ("depthkit_test_" + name);
}

}  // namespace

TEST_CASE("depth command") {
  auto const r = run({"depth", data("s3_in_s4.txt")});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind(R"({"min_depth":5,"min_odd_depth":5,"min_even_depth":6,)", 0) == 0);
  auto const ideal = run({"depth", data("s3_in_s4.txt"), "--ideal", "3"});
  REQUIRE(ideal.code == 0);
  CHECK(Json::parse(ideal.out)["min_depth"] == 1);
  CHECK(Json::parse(run({"depth", data("s3_in_s4.txt"), "--ideal", "2,3,4"}).out)["min_depth"] == 4);
  CHECK(Json::parse(run({"depth", data("corner.txt")}).out)["min_depth"] == 3);
}

TEST_CASE("depth command errors") {
  CHECK(run({"depth", data("malformed.txt")}).code == depthkit::cli::kParseError);
  CHECK(run({"depth", data("missing.txt")}).code == depthkit::cli::kParseError);
  CHECK(run({"depth", data("zero_row.txt")}).code == depthkit::cli::kValidationError);
  CHECK(run({"depth", data("s3_in_s4.txt"), "--ideal", "9"}).code == depthkit::cli::kValidationError);
  CHECK(run({"depth", data("s3_in_s4.txt"), "--ideal", "a"}).code == depthkit::cli::kParseError);
  CHECK(run({"depth"}).code == depthkit::cli::kParseError);
  CHECK(run({}).code == depthkit::cli::kParseError);
  CHECK(run({"frobnicate"}).code == depthkit::cli::kParseError);
  auto const bad = run({"depth", data("malformed.txt")});
  CHECK(bad.err.find("line 2") != std::string::npos);
}

TEST_CASE("dot output") {
  auto const path = temp_file("m.dot");
  REQUIRE(run({"depth", data("s3_in_s4.txt"), "--dot", path.string()}).code == 0);
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  CHECK(s.str().find("w2 -- b4") != std::string::npos);
  fs::remove(path);
}

TEST_CASE("sym command") {
  auto const r = run({"sym", "3"});
  REQUIRE(r.code == 0);
  auto const j = Json::parse(r.out);
  CHECK(j["matrix"] == Json::parse("[[1,1,0,0,0],[0,1,1,1,0],[0,0,0,1,1]]"));
  CHECK(j["depth"]["min_depth"] == 5);
  CHECK(j["rows"][1] == "[2,1]");
  CHECK(Json::parse(run({"sym", "1"}).out)["matrix"] == Json::parse("[[1,1]]"));
  CHECK(Json::parse(run({"sym", "1"}).out)["depth"]["min_depth"] == 1);
  CHECK(Json::parse(run({"sym", "5"}).out)["depth"]["min_depth"] == 9);
  CHECK(run({"sym", "0"}).code == depthkit::cli::kValidationError);
  CHECK(run({"sym", "9"}).code == depthkit::cli::kValidationError);
}

TEST_CASE("sym output round-trips through depth") {
  for (std::string n : {"2", "3", "4"}) {
    auto const path = temp_file("sym" + n + ".txt");
    auto const s = run({"sym", n, "--matrix-out", path.string()});
    REQUIRE(s.code == 0);
    auto const d = run({"depth", path.string()});
    REQUIRE(d.code == 0);
    CHECK(Json::parse(d.out) == Json::parse(s.out)["depth"]);
    fs::remove(path);
  }
}

TEST_CASE("graph command") {
  auto const r = run({"graph", data("s3_in_s4.txt")});
  REQUIRE(r.code == 0);
  auto const j = Json::parse(r.out);
  CHECK(j["odd_depth"] == 5);
  CHECK(j["even_depth"] == 6);
  CHECK(j["connected"] == true);
}

TEST_CASE("combdepth command") {
  auto const a3 = Json::parse(run({"combdepth", data("a3_in_s3.txt")}).out);
  CHECK(a3["d_c"] == 2);
  CHECK(a3["normal"] == true);
  auto const s3 = Json::parse(run({"combdepth", data("s3_in_s4.grp")}).out);
  CHECK(s3["normalizer_bound"] == 8);
  CHECK(run({"combdepth", data("not_subgroup.txt")}).code == depthkit::cli::kValidationError);
  CHECK(run({"combdepth", data("s5_in_s6.txt")}).code == depthkit::cli::kResourceError);
  CHECK(run({"combdepth", data("a3_in_s3.txt"), "--cap", "1"}).code == depthkit::cli::kParseError);
}

TEST_CASE("tower command") {
  auto const r = run({"tower", data("s2_in_s3.txt")});
  REQUIRE(r.code == 0);
  auto const j = Json::parse(r.out);
  CHECK(j["max_level"] == 3);
  CHECK(j["all_passed"] == true);
  auto const trivial = run({"tower", data("s3_in_s3.txt")});
  CHECK(trivial.code == 0);
  CHECK(Json::parse(trivial.out)["max_level"] == 2);
  auto const bad = run({"tower", data("s2_in_s3.txt"), "--corrupt-dual-basis"});
  CHECK(bad.code == depthkit::cli::kVerificationFailed);
  CHECK(bad.out.find("counterexample") != std::string::npos);
  CHECK(run({"tower", data("s2_in_s3.txt"), "--level", "1"}).code == depthkit::cli::kValidationError);
  CHECK(run({"tower", data("s2_in_s3.txt"), "--seed", "7"}).out ==
        run({"tower", data("s2_in_s3.txt"), "--seed", "7"}).out);
}

TEST_CASE("group-size guard from the environment") {
  ::setenv("DEPTHKIT_MAX_GROUP", "5", 1);
  CHECK(run({"combdepth", data("a3_in_s3.txt")}).code == depthkit::cli::kResourceError);
  ::setenv("DEPTHKIT_MAX_GROUP", "abc", 1);
  CHECK(run({"combdepth", data("a3_in_s3.txt")}).code == depthkit::cli::kParseError);
  ::setenv("DEPTHKIT_MAX_GROUP", "720", 1);
  CHECK(run({"combdepth", data("s5_in_s6.txt"), "--cap", "2"}).code == 0);
  ::unsetenv("DEPTHKIT_MAX_GROUP");
}

TEST_CASE("pretty JSON is the same document") {
  auto const compact = run({"depth", data("corner.txt")});
  auto const pretty = run({"depth", data("corner.txt"), "--json"});
  CHECK(pretty.out.find('\n') < pretty.out.size() - 1);
  CHECK(Json::parse(pretty.out) == Json::parse(compact.out));
}
