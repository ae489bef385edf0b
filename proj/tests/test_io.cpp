#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "plueckerlab/cli/app.hpp"
#include "plueckerlab/io/fixtures.hpp"
#include "plueckerlab/io/records.hpp"
#include "plueckerlab/io/report.hpp"

using namespace plab;
using io::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("plab_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("rationals round-trip through json") {
  CHECK(io::rational_json(Rational(-3, 4)) == "-3/4");
  CHECK(io::rational_from(json("6/8")) == Rational(3, 4));
  CHECK(io::rational_from(json(5)) == 5);
  CHECK_THROWS_AS(io::rational_from(json(0.5)), io::InputError);
}

TEST_CASE("every built-in fixture round-trips") {
  for (const auto& name : io::builtin_names()) {
    auto j = io::builtin_fixture(name);
    REQUIRE(j);
    if ((*j)["kind"] == "web") {
      auto r = io::web_from_json(*j);
      CHECK(io::to_json(r) == *j);
      CHECK_FALSE(r.citation.empty());
    } else {
      auto r = io::flux_from_json(*j);
      CHECK(io::to_json(r) == *j);
      CHECK_FALSE(r.citation.empty());
    }
  }
}

TEST_CASE("point and line parsing") {
  CHECK(io::parse_point("(1:3/2:5:2)") == QVector{1, Rational(3, 2), 5, 2});
  CHECK(io::parse_point("1, 2 ,3") == QVector{1, 2, 3});
  CHECK_THROWS_AS(io::parse_point("(1:x)"), io::InputError);
  auto l = io::parse_line("(1:0:0:0),(0:1:0:0)", 3);
  CHECK(l.coords() == QVector{1, 0, 0, 0, 0, 0});
}

TEST_CASE("bad webs are validation errors") {
  json j = *io::builtin_fixture("wave");
  j["matrices"][0][0][1] = "7";
  CHECK_THROWS_AS(io::web_from_json(j), io::InputError);
  json k = *io::builtin_fixture("wave");
  k["matrices"].erase(1);
  CHECK_THROWS_AS(io::web_from_json(k), io::InputError);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli({"classify", "wave"}).code == 0);
  CHECK(run_cli({"classify", "no-such-file"}).code == 2);
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({"temple", "wave-flux", "--samples", "0"}).code == 2);
  json bad = *io::builtin_fixture("wave");
  bad["matrices"][0][0][1] = "7";
  CHECK(run_cli({"classify", temp_file("bad.json", bad.dump())}).code == 2);
  CHECK(run_cli({"foci", "af-k1", "--point", "(0:0:1:2:3:4)"}).code == 2);
  CHECK(run_cli({"foci", "af-k1", "--point", "(0:0:1:2:3:4)", "--pencil"}).code == 0);
  SkewWeb w6{6, {}};
  for (std::size_t k = 0; k < 5; ++k) w6.mats.push_back(SkewMatrix::elementary(7, k, k + 1));
  json n6 = io::to_json(io::WebRecord{"n6", "test web in P^6", {}, w6});
  CHECK(run_cli({"classify", temp_file("n6.json", n6.dump())}).code == 3);
}

TEST_CASE("json reports round-trip and are deterministic") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"classify", "wave", "--json"}, {"foci", "wave", "--point", "(1:3:5:2)", "--json"},
        {"hilbert", "n4-generic", "--json"}, {"temple", "wave-flux", "--json"}, {"pfaffian", "af-k2", "--json"}}) {
    auto a = run_cli(args), b = run_cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto j = json::parse(a.out);
    CHECK(io::to_json(io::report_from_json(j)) == j);
    CHECK_FALSE(j.contains("timing_ms"));
  }
}

TEST_CASE("file input equals the built-in fixture") {
  auto path = temp_file("wave.json", io::builtin_fixture("wave")->dump(2));
  auto a = run_cli({"classify", path, "--json"});
  auto b = run_cli({"classify", "wave", "--json"});
  REQUIRE(a.code == 0);
  CHECK(json::parse(a.out)["input"]["digest"] == json::parse(b.out)["input"]["digest"]);
  CHECK(json::parse(a.out)["result"] == json::parse(b.out)["result"]);
}

TEST_CASE("exported fixture files match the built-in fixtures") {
  for (const auto& name : io::builtin_names()) {
    std::ifstream in(std::string(PLAB_FIXTURE_DIR) + "/" + name + ".json");
    REQUIRE_MESSAGE(in.good(), name);
    CHECK(json::parse(in) == *io::builtin_fixture(name));
  }
}
