#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <sstream>

using nlohmann::json;
namespace cli = pathstar::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string &input = {}) {
  args.insert(args.begin(), "pathstar");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

// Exactly one JSON document, one line.
json one_doc(const std::string &text) {
  REQUIRE(!text.empty());
  CHECK(text.back() == '\n');
  CHECK(text.find('\n') == text.size() - 1);
  return json::parse(text);
}

} // namespace

TEST_CASE("formula") {
  auto r = run({"formula", "--family", "path-star", "--n", "59", "--k1", "2", "--k2", "1", "--l", "5", "--json"});
  CHECK(r.code == cli::kExitOk);
  auto j = one_doc(r.out);
  CHECK(j["value"] == 227);
  CHECK(j["applicable"] == "PROVEN");
  CHECK(j["extremal"].is_array());

  r = run({"formula", "--family", "path", "--n", "6", "--l", "4", "--json"});
  CHECK(one_doc(r.out)["value"] == 6);

  r = run({"formula", "--family", "path-star", "--n", "30", "--k1", "3", "--k2", "1", "--l", "5", "--json"});
  CHECK(r.code == cli::kExitOk);
  j = one_doc(r.out);
  CHECK(j["value"].is_null());

  r = run({"formula", "--family", "path-star", "--n", "59", "--k1", "2", "--k2", "1", "--l", "5"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.rfind("value 227", 0) == 0);

  r = run({"formula", "--family", "two-p5", "--n", "59", "--json"});
  CHECK(one_doc(r.out)["value"] == 172);
}

TEST_CASE("construct") {
  auto r = run({"construct", "g3:38,0", "--json"});
  CHECK(r.code == cli::kExitOk);
  auto j = one_doc(r.out);
  CHECK(j["descriptor"]["n"] == 38);
  CHECK(j["descriptor"]["edges_formula"] == j["descriptor"]["edges_counted"]);

  r = run({"construct", "h:13,1,4,1", "--json"});
  CHECK(r.code == cli::kExitOk);
  CHECK(one_doc(r.out)["descriptor"]["edges_formula"].is_null());

  CHECK(run({"construct", "g9:1,2"}).code == cli::kExitUsage);
  CHECK(run({"construct", "g3:3,0"}).code == cli::kExitUsage);
}

TEST_CASE("check-free") {
  auto r = run({"check-free", "--construct", "g3:38,0", "--forest", "2P5", "--json"});
  CHECK(r.code == cli::kExitOk);
  CHECK(one_doc(r.out)["free"] == true);

  r = run({"check-free", "--graph", "I~~~~~~~w", "--forest", "2P5", "--json"});
  CHECK(r.code == cli::kExitFail);
  auto j = one_doc(r.out);
  CHECK(j["free"] == false);
  CHECK(j["embedding"].size() == 2);

  // stdin and a label shuffle give the same verdict, certificate in input labels
  r = run({"check-free", "--graph", "-", "--forest", "P4+S3", "--seed", "9", "--json"}, "I~~~~~~~w\n");
  CHECK(r.code == cli::kExitFail);
  CHECK(one_doc(r.out)["embedding"].size() == 2);

  CHECK(run({"check-free", "--graph", "!!", "--forest", "P5"}).code == cli::kExitUsage);
  CHECK(run({"check-free", "--graph", "@", "--forest", "Q5"}).code == cli::kExitUsage);
  CHECK(run({"check-free", "--graph", "@"}).code == cli::kExitUsage);
}

TEST_CASE("oracle") {
  auto r = run({"oracle", "--n", "5", "--forest", "P4", "--json"});
  CHECK(r.code == cli::kExitOk);
  auto j = one_doc(r.out);
  CHECK(j["max_edges"] == 4);
  CHECK(j["extremal_classes"] == json::array({"D?{", "D`K"}));
  CHECK(j["cached"] == false);

  const auto dir = std::filesystem::temp_directory_path() / "pathstar-cli-cache";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  r = run({"oracle", "--n", "6", "--forest", "P4", "--cache-dir", dir.string(), "--json"});
  CHECK(one_doc(r.out)["cached"] == false);
  r = run({"oracle", "--n", "6", "--forest", "P4", "--cache-dir", dir.string(), "--json"});
  j = one_doc(r.out);
  CHECK(j["cached"] == true);
  CHECK(j["max_edges"] == 6);
  std::filesystem::remove_all(dir);

  CHECK(run({"oracle", "--n", "10", "--forest", "P4"}).code == cli::kExitUsage);
  CHECK(run({"oracle", "--n", "11", "--forest", "P4", "--allow-long"}).code == cli::kExitUsage);
}

TEST_CASE("crossover") {
  auto r = run({"crossover", "--f", "bracket_path:10,5", "--g", "linear:3,-5", "--lo", "10", "--hi", "1000",
                "--claim", "38", "--json"});
  CHECK(r.code == cli::kExitOk);
  auto j = one_doc(r.out);
  CHECK(j["stabilization"] == 18);
  CHECK(j["claim_holds"] == true);

  r = run({"crossover", "--f", "bracket_path:6,2", "--g", "bracket_star:3", "--lo", "6", "--hi", "100",
           "--claim", "6", "--json"});
  CHECK(r.code == cli::kExitFail);
  CHECK(one_doc(r.out)["first_violation_above_claim"] == 6);

  CHECK(run({"crossover", "--f", "bogus", "--g", "const:1", "--lo", "1", "--hi", "2"}).code == cli::kExitUsage);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "gap-identity", "--grid", "quick", "--json"});
  CHECK(r.code == cli::kExitOk);
  auto j = one_doc(r.out);
  CHECK(j["status"] == "PASS");
  CHECK(j["suites"].size() == 1);

  r = run({"verify", "--suite", "lemma-h", "--grid", "quick", "--json"});
  CHECK(r.code == cli::kExitFail);
  CHECK(one_doc(r.out)["status"] == "FAIL");

  CHECK(run({"verify", "--suite", "nope"}).code == cli::kExitUsage);
  CHECK(run({"verify", "--grid", "huge"}).code == cli::kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"formula", "--family", "path"}).code == cli::kExitUsage);
  auto r = run({"formula", "--family", "nope", "--n", "5", "--json"});
  CHECK(r.code == cli::kExitUsage);
  auto j = one_doc(r.out);
  CHECK(j["exit"] == 2);
  CHECK(j.contains("error"));
  CHECK(run({"formula", "--family", "path", "--n", "0"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}
