// One PASS/FAIL line per acceptance criterion.
//
//   acceptance [--expect-fail 3,5] [--json report.json] [--skip-long]
//
// Exit status is 0 when the set of failing criteria is exactly the expected
// set, so known defects stay visible without breaking ctest.

#include "pathstar/graph6.hpp"
#include "pathstar/oracle.hpp"
#include "pathstar/constructions.hpp"
#include "pathstar/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>

using namespace pathstar;
using nlohmann::json;

namespace {

struct Criterion {
  int number;
  const char *suite;
  double budget_seconds;
};

const Criterion kCriteria[] = {
    {1, "edge-formula", 10},  {2, "freeness", 120},    {3, "lemma-h", 60},      {4, "formula-oracle", 600},
    {5, "crossover", 30},     {6, "gap-identity", 5},  {7, "containment", 300}, {8, "lemma3", 60},
};

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_fail;
  std::string report;
  bool skip_long = false;
  app.add_option("--expect-fail", expect_fail, "Criteria known to fail")->delimiter(',');
  app.add_option("--json", report, "Write the full report here");
  app.add_flag("--skip-long", skip_long, "Skip the informational order-10 oracle run");
  CLI11_PARSE(app, argc, argv);

  std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::set<int> failed;
  json doc = json::array();
  for (const auto &c : kCriteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = run_suite(c.suite);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool ok = rep.passed() && in_time;
    if (!ok)
      failed.insert(c.number);
    std::printf("criterion %d %-15s %s  pass=%zu fail=%zu skipped=%zu  %.2fs (budget %.0fs)%s%s\n", c.number,
                c.suite, ok ? "PASS" : "FAIL", rep.count(PointStatus::Pass), rep.count(PointStatus::Fail),
                rep.count(PointStatus::Skipped), secs, c.budget_seconds, in_time ? "" : " over budget",
                !ok && expected.count(c.number) ? "  [expected]" : "");
    for (const auto &p : rep.points)
      if (p.status == PointStatus::Fail)
        std::printf("    %s: %s\n", p.params.dump().c_str(), p.reason.c_str());
    auto j = rep.to_json();
    j["criterion"] = c.number;
    j["seconds"] = secs;
    doc.push_back(std::move(j));
  }

  if (!skip_long) {
    // Not a criterion: the order-10 oracle value for two copies of P5.
    const auto t0 = std::chrono::steady_clock::now();
    OracleOptions oo;
    oo.allow_long = true;
    oo.seeds = {build(k9_plus_ex_p5(10).expr), build(g3(10, 0).expr)};
    const auto r = turan_oracle(10, parse_spec("2P5"), oo);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("info      ex(10,2P5) oracle    %s  value=%lld classes=%zu examined=%lld  %.2fs\n",
                r.max_edges == 36 ? "PASS" : "FAIL", static_cast<long long>(r.max_edges), r.extremal_classes.size(),
                static_cast<long long>(r.graphs_examined), secs);
  }

  if (!report.empty())
    std::ofstream(report) << doc.dump(2) << '\n';

  const bool as_expected = failed == expected;
  std::printf("%zu of 8 criteria pass; failing set %s the expected one\n", 8 - failed.size(),
              as_expected ? "matches" : "does not match");
  return as_expected ? 0 : 1;
}
