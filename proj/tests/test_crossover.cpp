#include "pathstar/crossover.hpp"
#include "pathstar/formulas.hpp"

#include <doctest.h>

#include <random>

using namespace pathstar;

TEST_CASE("formula ids") {
  CHECK(ScalarFormula::parse("bracket_path:10,5")(38) == 78);
  CHECK(ScalarFormula::parse("bracket_star:4")(23) == 63);
  CHECK(ScalarFormula::parse("linear:3,-5")(38) == 109);
  CHECK(ScalarFormula::parse("const:7")(1000) == 7);
  CHECK(ScalarFormula::parse("bracket_path:10,5").id() == "bracket_path:10,5");
  CHECK_THROWS(ScalarFormula::parse("bracket_path:10"));
  CHECK_THROWS(ScalarFormula::parse("nope:1"));
  CHECK_THROWS(ScalarFormula::parse("linear"));
  CHECK_THROWS(ScalarFormula::parse("const:1x"));
}

TEST_CASE("2P5 remark") {
  CrossoverRequest req{ScalarFormula::bracket_path(10, 5), ScalarFormula::linear(3, -5), 10, 1000000, 38, 5};
  const auto r = crossover_scan(req);
  CHECK(r.claim_holds());
  REQUIRE(r.stabilization.has_value());
  CHECK(*r.stabilization == 18);
  CHECK(*r.stabilization <= 38);
  CHECK(r.trace.size() == 5);
  CHECK(r.trace[0].f == 36);
}

TEST_CASE("k paths remark at path order 4") {
  CrossoverRequest req{ScalarFormula::bracket_path(8, 4), ScalarFormula::bracket_star(4), 8, 100000, 23, 0};
  const auto r = crossover_scan(req);
  CHECK(r.claim_holds());
  CHECK(*r.stabilization <= 23);
}

TEST_CASE("path order 2 breaks the remark") {
  // [n,2k,2] is C(2k-1,2); [n,k] grows linearly, so small n lose.
  CrossoverRequest req{ScalarFormula::bracket_path(6, 2), ScalarFormula::bracket_star(3), 6, 1000,
                       threshold_k_paths_crossover(3, 2), 0};
  const auto r = crossover_scan(req);
  CHECK_FALSE(r.claim_holds());
  CHECK(*r.first_violation_above_claim == 6);
}

TEST_CASE("trivial scan") {
  CrossoverRequest req{ScalarFormula::constant(0), ScalarFormula::linear(1, 0), 1, 100, std::nullopt, 0};
  const auto r = crossover_scan(req);
  CHECK(*r.stabilization == 1);
  CHECK(r.violations == 0);
  CHECK(r.claim_holds());
}

TEST_CASE("never stabilizes") {
  CrossoverRequest req{ScalarFormula::linear(1, 0), ScalarFormula::constant(50), 1, 100, 10, 0};
  const auto r = crossover_scan(req);
  CHECK_FALSE(r.stabilization.has_value());
  CHECK(r.violations == 51);
  CHECK(*r.first_violation_above_claim == 50);
}

TEST_CASE("domain checks") {
  CrossoverRequest req{ScalarFormula::bracket_path(10, 5), ScalarFormula::linear(3, -5), 5, 100, std::nullopt, 0};
  CHECK_THROWS(crossover_scan(req));
  req.lo = 200;
  CHECK_THROWS(crossover_scan(req));
}

TEST_CASE("parallel scan equals the serial reference") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Count l = 2 + static_cast<Count>(rng() % 7);
    const Count m = l * (1 + static_cast<Count>(rng() % 4));
    const Count s = 1 + static_cast<Count>(rng() % m);
    const Count lo = m + static_cast<Count>(rng() % 20);
    const Count hi = lo + static_cast<Count>(rng() % 5000);
    std::optional<Count> claim;
    if (rng() % 2)
      claim = lo + static_cast<Count>(rng() % 200);
    CrossoverRequest req{ScalarFormula::bracket_path(m, l), ScalarFormula::bracket_star(s), lo, hi, claim, 3};
    const auto a = crossover_scan(req);
    const auto b = crossover_scan_serial(req);
    CHECK(a.stabilization == b.stabilization);
    CHECK(a.violations == b.violations);
    CHECK(a.first_violation_above_claim == b.first_violation_above_claim);
    CHECK(a.trace.size() == b.trace.size());
  }
}
