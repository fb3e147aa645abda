#include "pathstar/containment.hpp"
#include "pathstar/formulas.hpp"

#include <doctest.h>

using namespace pathstar;

namespace {
std::vector<std::string> labels(const FormulaResult &r) {
  std::vector<std::string> out;
  for (const auto &d : r.extremal)
    out.push_back(d.label());
  return out;
}
} // namespace

TEST_CASE("brackets") {
  CHECK(bracket_path(10, 10, 5) == 36);
  CHECK(bracket_path(38, 10, 5) == 78);
  for (Count n = 2; n < 50; ++n)
    CHECK(bracket_path(n, 2, 2) == 0);
  CHECK(bracket_star(10, 5) == 30);
  CHECK(bracket_star(23, 4) == 63);
  for (Count n = 1; n < 50; ++n)
    CHECK(bracket_star(n, 1) == 0);
  // [n,10,5] = 36 + [n-9,5,5]
  for (Count n = 14; n < 500; ++n)
    CHECK(bracket_path(n, 10, 5) == 36 + bracket_path(n - 9, 5, 5));
}

TEST_CASE("single path") {
  auto a = ex_path(6, 4);
  CHECK(*a.value == 6);
  CHECK(a.applicable == Applicability::Proven);
  CHECK(labels(a) == std::vector<std::string>{"ERDOS_GALLAI(6,4)"});

  auto b = ex_path(5, 4);
  CHECK(*b.value == 4);
  CHECK(b.extremal.size() == 2);

  auto c = ex_path(5, 5);
  CHECK(*c.value == 6);
  REQUIRE(c.extremal.size() == 1);
  CHECK(c.extremal[0].expr.normalized().to_string() == "K1 u K4");

  CHECK(*ex_path(3, 6).value == 3); // below l the complete graph is free

  // Disjoint cliques K_{l-1}: (l-2)n/2 edges when l-1 divides n.
  for (int l = 2; l <= 9; ++l)
    for (Count d = 1; d <= 12; ++d)
      CHECK(*ex_path(d * (l - 1), l).value == (l - 2) * d * (l - 1) / 2);
}

TEST_CASE("two copies of P5") {
  auto a = ex_two_p5(10);
  CHECK(*a.value == 36);
  bool has_k9 = false;
  for (const auto &d : a.extremal)
    has_k9 = has_k9 || d.name == ExtremalName::K9PlusExP5;
  CHECK(has_k9);

  auto b = ex_two_p5(38);
  CHECK(*b.value == 109);
  CHECK(labels(b) == std::vector<std::string>{"G3(38,0)"});

  CHECK(*ex_two_p5(20).value == 55);
  auto c = ex_two_p5(9);
  CHECK(c.applicable == Applicability::OutsideRange);
  CHECK_FALSE(c.value.has_value());
}

TEST_CASE("k even paths") {
  auto a = ex_k_even_paths(23, 2, 4);
  CHECK(*a.value == 63);
  REQUIRE(a.extremal.size() == 1);
  CHECK(a.extremal[0].expr.normalized().to_string() == "K3 v Kbar20");
  CHECK(*a.threshold == 23);

  auto b = ex_k_even_paths(8, 2, 4);
  CHECK(*b.value == 21);
  REQUIRE(b.extremal.size() == 1);
  CHECK(b.extremal[0].expr.normalized().to_string() == "K1 u K7");

  CHECK(*ex_k_even_paths(9, 2, 4).value == 22);
  CHECK_THROWS(ex_k_even_paths(9, 2, 5));
  CHECK_THROWS(ex_k_even_paths(7, 2, 4));
}

TEST_CASE("k stars") {
  CHECK(*ex_k_stars(7, 2, 3).value == 21);
  CHECK(*ex_k_stars(8, 2, 3).value == 21);
  CHECK(*ex_k_stars(20, 2, 3).value == 38);
  CHECK(*ex_k_stars(12, 2, 3).value == 26);
  CHECK(*ex_k_stars(3, 1, 3).value == 3);
  CHECK(*ex_k_stars(9, 1, 3).value == 9);
  CHECK(*ex_k_stars(9, 1, 4).value == 13);
}

TEST_CASE("path-star dispatcher examples") {
  auto a = ex_path_star(26, 1, 1, 4);
  CHECK(*a.value == 49);
  CHECK(labels(a) == std::vector<std::string>{"G1(26,1,4)", "G2(26,1,1,4)"});
  CHECK(a.applicable == Applicability::Proven);

  auto b = ex_path_star(80, 2, 1, 6);
  CHECK(*b.value == 459);
  CHECK(labels(b) == std::vector<std::string>{"G2(80,2,1,6)"});
  CHECK(b.applicable == Applicability::Proven);
  CHECK(*b.threshold == 80);

  auto c = ex_path_star(59, 2, 1, 5);
  CHECK(*c.value == 227);
  CHECK(labels(c) == std::vector<std::string>{"G3(59,1)"});

  CHECK(*ex_path_star(38, 2, 0, 5).value == 109);

  auto below = ex_path_star(79, 2, 1, 6);
  CHECK(below.applicable == Applicability::Conjectured);

  auto none = ex_path_star(30, 3, 1, 5);
  CHECK(none.applicable == Applicability::OutsideRange);
  CHECK_FALSE(none.value.has_value());
}

TEST_CASE("thresholds") {
  CHECK(threshold_one_path(1, 4) == 26);
  CHECK(threshold_even_paths(2, 1, 6) == 80);
  CHECK(threshold_two_p5(1) == 59);
  CHECK(threshold_k_paths_crossover(2, 4) == 23);
  CHECK(threshold_k_paths_crossover(2, 8) == 83);
}

TEST_CASE("ties follow the residue") {
  for (int l : {4, 6, 8})
    for (Count k2 = 0; k2 <= 3; ++k2)
      for (Count n = threshold_one_path(k2, l); n < threshold_one_path(k2, l) + 3 * l; ++n) {
        const auto r = decompose(n - k2, l).r;
        const bool tie = r == l / 2 || r == (l - 2) / 2;
        CHECK(ex_path_star(n, 1, k2, l).extremal.size() == (tie ? 2U : 1U));
      }
}

TEST_CASE("proven results are attained by free constructions") {
  for (int l : {4, 5, 6, 8})
    for (Count k1 = 1; k1 <= 3; ++k1)
      for (Count k2 = 0; k2 <= 3; ++k2)
        for (Count n = 1; n <= 200; n += 7) {
          const auto r = ex_path_star(n, k1, k2, l);
          if (r.applicable != Applicability::Proven)
            continue;
          const auto spec = canonical_family(static_cast<int>(k1), static_cast<int>(k2), l);
          for (const auto &d : r.extremal) {
            const Graph g = build(d.expr);
            CHECK(g.edge_count() == *r.value);
            // With three stars the search gets slow past n = 60.
            if (n <= 60 || (k2 <= 2 && n <= 120))
              CHECK(is_free(g, spec));
          }
        }
}

TEST_CASE("values do not decrease within a proven regime") {
  for (int l : {4, 5, 6, 8})
    for (Count k1 = 1; k1 <= 3; ++k1)
      for (Count k2 = 0; k2 <= 3; ++k2) {
        std::optional<Count> prev;
        std::string regime;
        for (Count n = 1; n <= 200; ++n) {
          const auto r = ex_path_star(n, k1, k2, l);
          if (r.applicable != Applicability::Proven) {
            prev.reset();
            continue;
          }
          if (prev && r.regime == regime)
            CHECK(*r.value >= *prev);
          prev = r.value;
          regime = r.regime;
        }
      }
}

TEST_CASE("2P5 agreement") {
  for (Count n = 38; n <= 400; ++n)
    CHECK(*ex_path_star(n, 2, 0, 5).value == *ex_two_p5(n).value);
}
