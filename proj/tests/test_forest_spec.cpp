#include "pathstar/forest_spec.hpp"

#include <doctest.h>

using namespace pathstar;

TEST_CASE("grammar examples") {
  const auto a = parse_spec("2P5+3S4");
  CHECK(a.total_vertices() == 25);
  CHECK(a.path_count() == 2);
  CHECK(a.star_count() == 3);
  CHECK(a.to_string() == "2P5+3S4");

  const auto b = parse_spec("P4+S3");
  CHECK(b == canonical_family(1, 1, 4));
  CHECK(b.total_vertices() == 8);

  CHECK(parse_spec(" 2 P5 + S4 ") == parse_spec("2P5+S4"));
}

TEST_CASE("normalized order") {
  // Larger components first, paths before stars of the same size.
  CHECK(parse_spec("S3+P4").to_string() == "P4+S3");
  CHECK(parse_spec("P3+S4").to_string() == "S4+P3");
  CHECK(parse_spec("P2+P5+P2").to_string() == "P5+2P2");
  CHECK(parse_spec("S1+P2").to_string() == "P2+S1");
}

TEST_CASE("round trip through text") {
  for (const char *text : {"P2", "S1", "10P7+S6+3S2", "P3+P3+S2"}) {
    const auto s = parse_spec(text);
    CHECK(parse_spec(s.to_string()) == s);
  }
}

TEST_CASE("errors carry positions") {
  auto position = [](const char *text) {
    try {
      parse_spec(text);
    } catch (const ForestSpecError &e) {
      return static_cast<long>(e.position);
    }
    return -1L;
  };
  CHECK(position("0P5") == 0);
  CHECK(position("P1") >= 0);
  CHECK(position("S0") >= 0);
  CHECK(position("P5+") == 3);
  CHECK(position("P5 x") == 3);
  CHECK(position("") == 0);
  CHECK(position("Q5") == 0);
  CHECK_THROWS_AS(parse_spec("P999999999999"), ForestSpecError);
}

TEST_CASE("canonical family") {
  CHECK(canonical_family(2, 3, 5).to_string() == "2P5+3S4");
  CHECK(canonical_family(1, 0, 6).to_string() == "P6");
  CHECK(canonical_family(0, 2, 4).to_string() == "2S3");
  for (int l = 2; l <= 8; ++l)
    CHECK(canonical_family(2, 2, l).total_vertices() == 4 * l);
}

TEST_CASE("components count vertices") {
  CHECK(Component::star(4).vertex_count() == 5);
  CHECK(Component::path(4).vertex_count() == 4);
  CHECK_THROWS(ForestSpec({Component::path(1)}));
  CHECK_THROWS(ForestSpec({Component::star(0)}));
}
