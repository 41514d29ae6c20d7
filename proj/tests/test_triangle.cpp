#include "doctest.h"
#include "twistcert/error.hpp"
#include "twistcert/triangle.hpp"

using namespace twistcert;

namespace {

Enclosure side_opposite(int at, int a, int b) {
  // cosh(side) = (cos(pi/at) + cos(pi/a) cos(pi/b)) / (sin(pi/a) sin(pi/b)).
  Enclosure pi = Enclosure::pi();
  Enclosure ca = cos(pi / Enclosure(a)), cb = cos(pi / Enclosure(b)), c = cos(pi / Enclosure(at));
  return acosh((c + ca * cb) / (sin(pi / Enclosure(a)) * sin(pi / Enclosure(b))));
}

}  // namespace

TEST_CASE("generators satisfy the triangle relations") {
  for (int r : {7, 8, 9, 12}) {
    TrianglePresentation t = build_presentation(2, 3, r);
    CHECK(t.x.matrix.power(2).encloses_identity());
    CHECK(t.y.matrix.power(3).encloses_identity());
    CHECK(t.z.matrix.power(r).encloses_identity());
    CHECK((t.x.matrix * t.y.matrix * t.z.matrix).encloses_identity());
    CHECK_FALSE(t.z.matrix.power(r - 1).encloses_identity());
  }
}

TEST_CASE("vertices, sides and area") {
  TrianglePresentation t = build_presentation(2, 3, 7);
  CHECK(t.C.x.contains_zero());
  CHECK(t.C.y.contains(mpq_class(1)));
  CHECK(distance(apply(t.z, t.C), t.C).contains_zero());
  CHECK(distance(apply(t.x, t.A), t.A).contains_zero());
  CHECK(distance(apply(t.y, t.B), t.B).contains_zero());
  CHECK(t.side_CA.overlaps(side_opposite(3, 2, 7)));
  CHECK(t.side_CB.overlaps(side_opposite(2, 3, 7)));
  CHECK(t.side_AB.overlaps(side_opposite(7, 2, 3)));
  CHECK(t.area.overlaps(Enclosure::pi() / Enclosure(21)));
  CHECK(build_presentation(2, 3, 8).area.overlaps(Enclosure::pi() / Enclosure(12)));
}

TEST_CASE("invalid signatures are rejected") {
  CHECK_THROWS_AS(build_presentation(2, 3, 6), InvalidSignature);
  CHECK_THROWS_AS(build_presentation(2, 4, 4), InvalidSignature);
  CHECK_THROWS_AS(build_presentation(1, 3, 7), InvalidSignature);
}

TEST_CASE("coverage grows monotonically and matches the label automaton") {
  for (int r : {7, 8}) {
    TrianglePresentation t = build_presentation(2, 3, r);
    CoverageState s = extend_until_covered(t, Enclosure::rational(3, 2));
    REQUIRE(s.radius_history.size() == s.generations.size());
    for (std::size_t i = 1; i < s.radius_history.size(); ++i) {
      CHECK(mpfr_cmp(s.radius_history[i].hi(), s.radius_history[i - 1].lo()) >= 0);
    }
    CHECK(mpfr_cmp(s.inner_radius.lo(), (Enclosure::rational(3, 2) + t.polygon_diameter()).hi()) >= 0);
    auto sym = symbolic_generations(r, static_cast<int>(s.generations.size()));
    for (std::size_t g = 0; g < s.generations.size(); ++g) {
      REQUIRE(sym[g].labels.size() == s.generations[g].size());
      for (std::size_t i = 0; i < sym[g].labels.size(); ++i) CHECK(sym[g].labels[i] == s.generations[g][i].label);
    }
  }
}

TEST_CASE("probe separations are positive") {
  TrianglePresentation t = build_presentation(2, 3, 8);
  CoverageState s = extend_until_covered(t, Enclosure(3));
  WordProblemProbe probe = make_probe(t, s);
  CHECK(probe.delta0.certainly_positive());
  CHECK(probe.delta1.certainly_positive());
  MoebiusElement a = t.element(Word::parse("xyxy"));
  CHECK(equal_in_group(a, a, probe) == Equality::equal);
  CHECK(equal_in_group(t.element(Word::parse("xy")), t.element(Word::parse("z^-1")), probe) == Equality::equal);
  CHECK(equal_in_group(a, t.element(Word::parse("yx")), probe) == Equality::distinct);
}

TEST_CASE("tiling json lists every generation") {
  TrianglePresentation t = build_presentation(2, 3, 7);
  CoverageState s = extend_until_covered(t, Enclosure(1));
  nlohmann::json doc = tiling_json(t, s);
  CHECK(doc.at("schema") == "twistcert.tiling/1");
  CHECK(doc.contains("precision"));
}
