#include <algorithm>

#include "doctest.h"
#include "twistcert/conjugacy.hpp"
#include "twistcert/error.hpp"

using namespace twistcert;

namespace {

std::vector<double> lengths(const ClassEnumeration& e) {
  std::vector<double> out;
  for (const auto& c : e.classes) out.push_back(c.length.mid_double());
  return out;
}

}  // namespace

TEST_CASE("elliptic classes are the powers of the generators") {
  TrianglePresentation t = build_presentation(2, 3, 7);
  auto e = enumerate_elliptic(t);
  CHECK(e.size() == 1 + 2 + 6);
  for (const auto& c : e) {
    CHECK(c.angle_over_pi == mpq_class(c.power, c.order));
    IsometryClass k = classify(t.evaluate(c.word));
    REQUIRE(k.kind == IsometryKind::elliptic);
    // Half angle of the rotation by 2 pi power / order, folded into (0, pi).
    Enclosure half = c.half_angle();
    CHECK((k.half_angle->overlaps(half) || k.half_angle->overlaps(Enclosure::pi() - half)));
  }
}

TEST_CASE("below the systole there are no classes") {
  for (int r : {7, 8}) {
    ClassEnumeration e = enumerate_primitive_hyperbolic(build_presentation(2, 3, r), Enclosure::rational(1, 2));
    CHECK(e.classes.empty());
    CHECK(e.cutoff.contains(mpq_class(1, 2)));
  }
}

TEST_CASE("systoles of the (2,3,7) and (2,3,8) orbifolds") {
  // |trace| of the shortest class is 1 + 2 cos(2 pi/7) resp. 1 + sqrt 2.
  ClassEnumeration e7 = enumerate_primitive_hyperbolic(build_presentation(2, 3, 7), Enclosure(1));
  REQUIRE(e7.classes.size() == 1);
  Enclosure tr7 = Enclosure(2) * cos(Enclosure(2) * Enclosure::pi() / Enclosure(7)) + Enclosure(1);
  CHECK(e7.classes[0].length.overlaps(Enclosure(2) * acosh(tr7 / Enclosure(2))));
  ClassEnumeration e8 = enumerate_primitive_hyperbolic(build_presentation(2, 3, 8), Enclosure::rational(13, 10));
  REQUIRE(e8.classes.size() == 1);
  Enclosure tr8 = Enclosure(1) + sqrt(Enclosure(2));
  CHECK(e8.classes[0].length.overlaps(Enclosure(2) * acosh(tr8 / Enclosure(2))));
}

TEST_CASE("classes up to L = 3") {
  ClassEnumeration e7 = enumerate_primitive_hyperbolic(build_presentation(2, 3, 7), Enclosure(3));
  ClassEnumeration e8 = enumerate_primitive_hyperbolic(build_presentation(2, 3, 8), Enclosure(3));
  CHECK(e7.classes.size() == 6);
  CHECK(e8.classes.size() == 7);
  for (const auto* e : {&e7, &e8}) {
    CHECK(mpfr_cmp_si(e->cutoff.lo(), 3) >= 0);
    auto l = lengths(*e);
    CHECK(std::is_sorted(l.begin(), l.end()));
    for (const auto& c : e->classes) {
      CHECK(c.primitive);
      CHECK(c.length.certainly_positive());
      CHECK(mpfr_cmp_si(c.length.lo(), 3) <= 0);
    }
  }
}

TEST_CASE("representatives have the listed length") {
  TrianglePresentation t = build_presentation(2, 3, 8);
  ClassEnumeration e = enumerate_primitive_hyperbolic(t, Enclosure(3));
  for (const auto& c : e.classes) {
    IsometryClass k = classify(t.evaluate(c.representative.word));
    REQUIRE(k.kind == IsometryKind::hyperbolic);
    CHECK(k.length->overlaps(c.length));
  }
}

TEST_CASE("enumeration does not depend on the thread count") {
  TrianglePresentation t = build_presentation(2, 3, 7);
  EnumerationOptions one, three;
  three.threads = 3;
  ClassEnumeration a = enumerate_primitive_hyperbolic(t, Enclosure(3), one);
  ClassEnumeration b = enumerate_primitive_hyperbolic(t, Enclosure(3), three);
  CHECK(classes_json(t, a).dump() == classes_json(t, b).dump());
}

TEST_CASE("class files round-trip and reject other versions") {
  TrianglePresentation t = build_presentation(2, 3, 7);
  ClassEnumeration e = enumerate_primitive_hyperbolic(t, Enclosure(2));
  nlohmann::json doc = classes_json(t, e);
  ClassEnumeration back = classes_from_json(doc, t);
  CHECK(classes_json(t, back).dump() == doc.dump());
  doc["schema"] = "twistcert.classes/2";
  CHECK_THROWS_AS(classes_from_json(doc, t), InputError);
}

TEST_CASE("radius formulas") {
  Enclosure L(3), D = Enclosure::rational(1, 2);
  CHECK(displacement_bound(L, D).overlaps(Enclosure(2) * asinh(sinh(Enclosure::rational(3, 2)) * cosh(D))));
  CHECK(conjugator_radius(L, D).overlaps(Enclosure(2) * acosh(cosh(Enclosure::rational(3, 4)) * cosh(D))));
  CHECK(capture_radius(L, D).overlaps(max(displacement_bound(L, D), conjugator_radius(L, D))));
}

TEST_CASE("capture radius for the (2,3,8) group at L = 3") {
  // d(C,B) is the side opposite the right angle: cosh = cot(pi/3) cot(pi/8).
  TrianglePresentation t = build_presentation(2, 3, 8);
  CHECK(t.side_CB.lo_double() > 0.860706);
  CHECK(t.side_CB.hi_double() < 0.860707);
  Enclosure R = capture_radius(Enclosure(3), t.side_CB);
  CHECK(R.lo_double() > 3.61648);
  CHECK(R.hi_double() < 3.61649);
}

TEST_CASE("point index finds nearby points") {
  PointIndex idx;
  HPoint p(Enclosure::rational(1, 3), Enclosure(2));
  idx.insert(p, 7);
  auto near = idx.near(HPoint(Enclosure::rational(1, 3), Enclosure(2)));
  CHECK(std::find(near.begin(), near.end(), 7u) != near.end());
  CHECK(idx.near(HPoint(Enclosure(5), Enclosure(1))).empty());
}
