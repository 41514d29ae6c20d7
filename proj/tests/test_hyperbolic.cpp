#include "doctest.h"
#include "twistcert/triangle.hpp"

using namespace twistcert;

TEST_CASE("rotations fix their centre and have the right angle") {
  HPoint c(Enclosure::rational(1, 3), Enclosure(2));
  Mat2 g = rotation(c, Enclosure::pi() / Enclosure(3));
  HPoint image = apply(g, c);
  CHECK(distance(image, c).contains_zero());
  CHECK(g.det().contains(mpq_class(1)));
  IsometryClass k = classify(g);
  REQUIRE(k.kind == IsometryKind::elliptic);
  CHECK(k.half_angle->overlaps(Enclosure::pi() / Enclosure(6)));
  CHECK(g.power(6).encloses_identity());
}

TEST_CASE("distance is symmetric and invariant") {
  HPoint p(Enclosure(0), Enclosure(1)), q(Enclosure(1), Enclosure(3));
  CHECK(distance(p, q).overlaps(distance(q, p)));
  CHECK(distance(p, HPoint(Enclosure(0), exp(Enclosure(2)))).overlaps(Enclosure(2)));
  Mat2 g = rotation(HPoint(Enclosure(2), Enclosure(1)), Enclosure(1));
  CHECK(distance(apply(g, p), apply(g, q)).overlaps(distance(p, q)));
}

TEST_CASE("hyperbolic classification and axis distance") {
  // diag(e^(l/2), e^(-l/2)) translates along the imaginary axis by l.
  Enclosure l = Enclosure::rational(3, 2);
  Mat2 g{exp(l / Enclosure(2)), Enclosure(0), Enclosure(0), exp(-l / Enclosure(2))};
  IsometryClass k = classify(g);
  REQUIRE(k.kind == IsometryKind::hyperbolic);
  CHECK(k.length->overlaps(l));
  CHECK(point_axis_distance(g, l, HPoint::i()).contains_zero());
  HPoint off(Enclosure(1), Enclosure(1));
  // Distance from 1 + i to the imaginary axis is asinh(1).
  CHECK(point_axis_distance(g, l, off).overlaps(asinh(Enclosure(1))));
}

TEST_CASE("matrix inverse and power") {
  Mat2 g{Enclosure(2), Enclosure(1), Enclosure(1), Enclosure(1)};
  CHECK((g * g.inverse()).encloses_identity());
  CHECK(g.power(3).trace().overlaps((g * g * g).trace()));
  CHECK(g.power(-2).trace().overlaps((g.inverse() * g.inverse()).trace()));
  CHECK((-g).encloses_identity() == false);
}
