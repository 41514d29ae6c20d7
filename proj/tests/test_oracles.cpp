#include "doctest.h"
#include "twistcert/conjugacy.hpp"
#include "twistcert/oracles.hpp"
#include "twistcert/trace.hpp"

using namespace twistcert;

TEST_CASE("convolution of boxes") {
  oracle::PiecewisePoly b = oracle::box(mpq_class(1), mpq_class(1, 2));
  oracle::PiecewisePoly tri = oracle::convolve(b, b);
  // Hat function of height 1/2 on [-2, 2].
  CHECK(oracle::evaluate(tri, 0) == mpq_class(1, 2));
  CHECK(oracle::evaluate(tri, 1) == mpq_class(1, 4));
  CHECK(oracle::evaluate(tri, -2) == 0);
  CHECK(oracle::evaluate(tri, 3) == 0);
}

TEST_CASE("fourfold convolution matches the closed form") {
  for (mpq_class d : {mpq_class(3, 4), mpq_class(1, 2), mpq_class(5, 3)}) {
    oracle::PiecewisePoly f = oracle::test_function_by_convolution(d);
    TestFunction tf{d};
    for (int k = -90; k <= 90; ++k) {
      mpq_class x = mpq_class(k, 21) * d;
      x.canonicalize();
      CHECK(oracle::evaluate(f, x) == f_value_exact(tf, x));
    }
  }
}

TEST_CASE("word oracle agrees with the enumeration") {
  for (int r : {7, 8}) {
    TrianglePresentation t = build_presentation(2, 3, r);
    oracle::WordOracleResult w = oracle::word_oracle_classes(t, 1.8);
    ClassEnumeration e = enumerate_primitive_hyperbolic(t, Enclosure::rational(9, 5));
    REQUIRE(w.classes.size() == e.classes.size());
    for (std::size_t i = 0; i < w.classes.size(); ++i) {
      CHECK(w.classes[i].certified_length.overlaps(e.classes[i].length));
      CHECK(w.classes[i].primitive);
    }
  }
}

TEST_CASE("word oracle detects proper powers") {
  // At L = 2.2 the square of the (2,3,7) systole (length 1.968) must not be listed.
  TrianglePresentation t = build_presentation(2, 3, 7);
  oracle::WordOracleResult w = oracle::word_oracle_classes(t, 2.2);
  for (const auto& c : w.classes) CHECK(std::abs(c.length - 2 * 0.98398656) > 1e-6);
  ClassEnumeration e = enumerate_primitive_hyperbolic(t, Enclosure::rational(11, 5));
  CHECK(w.classes.size() == e.classes.size());
}
