#include "doctest.h"
#include "twistcert/bundled.hpp"
#include "twistcert/error.hpp"
#include "twistcert/trace.hpp"

using namespace twistcert;

TEST_CASE("closed form of the test function") {
  TestFunction tf;
  mpq_class d = tf.d;
  // Continuity at the branch points and support.
  CHECK(f_inner_branch(tf, 2 * d) == f_outer_branch(tf, 2 * d));
  CHECK(f_outer_branch(tf, 4 * d) == 0);
  CHECK(f_value_exact(tf, 0) == mpq_class(1) / (3 * d));
  CHECK(f_value_exact(tf, 5 * d) == 0);
  for (int k = -50; k <= 50; ++k) {
    mpq_class x(k, 13);
    x.canonicalize();
    CHECK(f_value_exact(tf, x) == f_value_exact(tf, -x));
    CHECK(f_value_exact(tf, x) >= 0);
    CHECK(f_value(tf, Enclosure::rational(x)).contains(f_value_exact(tf, x)));
  }
  // An enclosure straddling 2d covers both branches.
  Enclosure wide = Enclosure::hull(Enclosure::rational(14, 10), Enclosure::rational(16, 10));
  CHECK(f_value(tf, wide).contains(f_value_exact(tf, mpq_class(3, 2))));
  CHECK(f_value(tf, wide).contains(f_value_exact(tf, mpq_class(7, 5))));
}

TEST_CASE("fhat on both axes") {
  TestFunction tf;
  CHECK(fhat_value(tf, Enclosure(0), Axis::real).contains(mpq_class(1)));
  Enclosure y(2);
  Enclosure s = sin(tf.d_enclosure() * y) / (tf.d_enclosure() * y);
  CHECK(fhat_value(tf, y, Axis::real).overlaps(pow(s, 4)));
  Enclosure h = sinh(tf.d_enclosure() / Enclosure(2)) / (tf.d_enclosure() / Enclosure(2));
  CHECK(fhat_value(tf, Enclosure::rational(1, 2), Axis::imaginary).overlaps(pow(h, 4)));
  // fhat(0) equals the integral of f, which is 1.
  CHECK(fhat_value(tf, Enclosure(0), Axis::imaginary).contains(mpq_class(1)));
}

TEST_CASE("identity integrand") {
  TestFunction tf;
  Jet zero = Jet::variable(Enclosure(0), 3);
  // The limit at 0 of f'(x)/sinh(x/2) is -1/(2 d^3); the integrand is its negative.
  CHECK(identity_integrand(tf, zero)[0].contains(mpq_class(-identity_integrand_limit(tf))));
  CHECK(identity_integrand_limit(tf) == mpq_class(-1) / (2 * tf.d * tf.d * tf.d));
  Enclosure x = Enclosure::rational(1, 3);
  // Compare with -f'(x)/sinh(x/2) computed from the polynomial directly.
  mpq_class d = tf.d, xv(1, 3);
  mpq_class fprime = (-3 * xv / (d * d) + 9 * xv * xv / (8 * d * d * d)) / (12 * d);
  Enclosure direct = -Enclosure::rational(fprime) / sinh(x / Enclosure(2));
  CHECK(identity_integrand(tf, Jet::constant(x, 0)).value().overlaps(direct));
}

TEST_CASE("integrals are narrow and positive") {
  TestFunction tf;
  Enclosure id = identity_integral(tf);
  CHECK(id.certainly_positive());
  CHECK(id.width_upper() <= 1e-23);
  CHECK(id.lo_double() > 2.386);
  CHECK(id.hi_double() < 2.3863);
  Enclosure right = elliptic_integral(tf, mpq_class(1, 2));
  Enclosure narrow = elliptic_integral(tf, mpq_class(1, 7));
  CHECK(right.certainly_positive());
  CHECK(narrow.certainly_greater(right));  // the kernel grows as sin(theta) shrinks
  CHECK(elliptic_integral(tf, mpq_class(2, 7)).overlaps(elliptic_integral(tf, mpq_class(5, 7))));
}

TEST_CASE("geometric sides for the genus 10 quotient") {
  QuotientGroup g = coset_enumerate(parse_relators(bundled_file("T10.1.relators")));
  CharacterTable table = compute_character_table(g);
  TrianglePresentation t = build_presentation(2, 3, 8);
  ClassEnumeration classes = enumerate_primitive_hyperbolic(t, Enclosure(3));
  TestFunction tf;
  TraceEvaluator ev(t, enumerate_elliptic(t), classes, g, table, tf);

  std::vector<GeometricSide> sides = ev.all_real_rows();
  std::vector<GeometricSide> threaded = ev.all_real_rows(4);
  REQUIRE(sides.size() == table.real_rows.size());
  Enclosure ell(0), id(0);
  for (std::size_t i = 0; i < sides.size(); ++i) {
    CHECK(sides[i].total.overlaps(sides[i].identity + sides[i].elliptic + sides[i].hyperbolic));
    CHECK(sides[i].total.width_upper() < 1e-20);
    CHECK(mpfr_equal_p(sides[i].total.lo(), threaded[i].total.lo()));
    Enclosure w(table.real_rows[i].regular_multiplicity());
    ell += w * sides[i].elliptic;
    id += w * sides[i].identity;
  }
  CHECK(ell.contains_zero());
  CHECK(ell.width_upper() < 1e-20);
  CHECK(id.overlaps(Enclosure(432) * t.area / (Enclosure(4) * Enclosure::pi()) * ev.identity_integral_value()));

  // Complex rows: the imaginary part of a real-valued character is zero.
  for (int r = 0; r < static_cast<int>(table.rows.size()); ++r) {
    if (table.rows[static_cast<std::size_t>(r)].frobenius_schur != 1) continue;
    CHECK(ev.hyperbolic_term(complex_row_character(table, r, true)).contains_zero());
  }
}

TEST_CASE("class lists must reach the support") {
  QuotientGroup g = coset_enumerate(parse_relators(bundled_file("T10.1.relators")));
  CharacterTable table = compute_character_table(g);
  TrianglePresentation t = build_presentation(2, 3, 8);
  ClassEnumeration short_list = enumerate_primitive_hyperbolic(t, Enclosure(2));
  CHECK_THROWS_AS(TraceEvaluator(t, enumerate_elliptic(t), short_list, g, table, TestFunction{}), IncompleteClassList);
  // With d = 1/2 the support is 2, so the same list suffices.
  CHECK_NOTHROW(TraceEvaluator(t, enumerate_elliptic(t), short_list, g, table, TestFunction{mpq_class(1, 2)}));
}
