#include <random>

#include "doctest.h"
#include "twistcert/enclosure.hpp"
#include "twistcert/error.hpp"

using namespace twistcert;

TEST_CASE("rational operations contain the exact result") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> num(-1'000'000, 1'000'000), den(1, 100'000);
  for (int i = 0; i < 20000; ++i) {
    mpq_class a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    Enclosure ea = Enclosure::rational(a), eb = Enclosure::rational(b);
    REQUIRE((ea + eb).contains(mpq_class(a + b)));
    REQUIRE((ea - eb).contains(mpq_class(a - b)));
    REQUIRE((ea * eb).contains(mpq_class(a * b)));
    if (b != 0) REQUIRE((ea / eb).contains(mpq_class(a / b)));
  }
}

TEST_CASE("elementary functions at known points") {
  CHECK(sin(Enclosure::pi()).contains_zero());
  CHECK(cos(Enclosure(0)).contains(mpq_class(1)));
  CHECK(exp(Enclosure(0)).contains(mpq_class(1)));
  CHECK(log(Enclosure(1)).contains_zero());
  CHECK(sqrt(Enclosure(4)).contains(mpq_class(2)));
  CHECK(acosh(cosh(Enclosure::rational(3, 2))).contains(mpq_class(3, 2)));
  CHECK(asinh(sinh(Enclosure::rational(-7, 3))).contains(mpq_class(-7, 3)));
  CHECK(sinc(Enclosure(0)).contains(mpq_class(1)));
  CHECK(sinhc(Enclosure(0)).contains(mpq_class(1)));
  CHECK(sinhc(Enclosure(2)).overlaps(sinh(Enclosure(2)) / Enclosure(2)));
  CHECK((sqr(sin(Enclosure(1))) + sqr(cos(Enclosure(1)))).contains(mpq_class(1)));
}

TEST_CASE("functions over wide arguments enclose every member") {
  Enclosure wide = Enclosure::rational(mpq_class(-1, 3)) ;
  wide = Enclosure::hull(wide, Enclosure(2));
  Enclosure s = sin(wide);
  for (int k = -3; k <= 20; ++k) {
    Enclosure point = sin(Enclosure::rational(k, 10));
    CHECK(s.contains(point));
  }
  CHECK(sqr(Enclosure::hull(Enclosure(-1), Enclosure(2))).contains(mpq_class(0)));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(sqrt(Enclosure(-1)), DomainError);
  CHECK_THROWS_AS(log(Enclosure(0)), DomainError);
  CHECK_THROWS_AS(acosh(Enclosure::rational(1, 2)), DomainError);
  CHECK_THROWS_AS(Enclosure(1) / Enclosure::hull(Enclosure(-1), Enclosure(1)), DomainError);
}

TEST_CASE("precision guard scopes the working precision") {
  Precision before = working_precision();
  {
    PrecisionGuard g(256);
    CHECK(working_precision() == 256);
    CHECK(Enclosure::pi().precision() == 256);
    CHECK(Enclosure::pi().width_upper() < 1e-70);
  }
  CHECK(working_precision() == before);
}

TEST_CASE("doubling precision narrows and stays consistent") {
  Enclosure low = exp(sin(Enclosure::rational(7, 3)));
  PrecisionGuard g(2 * working_precision());
  Enclosure high = exp(sin(Enclosure::rational(7, 3)));
  CHECK(low.overlaps(high));
  CHECK(high.width_upper() <= low.width_upper());
}

TEST_CASE("serialized endpoints round-trip exactly") {
  Enclosure e = Enclosure::pi() / Enclosure(7);
  Enclosure back = Enclosure::parse_exact(e.lo_string(), e.hi_string(), e.precision());
  CHECK(mpfr_equal_p(e.lo(), back.lo()));
  CHECK(mpfr_equal_p(e.hi(), back.hi()));
}

TEST_CASE("comparisons are certain or absent") {
  Enclosure a = Enclosure::rational(1, 3), b = Enclosure::rational(1, 2);
  CHECK(a.certainly_less(b));
  CHECK_FALSE(b.certainly_less(a));
  Enclosure h = Enclosure::hull(a, b);
  CHECK_FALSE(h.certainly_less(b));
  CHECK_FALSE(h.certainly_greater(a));
  CHECK(h.overlaps(a));
}

TEST_CASE("elementary function names") {
  auto fn = parse_elementary_fn("arccosh");
  REQUIRE(fn);
  CHECK(env_fn(*fn, Enclosure(1)).contains_zero());
  CHECK_FALSE(parse_elementary_fn("gamma"));
}
