#include "doctest.h"
#include "twistcert/certify.hpp"
#include "twistcert/error.hpp"

using namespace twistcert;

namespace {

ExclusionCheck row(int index, int degree, Verdict v) {
  ExclusionCheck c;
  c.real_row = index;
  c.real_degree = degree;
  c.verdict = v;
  c.lhs = Enclosure(1);
  c.rhs = v == Verdict::excluded ? Enclosure::rational(1, 2) : Enclosure(2);
  c.geometric.total = c.rhs;
  c.geometric.identity = c.rhs;
  return c;
}

CertificateParams params(int mu, int upper) {
  CertificateParams p;
  p.lambda_max = mpq_class(1223, 1000);
  p.mu = mu;
  p.m1_upper = upper;
  return p;
}

}  // namespace

TEST_CASE("verdicts are strict") {
  Enclosure a = Enclosure::rational(1, 2), b = Enclosure::rational(1, 3);
  CHECK(compare(a, b) == Verdict::excluded);
  CHECK(compare(b, a) == Verdict::failed);
  CHECK(compare(a, a) == Verdict::failed);  // equality does not exclude
  CHECK(compare(Enclosure::hull(b, a), Enclosure::rational(2, 5)) == Verdict::undecided);
  for (Verdict v : {Verdict::excluded, Verdict::failed, Verdict::undecided}) {
    CHECK(verdict_from_name(verdict_name(v)) == v);
  }
}

TEST_CASE("spectral side uses the matching axis") {
  TestFunction tf;
  Enclosure below = spectral_lhs(tf, mpq_class(1, 5));  // lambda < 1/4
  Enclosure at = spectral_lhs(tf, mpq_class(1, 4));
  Enclosure above = spectral_lhs(tf, mpq_class(1223, 1000));
  CHECK(at.contains(mpq_class(1)));
  CHECK(below.certainly_greater(at));
  CHECK(above.certainly_less(at));
  CHECK(above.lo_double() > 0.68951);
  CHECK(above.hi_double() < 0.68952);
}

TEST_CASE("the trivial row subtracts the eigenvalue zero") {
  TestFunction tf;
  GeometricSide g;
  g.total = Enclosure(2);
  ExclusionCheck plain = check_exclusion(0, 1, false, mpq_class(1), g, tf);
  ExclusionCheck trivial = check_exclusion(0, 1, true, mpq_class(1), g, tf);
  CHECK(plain.rhs.contains(mpq_class(2)));
  CHECK(trivial.rhs.overlaps(Enclosure(2) - fhat_value(tf, Enclosure::rational(1, 2), Axis::imaginary)));
}

TEST_CASE("monotonicity threshold") {
  TestFunction tf;
  Monotonicity m = check_monotonicity(tf, mpq_class(1223, 1000));
  CHECK(m.pass);
  CHECK(m.threshold.overlaps(sqr(Enclosure::pi() / Enclosure::rational(3, 4)) + Enclosure::rational(1, 4)));
  CHECK_FALSE(check_monotonicity(tf, mpq_class(18)).pass);
}

TEST_CASE("conclusion rules") {
  TestFunction tf;
  Monotonicity ok = check_monotonicity(tf, mpq_class(1223, 1000));
  std::vector<ExclusionCheck> good = {row(0, 1, Verdict::excluded), row(1, 8, Verdict::excluded),
                                      row(2, 16, Verdict::failed)};
  Certificate c = certify_multiplicity("demo", 10, params(16, 20), good, ok);
  CHECK(c.concluded);
  CHECK(c.k == 1);
  CHECK(c.m1 == 16);

  // A low-degree row that is not excluded blocks the conclusion.
  auto bad = good;
  bad[1].verdict = Verdict::undecided;
  CHECK_THROWS_AS(certify_multiplicity("demo", 10, params(16, 20), bad, ok), InconclusiveCertificate);
  CHECK_FALSE(assemble_certificate("demo", 10, params(16, 20), bad, ok).concluded);

  // m1 <= 32 would allow k = 2.
  CHECK_FALSE(assemble_certificate("demo", 10, params(16, 32), good, ok).concluded);

  // Outside the monotonicity window nothing is concluded.
  Monotonicity out = check_monotonicity(tf, mpq_class(20));
  CHECK_FALSE(assemble_certificate("demo", 10, params(16, 20), good, out).concluded);

  // A surviving row above mu is not allowed either.
  auto high = good;
  high.push_back(row(3, 18, Verdict::undecided));
  CHECK_FALSE(assemble_certificate("demo", 10, params(16, 20), high, ok).concluded);
}

TEST_CASE("certificates round-trip and re-verify") {
  TestFunction tf;
  Monotonicity ok = check_monotonicity(tf, mpq_class(1223, 1000));
  std::vector<ExclusionCheck> checks = {row(0, 1, Verdict::excluded), row(1, 16, Verdict::failed)};
  Certificate c = certify_multiplicity("demo", 10, params(16, 20), checks, ok, {{"classes", "abc"}});
  nlohmann::json doc = certificate_json(c);
  CHECK(doc.at("schema") == "twistcert.certificate/1");
  Certificate back = certificate_from_json(doc);
  CHECK(certificate_json(back).dump() == doc.dump());
  CHECK(recheck_certificate(back));

  // Tampering with a verdict is detected.
  doc["checks"][0]["verdict"] = "failed";
  CHECK_FALSE(recheck_certificate(certificate_from_json(doc)));
  doc["schema"] = "twistcert.certificate/2";
  CHECK_THROWS_AS(certificate_from_json(doc), InputError);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == mpq_class(3, 4));
  CHECK(parse_rational("1.223") == mpq_class(1223, 1000));
  CHECK(parse_rational("-0.5") == mpq_class(-1, 2));
  CHECK(parse_rational(" 5 ") == 5);
  CHECK(parse_rational("5.0") == 5);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}
