#include "doctest.h"
#include "twistcert/bundled.hpp"
#include "twistcert/error.hpp"
#include "twistcert/quotient.hpp"

using namespace twistcert;

namespace {

QuotientGroup preset_group(const char* file) { return coset_enumerate(parse_relators(bundled_file(file))); }

}  // namespace

TEST_CASE("relator files") {
  GroupPresentationData d = parse_relators("# comment\nname demo\nsignature 2 3 7\nz^-3xyz^-3\n");
  CHECK(d.name == "demo");
  CHECK(d.r == 7);
  REQUIRE(d.relators.size() == 1);
  CHECK(d.relators[0].str() == "z^-3xyz^-3");
  CHECK_THROWS_AS(parse_relators("signature 2 3\n"), InputError);
  CHECK_THROWS_AS(parse_relators("signature 2 3 7\nxq\n"), InputError);
}

TEST_CASE("bundled quotients") {
  QuotientGroup g10 = preset_group("T10.1.relators");
  QuotientGroup g17 = preset_group("T17.1.relators");
  CHECK(g10.order() == 432);
  CHECK(g17.order() == 1344);
  CHECK(g10.class_count() == 11);
  CHECK(g17.class_count() == 11);
  CHECK(verify_cover(g10).genus == 10);
  CHECK(verify_cover(g17).genus == 17);
  CHECK(verify_cover(g17).torsion_free);
}

TEST_CASE("group axioms and relators hold in the quotient") {
  QuotientGroup g = preset_group("T10.1.relators");
  int x = g.generator(Gen::x), y = g.generator(Gen::y), z = g.generator(Gen::z);
  CHECK(g.power(x, 2) == 0);
  CHECK(g.power(y, 3) == 0);
  CHECK(g.power(z, 8) == 0);
  CHECK(g.mul(g.mul(x, y), z) == 0);
  GroupPresentationData d = parse_relators(bundled_file("T10.1.relators"));
  for (const auto& w : d.relators) CHECK(g.element_of_word(w) == 0);
  for (int a = 0; a < g.order(); a += 7) {
    CHECK(g.mul(a, g.inverse(a)) == 0);
    for (int b = 0; b < g.order(); b += 11) {
      for (int c = 0; c < g.order(); c += 53) CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
  }
}

TEST_CASE("element words evaluate back to their element") {
  QuotientGroup g = preset_group("T17.1.relators");
  for (int a = 0; a < g.order(); a += 13) CHECK(g.element_of_word(g.element_word(a)) == a);
  for (int a = 1; a < g.order(); ++a) CHECK(g.element_word(a).length() >= g.element_word(a - 1).length());
}

TEST_CASE("class structure") {
  QuotientGroup g = preset_group("T17.1.relators");
  int total = 0;
  for (int c = 0; c < g.class_count(); ++c) {
    const auto& cls = g.classes()[static_cast<std::size_t>(c)];
    total += static_cast<int>(cls.size());
    CHECK(g.order() % static_cast<int>(cls.size()) == 0);
    for (int m : cls.members) {
      CHECK(g.class_of(m) == c);
      CHECK(g.element_order(m) == cls.element_order);
    }
    CHECK(g.inverse_class(g.inverse_class(c)) == c);
    CHECK(g.power_class(c, cls.element_order) == 0);
  }
  CHECK(total == g.order());
  CHECK(g.classes()[0].size() == 1);
}

TEST_CASE("a relator giving the wrong generator order is not a surface cover") {
  // z^4 = 1 collapses the (2,3,8) generator orders.
  QuotientGroup g = coset_enumerate(parse_relators("name broken\nsignature 2 3 8\nz^4\n"));
  CHECK_THROWS_AS(verify_cover(g), NotASurface);
}

TEST_CASE("coset budget") {
  CHECK_THROWS_AS(coset_enumerate(parse_relators(bundled_file("T17.1.relators")), 100), BudgetExhausted);
}

TEST_CASE("group json") {
  nlohmann::json doc = group_json(preset_group("T10.1.relators"));
  CHECK(doc.at("schema") == "twistcert.group/1");
  CHECK(doc.at("order") == 432);
  CHECK(doc.at("classes").size() == 11);
}
