#include <algorithm>
#include <map>

#include "doctest.h"
#include "twistcert/bundled.hpp"
#include "twistcert/characters.hpp"
#include "twistcert/error.hpp"

using namespace twistcert;

namespace {

struct Fixture {
  QuotientGroup group;
  CharacterTable table;
  ReferenceTable reference;
};

const Fixture& fixture(const std::string& which) {
  static std::map<std::string, Fixture> cache;
  auto it = cache.find(which);
  if (it != cache.end()) return it->second;
  std::string rel = which == "g10" ? "T10.1.relators" : "T17.1.relators";
  std::string ref = which == "g10" ? "reference_g10.json" : "reference_g17.json";
  Fixture f;
  f.group = coset_enumerate(parse_relators(bundled_file(rel)));
  f.table = compute_character_table(f.group);
  f.reference = parse_reference_table(nlohmann::json::parse(bundled_file(ref)));
  return cache.emplace(which, std::move(f)).first->second;
}

}  // namespace

TEST_CASE("small groups from triangle quotients") {
  // PSL(2,7) is the (2,3,7) quotient by [x,y]^4.
  QuotientGroup g = coset_enumerate(parse_relators("name psl27\nsignature 2 3 7\n(xyxY)^4\n"));
  REQUIRE(g.order() == 168);
  CharacterTable t = compute_character_table(g);
  CHECK(t.rows.size() == 6);
  std::vector<int> degrees;
  for (const auto& r : t.rows) degrees.push_back(r.degree);
  CHECK(degrees == std::vector<int>{1, 3, 3, 6, 7, 8});
  CHECK(check_orthogonality(t).ok());
  int complex_rows = 0;
  for (const auto& r : t.rows) complex_rows += r.frobenius_schur == 0;
  CHECK(complex_rows == 2);
}

TEST_CASE("exact orthogonality for the bundled groups") {
  for (const char* which : {"g10", "g17"}) {
    const auto& t = fixture(which).table;
    OrthogonalityReport rep = check_orthogonality(t);
    CHECK_MESSAGE(rep.ok(), rep.first_failure);
    int squares = 0;
    for (const auto& r : t.rows) squares += r.degree * r.degree;
    CHECK(squares == t.order);
    // Every value is an algebraic integer in Q(zeta_exponent).
    for (const auto& r : t.rows) {
      for (const auto& v : r.values) {
        CHECK(t.conductor % v.conductor() == 0);
        for (const auto& c : v.coefficients()) CHECK(c.get_den() == 1);
      }
    }
  }
}

TEST_CASE("realification") {
  const auto& t10 = fixture("g10").table;
  const auto& t17 = fixture("g17").table;
  auto degrees = [](const CharacterTable& t) {
    std::vector<int> d;
    for (const auto& r : t.real_rows) d.push_back(r.real_degree);
    std::sort(d.begin(), d.end());
    return d;
  };
  CHECK(degrees(t10) == std::vector<int>{1, 1, 2, 3, 3, 4, 4, 8, 8, 16});
  CHECK(degrees(t17) == std::vector<int>{1, 6, 6, 7, 7, 7, 8, 14, 21, 21});
  for (const auto* t : {&t10, &t17}) {
    int regular = 0;
    for (const auto& r : t->real_rows) {
      for (const auto& v : r.values) CHECK(v.is_real());
      regular += r.regular_multiplicity() * r.real_degree;
      if (r.frobenius_schur == 0) CHECK(r.constituents.size() == 2);
    }
    // The real regular representation has dimension |G|.
    CHECK(regular == t->order);
  }
}

TEST_CASE("tables match the bundled references") {
  for (const char* which : {"g10", "g17"}) {
    const auto& f = fixture(which);
    ValidationReport v = validate_against_reference(f.table, f.reference);
    CHECK(v.matched);
    CHECK(v.realified_invariant);
    CHECK(v.realizability_agrees);
    CHECK(v.galois_bijections >= 1);
    auto sorted = v.row_map;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == static_cast<int>(i));
  }
  // The genus 17 table has an automorphism moving real rows.
  ValidationReport v17 = validate_against_reference(fixture("g17").table, fixture("g17").reference);
  CHECK(v17.matching_bijections > v17.galois_bijections);
  CHECK_FALSE(v17.ambiguous_real_rows.empty());
}

TEST_CASE("a perturbed reference entry is reported") {
  auto f = fixture("g10");
  f.reference.values[3][2] = f.reference.values[3][2] + Cyclotomic(1);
  CHECK_THROWS_AS(validate_against_reference(f.table, f.reference), MismatchError);
}

TEST_CASE("a perturbed table fails orthogonality") {
  CharacterTable t = fixture("g17").table;
  t.rows[2].values[4] = t.rows[2].values[4] + Cyclotomic(1);
  OrthogonalityReport rep = check_orthogonality(t);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.first_failure.empty());
}

TEST_CASE("character table json round-trips") {
  const auto& t = fixture("g10").table;
  nlohmann::json doc = character_table_json(t);
  CharacterTable back = character_table_from_json(doc);
  CHECK(character_table_json(back).dump() == doc.dump());
  CHECK(check_orthogonality(back).ok());
  doc["schema"] = "twistcert.chartable/9";
  CHECK_THROWS_AS(character_table_from_json(doc), InputError);
}

TEST_CASE("real character enclosures match exact values") {
  const auto& t = fixture("g17").table;
  for (int r = 0; r < static_cast<int>(t.real_rows.size()); ++r) {
    for (int c = 0; c < t.class_count(); ++c) {
      CHECK(real_character_enclosure(t, r, c).overlaps(real_character(t, r, c).real_part()));
    }
  }
}
