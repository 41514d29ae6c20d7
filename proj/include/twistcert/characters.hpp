#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "twistcert/cyclotomic.hpp"
#include "twistcert/quotient.hpp"

namespace twistcert {

struct ComplexRow {
  int degree = 1;
  std::vector<Cyclotomic> values;  // indexed by class
  int frobenius_schur = 1;         // +1, 0, -1
};

struct RealRow {
  int real_degree = 1;
  std::vector<Cyclotomic> values;  // real cyclotomics, indexed by class
  std::vector<int> constituents;   // complex row indices
  int frobenius_schur = 1;
  // Multiplicity of this real irrep in the real regular representation:
  // real_degree / dim_R End(V) with End(V) = R, C or H.
  int regular_multiplicity() const {
    return frobenius_schur == 1 ? real_degree : frobenius_schur == 0 ? real_degree / 2 : real_degree / 4;
  }
};

struct CharacterTable {
  std::string group;
  int order = 0;
  int conductor = 1;  // exponent of the group; every value lies in Q(zeta_conductor)
  std::vector<int> class_sizes;
  std::vector<int> class_orders;
  std::vector<int> inverse_class;
  std::vector<int> square_class;
  std::vector<std::string> class_words;
  std::vector<ComplexRow> rows;
  std::vector<RealRow> real_rows;
  int prime = 0;  // modulus used by the modular eigenvector computation

  int class_count() const { return static_cast<int>(class_sizes.size()); }
};

// Dixon-Schneider: common eigenvectors of the class-multiplication matrices
// over F_p, p the least prime = 1 mod exponent above 2 sqrt|G|, lifted to
// exact cyclotomic values. Rows sorted by degree then by values.
CharacterTable compute_character_table(const QuotientGroup& g);

// Fills frobenius_schur and real_rows from rows and the square map.
void realify(CharacterTable& t);

struct OrthogonalityReport {
  bool rows_orthonormal = false;
  bool columns_orthogonal = false;
  bool degrees_square_sum = false;
  bool regular_collapse = false;
  bool real_rows_real = false;
  std::string first_failure;
  bool ok() const {
    return rows_orthonormal && columns_orthogonal && degrees_square_sum && regular_collapse && real_rows_real;
  }
};

// Exact checks of both orthogonality relations, sum of squared degrees,
// sum of degree * chi, and realness of realified rows.
OrthogonalityReport check_orthogonality(const CharacterTable& t);

// Value of a real row at a class: exact and enclosed.
const Cyclotomic& real_character(const CharacterTable& t, int real_row, int cls);
Enclosure real_character_enclosure(const CharacterTable& t, int real_row, int cls);

struct ReferenceTable {
  std::string group;
  int order = 0;
  int conductor = 1;
  std::vector<std::string> class_names;
  std::vector<std::string> row_names;
  std::vector<std::vector<Cyclotomic>> values;  // [row][column]
  std::vector<std::string> not_realizable;
};

ReferenceTable parse_reference_table(const nlohmann::json& doc);

struct ValidationReport {
  bool matched = false;
  std::vector<int> column_map;  // reference column -> computed class
  std::vector<int> row_map;     // reference row -> computed complex row
  int matching_bijections = 0;  // column bijections under which every entry matches
  // Matching bijections that fix every real row (they differ from column_map
  // only by Galois-conjugate column swaps); the realified values must agree
  // under all of them.
  int galois_bijections = 0;
  bool realified_invariant = false;
  // Other matching bijections come from automorphisms of the table and move
  // real rows; each entry lists the computed real rows a reference row can
  // name. Reference labels of these rows are ambiguous.
  std::vector<std::vector<int>> ambiguous_real_rows;
  std::vector<std::vector<int>> alternative_row_maps;
  bool realizability_agrees = false;  // reference non-real rows are exactly fs != +1
  nlohmann::json to_json() const;
};

// Searches column bijections compatible with class sizes (computed from the
// reference table by column orthogonality) and matches rows exactly. Throws
// MismatchError naming the closest mismatch when nothing matches.
ValidationReport validate_against_reference(const CharacterTable& t, const ReferenceTable& ref);

nlohmann::json character_table_json(const CharacterTable& t);
CharacterTable character_table_from_json(const nlohmann::json& doc);

}  // namespace twistcert
