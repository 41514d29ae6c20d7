#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "twistcert/certify.hpp"

namespace twistcert {

// Bundled parameter set for one surface.
struct Preset {
  std::string name;  // "genus10" / "genus17"
  int genus = 0;
  int p = 2, q = 3, r = 7;
  std::string relators_file;
  std::string reference_file;
  mpq_class lambda_max;
  int m1_upper = 0;
  int mu = 0;
  mpq_class d;
  mpq_class max_length;
};

std::vector<std::string> preset_names();
Preset load_preset(const std::string& name);  // throws InputError for unknown names

struct RunConfig {
  std::string preset;  // empty for custom runs
  int p = 2, q = 3, r = 7;
  std::string relators_path;  // custom relators file
  std::optional<mpq_class> d, max_length, lambda_max;
  std::optional<int> m1_upper, mu;
  std::string classes_path;    // optional precomputed class list
  std::string chartable_path;  // optional precomputed character table
  int threads = 1;
  std::size_t max_cosets = 4'000'000;
  QuadratureOptions quadrature;
};

// Parameters after applying preset defaults and overrides.
struct ResolvedRun {
  std::string group_name;
  int genus = 0;  // from the cover; preset genus is cross-checked
  int p = 2, q = 3, r = 7;
  GroupPresentationData relators;
  std::optional<ReferenceTable> reference;
  CertificateParams params;
};

ResolvedRun resolve(const RunConfig& config);

struct GroupStage {
  QuotientGroup group;
  CoverReport cover;
};
GroupStage build_group(const ResolvedRun& run, std::size_t max_cosets = 4'000'000);

struct TableStage {
  CharacterTable table;
  OrthogonalityReport orthogonality;
  std::optional<ValidationReport> validation;
  std::vector<std::string> real_row_labels;  // reference names per real row
};
// Computes (or loads) the table, checks orthogonality, validates against the
// reference when one is bundled.
TableStage build_table(const ResolvedRun& run, const QuotientGroup& g, const std::string& chartable_path = "");

ClassEnumeration build_classes(const TrianglePresentation& t, const mpq_class& max_length, int threads,
                               const std::string& classes_path = "");

// Index of the real row with constant value 1.
int trivial_real_row(const CharacterTable& t);

struct CertificationRun {
  ResolvedRun run;
  GroupStage group;
  TableStage table;
  ClassEnumeration classes;
  std::vector<GeometricSide> sides;
  Certificate certificate;
  std::map<std::string, double> seconds;  // wall time per stage
};

// The whole pipeline. Never throws on failed inequalities: the certificate
// records concluded = false instead.
CertificationRun run_certification(const RunConfig& config);

}  // namespace twistcert
