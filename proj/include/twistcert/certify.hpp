#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "json.hpp"
#include "twistcert/trace.hpp"

namespace twistcert {

enum class Verdict { excluded, failed, undecided };
std::string verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& name);

struct ExclusionCheck {
  int real_row = -1;
  int real_degree = 0;
  bool trivial = false;
  std::string label;  // reference row name(s), informational
  Enclosure lambda_max;
  Enclosure lhs;  // fhat at sqrt(lambda_max - 1/4)
  Enclosure rhs;  // geometric side, minus fhat(i/2) for the trivial row
  GeometricSide geometric;
  Verdict verdict = Verdict::undecided;
};

// Strict comparison of enclosures: excluded iff lhs.lo > rhs.hi, failed iff
// rhs.lo >= lhs.hi, undecided otherwise.
Verdict compare(const Enclosure& lhs, const Enclosure& rhs);

// lambda_max - 1/4 may have either sign; fhat is evaluated on the matching axis.
Enclosure spectral_lhs(const TestFunction& tf, const mpq_class& lambda_max);

ExclusionCheck check_exclusion(int real_row, int real_degree, bool trivial, const mpq_class& lambda_max,
                               const GeometricSide& geometric, const TestFunction& tf);

struct Monotonicity {
  Enclosure threshold;  // (pi/d)^2 + 1/4
  bool pass = false;    // lambda_max <= threshold, certainly
};
Monotonicity check_monotonicity(const TestFunction& tf, const mpq_class& lambda_max);

struct CertificateParams {
  mpq_class d{3, 4};
  mpq_class max_length{3};
  mpq_class lambda_max;
  int mu = 0;
  int m1_upper = 0;
};

struct Certificate {
  std::string group;
  int genus = 0;
  CertificateParams params;
  Precision precision = 128;
  Monotonicity monotonicity;
  std::vector<ExclusionCheck> checks;
  bool concluded = false;
  int k = 0;
  int m1 = 0;
  std::string statement;  // the conclusion, or why none was drawn
  nlohmann::json input_digests = nlohmann::json::object();
};

// Same rules as certify_multiplicity but never throws; concluded reports the
// outcome and statement the reason.
Certificate assemble_certificate(const std::string& group, int genus, const CertificateParams& params,
                                 std::vector<ExclusionCheck> checks, const Monotonicity& monotonicity,
                                 nlohmann::json input_digests = nlohmann::json::object());

// Requires every real row of degree < mu to be excluded, every other row to
// have degree exactly mu, the monotonicity window, and 2 mu > m1_upper; then
// m1 = mu. Throws InconclusiveCertificate otherwise.
Certificate certify_multiplicity(const std::string& group, int genus, const CertificateParams& params,
                                 std::vector<ExclusionCheck> checks, const Monotonicity& monotonicity,
                                 nlohmann::json input_digests = nlohmann::json::object());

nlohmann::json certificate_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& doc);
// Re-derives every verdict from the embedded enclosures; true iff all agree.
bool recheck_certificate(const Certificate& c);

mpq_class parse_rational(const std::string& text);  // "3/4", "1.223", "-2"
std::string rational_string(const mpq_class& q);

}  // namespace twistcert
