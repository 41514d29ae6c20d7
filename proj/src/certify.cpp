#include "twistcert/certify.hpp"

#include <algorithm>
#include <cctype>

#include "twistcert/error.hpp"
#include "twistcert/io.hpp"

namespace twistcert {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::excluded: return "excluded";
    case Verdict::failed: return "failed";
    case Verdict::undecided: return "undecided";
  }
  return "undecided";
}

Verdict verdict_from_name(const std::string& name) {
  if (name == "excluded") return Verdict::excluded;
  if (name == "failed") return Verdict::failed;
  if (name == "undecided") return Verdict::undecided;
  throw InputError("unknown verdict '" + name + "'");
}

mpq_class parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw InputError("empty rational");
  mpq_class out;
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    if (out.set_str(s, 10) != 0) throw InputError("cannot parse rational '" + text + "'");
    if (out.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
    out.canonicalize();
    return out;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::size_t places = s.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits.find_first_not_of("-+0123456789") != std::string::npos ||
      digits.find_first_of("+-", 1) != std::string::npos) {
    throw InputError("cannot parse rational '" + text + "'");
  }
  mpz_class num(digits, 10), den = 1;
  for (std::size_t i = 0; i < places; ++i) den *= 10;
  out = mpq_class(num, den);
  out.canonicalize();
  return out;
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

Verdict compare(const Enclosure& lhs, const Enclosure& rhs) {
  if (mpfr_cmp(lhs.lo(), rhs.hi()) > 0) return Verdict::excluded;
  if (mpfr_cmp(rhs.lo(), lhs.hi()) >= 0) return Verdict::failed;
  return Verdict::undecided;
}

Enclosure spectral_lhs(const TestFunction& tf, const mpq_class& lambda_max) {
  mpq_class shifted = lambda_max - mpq_class(1, 4);
  if (shifted >= 0) return fhat_value(tf, sqrt(Enclosure::rational(shifted)), Axis::real);
  return fhat_value(tf, sqrt(Enclosure::rational(-shifted)), Axis::imaginary);
}

ExclusionCheck check_exclusion(int real_row, int real_degree, bool trivial, const mpq_class& lambda_max,
                               const GeometricSide& geometric, const TestFunction& tf) {
  ExclusionCheck c;
  c.real_row = real_row;
  c.real_degree = real_degree;
  c.trivial = trivial;
  c.lambda_max = Enclosure::rational(lambda_max);
  c.lhs = spectral_lhs(tf, lambda_max);
  c.rhs = geometric.total;
  // The trivial representation always has eigenvalue 0, which contributes fhat(i/2).
  if (trivial) c.rhs = c.rhs - fhat_value(tf, Enclosure::rational(1, 2), Axis::imaginary);
  c.geometric = geometric;
  c.verdict = compare(c.lhs, c.rhs);
  return c;
}

Monotonicity check_monotonicity(const TestFunction& tf, const mpq_class& lambda_max) {
  Monotonicity m;
  m.threshold = sqr(Enclosure::pi() / tf.d_enclosure()) + Enclosure::rational(1, 4);
  Enclosure lam = Enclosure::rational(lambda_max);
  m.pass = mpfr_cmp(lam.hi(), m.threshold.lo()) <= 0;
  return m;
}

Certificate assemble_certificate(const std::string& group, int genus, const CertificateParams& params,
                                 std::vector<ExclusionCheck> checks, const Monotonicity& monotonicity,
                                 nlohmann::json input_digests) {
  Certificate c;
  c.group = group;
  c.genus = genus;
  c.params = params;
  c.precision = working_precision();
  c.monotonicity = monotonicity;
  c.checks = std::move(checks);
  c.input_digests = std::move(input_digests);

  std::vector<std::string> problems;
  if (!monotonicity.pass) {
    problems.push_back("lambdaMax " + rational_string(params.lambda_max) +
                       " lies outside the window where fhat(sqrt(lambda - 1/4)) decreases (threshold " +
                       monotonicity.threshold.str() + ")");
  }
  int max_degree = 0;
  for (const auto& ch : c.checks) max_degree = std::max(max_degree, ch.real_degree);
  for (const auto& ch : c.checks) {
    if (ch.verdict == Verdict::excluded) continue;
    if (ch.real_degree < params.mu) {
      problems.push_back("real row " + std::to_string(ch.real_row) + " of degree " + std::to_string(ch.real_degree) +
                         " is " + verdict_name(ch.verdict));
    } else if (ch.real_degree != params.mu) {
      problems.push_back("real row " + std::to_string(ch.real_row) + " of degree " + std::to_string(ch.real_degree) +
                         " exceeds mu = " + std::to_string(params.mu) + " and is not excluded");
    }
  }
  if (2 * params.mu <= params.m1_upper) {
    problems.push_back("m1 <= " + std::to_string(params.m1_upper) + " does not rule out m1 = 2 * " +
                       std::to_string(params.mu));
  }
  if (max_degree < params.mu) problems.push_back("no real irrep of degree mu = " + std::to_string(params.mu));

  if (problems.empty()) {
    c.concluded = true;
    c.k = 1;
    c.m1 = params.mu;
    c.statement = "Every real irrep of degree < " + std::to_string(params.mu) +
                  " has no twisted eigenvalue in (0, " + rational_string(params.lambda_max) + "], so m1 = " +
                  std::to_string(params.mu) + " k with k >= 1; m1 <= " + std::to_string(params.m1_upper) + " < " +
                  std::to_string(2 * params.mu) + " forces k = 1, hence m1 = " + std::to_string(params.mu) + ".";
  } else {
    c.statement = "no conclusion: " + problems.front();
    for (std::size_t i = 1; i < problems.size(); ++i) c.statement += "; " + problems[i];
  }
  return c;
}

Certificate certify_multiplicity(const std::string& group, int genus, const CertificateParams& params,
                                 std::vector<ExclusionCheck> checks, const Monotonicity& monotonicity,
                                 nlohmann::json input_digests) {
  Certificate c = assemble_certificate(group, genus, params, std::move(checks), monotonicity, std::move(input_digests));
  if (!c.concluded) throw InconclusiveCertificate(c.statement);
  return c;
}

nlohmann::json certificate_json(const Certificate& c) {
  Precision bits = c.precision;
  auto widen = [&](const Enclosure& e) { bits = std::max(bits, e.precision()); };
  widen(c.monotonicity.threshold);
  for (const auto& ch : c.checks) {
    for (const Enclosure* e : {&ch.lambda_max, &ch.lhs, &ch.rhs, &ch.geometric.identity, &ch.geometric.elliptic,
                               &ch.geometric.hyperbolic, &ch.geometric.total}) {
      widen(*e);
    }
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& ch : c.checks) {
    checks.push_back({{"realRow", ch.real_row},
                      {"degree", ch.real_degree},
                      {"trivial", ch.trivial},
                      {"label", ch.label},
                      {"lambdaMax", enclosure_to_json(ch.lambda_max, bits)},
                      {"lhs", enclosure_to_json(ch.lhs, bits)},
                      {"rhs", enclosure_to_json(ch.rhs, bits)},
                      {"identity", enclosure_to_json(ch.geometric.identity, bits)},
                      {"elliptic", enclosure_to_json(ch.geometric.elliptic, bits)},
                      {"hyperbolic", enclosure_to_json(ch.geometric.hyperbolic, bits)},
                      {"total", enclosure_to_json(ch.geometric.total, bits)},
                      {"verdict", verdict_name(ch.verdict)}});
  }
  return {{"schema", schema_tag("twistcert.certificate", 1)},
          {"precision", bits},
          {"group", c.group},
          {"genus", c.genus},
          {"params",
           {{"d", rational_string(c.params.d)},
            {"L", rational_string(c.params.max_length)},
            {"lambdaMax", rational_string(c.params.lambda_max)},
            {"mu", c.params.mu},
            {"m1Upper", c.params.m1_upper}}},
          {"monotonicity",
           {{"threshold", enclosure_to_json(c.monotonicity.threshold, bits)}, {"pass", c.monotonicity.pass}}},
          {"checks", std::move(checks)},
          {"conclusion",
           {{"emitted", c.concluded}, {"k", c.k}, {"m1", c.m1}, {"statement", c.statement}}},
          {"inputDigests", c.input_digests}};
}

Certificate certificate_from_json(const nlohmann::json& doc) {
  require_schema(doc, "twistcert.certificate", 1);
  Precision bits = document_precision(doc);
  Certificate c;
  c.precision = bits;
  c.group = doc.at("group").get<std::string>();
  c.genus = doc.at("genus").get<int>();
  const auto& p = doc.at("params");
  c.params.d = parse_rational(p.at("d").get<std::string>());
  c.params.max_length = parse_rational(p.at("L").get<std::string>());
  c.params.lambda_max = parse_rational(p.at("lambdaMax").get<std::string>());
  c.params.mu = p.at("mu").get<int>();
  c.params.m1_upper = p.at("m1Upper").get<int>();
  c.monotonicity.threshold = enclosure_from_json(doc.at("monotonicity").at("threshold"), bits);
  c.monotonicity.pass = doc.at("monotonicity").at("pass").get<bool>();
  for (const auto& j : doc.at("checks")) {
    ExclusionCheck ch;
    ch.real_row = j.at("realRow").get<int>();
    ch.real_degree = j.at("degree").get<int>();
    ch.trivial = j.at("trivial").get<bool>();
    ch.label = j.value("label", "");
    ch.lambda_max = enclosure_from_json(j.at("lambdaMax"), bits);
    ch.lhs = enclosure_from_json(j.at("lhs"), bits);
    ch.rhs = enclosure_from_json(j.at("rhs"), bits);
    ch.geometric.real_row = ch.real_row;
    ch.geometric.identity = enclosure_from_json(j.at("identity"), bits);
    ch.geometric.elliptic = enclosure_from_json(j.at("elliptic"), bits);
    ch.geometric.hyperbolic = enclosure_from_json(j.at("hyperbolic"), bits);
    ch.geometric.total = enclosure_from_json(j.at("total"), bits);
    ch.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    c.checks.push_back(std::move(ch));
  }
  const auto& concl = doc.at("conclusion");
  c.concluded = concl.at("emitted").get<bool>();
  c.k = concl.at("k").get<int>();
  c.m1 = concl.at("m1").get<int>();
  c.statement = concl.at("statement").get<std::string>();
  c.input_digests = doc.value("inputDigests", nlohmann::json::object());
  return c;
}

bool recheck_certificate(const Certificate& c) {
  PrecisionGuard guard(c.precision);
  for (const auto& ch : c.checks) {
    if (compare(ch.lhs, ch.rhs) != ch.verdict) return false;
    // The total must enclose the sum of its parts.
    Enclosure sum = ch.geometric.identity + ch.geometric.elliptic + ch.geometric.hyperbolic;
    if (!sum.overlaps(ch.geometric.total)) return false;
  }
  Monotonicity m{c.monotonicity.threshold, mpfr_cmp(Enclosure::rational(c.params.lambda_max).hi(),
                                                    c.monotonicity.threshold.lo()) <= 0};
  Certificate again = assemble_certificate(c.group, c.genus, c.params, c.checks, m, c.input_digests);
  return again.concluded == c.concluded && again.m1 == c.m1 && m.pass == c.monotonicity.pass;
}

}  // namespace twistcert
