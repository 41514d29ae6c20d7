#include "commands.hpp"

#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "selftest.hpp"
#include "twistcert/error.hpp"
#include "twistcert/io.hpp"
#include "twistcert/pipeline.hpp"

namespace twistcert::cli {

namespace {

struct Options {
  std::string preset;
  int p = 2, q = 3, r = 7;
  std::string relators_file;
  std::string max_length, d, lambda_max;
  std::optional<int> m1_upper, mu;
  int precision = 0;
  int threads = 1;
  std::string out_path;
  std::string tiling_path;
  std::string classes_path, chartable_path, certificate_path;
  std::vector<std::string> inject;
};

std::optional<mpq_class> rational_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_rational(text);
}

RunConfig to_config(const Options& o) {
  RunConfig c;
  c.preset = o.preset;
  c.p = o.p;
  c.q = o.q;
  c.r = o.r;
  c.relators_path = o.relators_file;
  c.d = rational_option(o.d);
  c.max_length = rational_option(o.max_length);
  c.lambda_max = rational_option(o.lambda_max);
  c.m1_upper = o.m1_upper;
  c.mu = o.mu;
  c.classes_path = o.classes_path;
  c.chartable_path = o.chartable_path;
  c.threads = o.threads;
  return c;
}

void write_json(const std::string& path, const nlohmann::json& doc, std::ostream& out) {
  write_file(path, doc.dump(2) + "\n");
  out << "wrote " << path << "\n";
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--preset", o.preset, "bundled surface: genus10 or genus17");
  cmd->add_option("--relators-file", o.relators_file, "relators file for a custom normal cover");
  cmd->add_option("--precision", o.precision, "working precision in bits (default 128 or SPECTRAL_PRECISION_BITS)");
  cmd->add_option("--threads", o.threads, "parallel width; results do not depend on it")->check(CLI::Range(1, 1024));
  cmd->add_option("--out", o.out_path, "write the JSON result to this path");
}

void add_signature(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "first signature entry");
  cmd->add_option("--q", o.q, "second signature entry");
  cmd->add_option("--r", o.r, "third signature entry");
}

void add_trace_params(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-length", o.max_length, "class enumeration cutoff L (rational or decimal)");
  cmd->add_option("--d", o.d, "test function parameter d");
  cmd->add_option("--lambda-max", o.lambda_max, "proven upper bound on lambda_1");
  cmd->add_option("--m1-upper", o.m1_upper, "proven upper bound on m_1");
  cmd->add_option("--mu", o.mu, "smallest degree that may carry lambda_1 (default: largest real degree)");
  cmd->add_option("--classes", o.classes_path, "precomputed class list (classes JSON)");
  cmd->add_option("--chartable", o.chartable_path, "precomputed character table (chartable JSON)");
}

// --- classes -------------------------------------------------------------

int cmd_classes(const Options& o, std::ostream& out) {
  int p = o.p, q = o.q, r = o.r;
  mpq_class length = 3;
  if (!o.preset.empty()) {
    Preset preset = load_preset(o.preset);
    p = preset.p;
    q = preset.q;
    r = preset.r;
    length = preset.max_length;
  }
  if (auto l = rational_option(o.max_length)) length = *l;
  if (length < 0) throw InputError("max-length must be non-negative");
  TrianglePresentation t = build_presentation(p, q, r);
  ClassEnumeration e = build_classes(t, length, o.threads);
  out << "triangle group (" << p << "," << q << "," << r << "), L = " << rational_string(length) << ": "
      << e.classes.size() << " primitive hyperbolic classes\n";
  out << "certified cutoff " << e.cutoff.str(10) << " (capture radius " << e.capture_radius.str(8) << ", "
      << e.elements << " elements)\n";
  for (std::size_t i = 0; i < e.classes.size(); ++i) {
    const auto& c = e.classes[i];
    out << std::setw(4) << i << "  length " << c.length.str(14) << "  " << c.representative.word.str()
        << (c.borderline ? "  (borderline)" : "") << "\n";
  }
  if (!o.out_path.empty()) write_json(o.out_path, classes_json(t, e), out);
  if (!o.tiling_path.empty()) {
    write_json(o.tiling_path, tiling_json(t, extend_until_covered(t, e.capture_radius)), out);
  }
  return kSuccess;
}

// --- group / chartable ---------------------------------------------------

ResolvedRun resolve_group_only(const Options& o) {
  if (o.preset.empty() && o.relators_file.empty()) throw InputError("--preset or --relators-file is required");
  RunConfig c;
  c.preset = o.preset;
  c.relators_path = o.relators_file;
  // Group and table commands ignore trace parameters; satisfy the resolver.
  c.d = mpq_class(3, 4);
  c.lambda_max = mpq_class(1);
  c.m1_upper = 0;
  return resolve(c);
}

int cmd_group(const Options& o, std::ostream& out) {
  ResolvedRun run = resolve_group_only(o);
  GroupStage s = build_group(run);
  const QuotientGroup& g = s.group;
  out << "group " << g.name() << ": order " << g.order() << ", exponent " << g.exponent() << ", "
      << g.class_count() << " classes\n";
  out << "cover of (" << g.p() << "," << g.q() << "," << g.r() << "): genus " << s.cover.genus
      << (s.cover.torsion_free ? ", torsion-free" : "") << "\n";
  for (int c = 0; c < g.class_count(); ++c) {
    const auto& cls = g.classes()[static_cast<std::size_t>(c)];
    out << std::setw(4) << c << "  order " << std::setw(3) << cls.element_order << "  size " << std::setw(4)
        << cls.size() << "  " << g.element_word(cls.representative).str() << "\n";
  }
  if (!o.out_path.empty()) write_json(o.out_path, group_json(g), out);
  return kSuccess;
}

int cmd_chartable(const Options& o, std::ostream& out) {
  ResolvedRun run = resolve_group_only(o);
  GroupStage s = build_group(run);
  TableStage ts = build_table(run, s.group, o.chartable_path);
  const CharacterTable& t = ts.table;
  out << "character table of " << t.group << " (order " << t.order << ", values in Q(zeta_" << t.conductor
      << "), modulus " << t.prime << ")\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    out << "  chi" << i << "  fs " << std::setw(2) << row.frobenius_schur << "  :";
    for (const auto& v : row.values) out << "  " << v.str();
    out << "\n";
  }
  out << "real rows:";
  for (std::size_t i = 0; i < t.real_rows.size(); ++i) {
    out << "  " << t.real_rows[i].real_degree;
    if (!ts.real_row_labels[i].empty()) out << " (" << ts.real_row_labels[i] << ")";
  }
  out << "\northogonality: exact, ok\n";
  if (ts.validation) {
    const auto& v = *ts.validation;
    out << "reference table: matched (" << v.matching_bijections << " column bijections, " << v.galois_bijections
        << " of them Galois)\n";
    for (const auto& rows : v.ambiguous_real_rows) {
      out << "  table automorphism: reference labels of real rows";
      for (int r : rows) out << " " << r;
      out << " are interchangeable\n";
    }
  }
  if (!o.out_path.empty()) write_json(o.out_path, character_table_json(t), out);
  return kSuccess;
}

// --- certify / multiplicity ----------------------------------------------

void print_certificate(const Certificate& c, std::ostream& out) {
  out << "group " << c.group << ", genus " << c.genus << ", d = " << rational_string(c.params.d)
      << ", L = " << rational_string(c.params.max_length) << ", lambda_max = " << rational_string(c.params.lambda_max)
      << "\n";
  out << "monotonicity window: threshold " << c.monotonicity.threshold.str(8) << " -> "
      << (c.monotonicity.pass ? "pass" : "FAIL") << "\n";
  for (const auto& ch : c.checks) {
    out << "  real row " << std::setw(2) << ch.real_row << "  deg " << std::setw(2) << ch.real_degree << "  "
        << std::left << std::setw(12) << (ch.label.empty() ? "-" : ch.label) << std::right << "  lhs "
        << ch.lhs.str(10) << "  rhs " << ch.rhs.str(10) << "  " << verdict_name(ch.verdict) << "\n";
  }
  out << (c.concluded ? "CERTIFIED: " : "NOT CERTIFIED: ") << c.statement << "\n";
}

int cmd_certify(const Options& o, std::ostream& out) {
  if (o.preset.empty() && o.relators_file.empty()) throw InputError("--preset or --relators-file is required");
  CertificationRun run = run_certification(to_config(o));
  print_certificate(run.certificate, out);
  if (!o.out_path.empty()) write_json(o.out_path, certificate_json(run.certificate), out);
  return run.certificate.concluded ? kSuccess : kNotCertified;
}

int cmd_multiplicity(const Options& o, std::ostream& out) {
  Certificate c;
  if (!o.certificate_path.empty()) {
    c = certificate_from_json(nlohmann::json::parse(read_file(o.certificate_path)));
    if (!recheck_certificate(c)) {
      out << "certificate " << o.certificate_path << " does not re-verify\n";
      return kNotCertified;
    }
  } else {
    if (o.preset.empty() && o.relators_file.empty()) {
      throw InputError("--certificate, --preset or --relators-file is required");
    }
    c = run_certification(to_config(o)).certificate;
  }
  if (!c.concluded) {
    out << c.group << ": no conclusion (" << c.statement << ")\n";
    return kNotCertified;
  }
  out << c.group << ": m1 = " << c.m1 << " (genus " << c.genus << ")\n";
  if (!o.out_path.empty()) write_json(o.out_path, {{"group", c.group}, {"genus", c.genus}, {"m1", c.m1}}, out);
  return kSuccess;
}

// --- selftest ------------------------------------------------------------

int cmd_selftest(const Options& o, std::ostream& out) {
  SelftestOptions so;
  so.inject = o.inject;
  so.threads = o.threads;
  std::vector<SuiteResult> results = run_selftest(so);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(16) << r.name << std::right << std::fixed
        << std::setprecision(2) << std::setw(8) << r.seconds << "s  " << r.detail << "\n";
  }
  out << (all ? "all suites passed" : "some suites FAILED") << "\n";
  return all ? kSuccess : kNotCertified;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InconclusiveCertificate*>(&e)) return kNotCertified;
  if (dynamic_cast<const PrecisionError*>(&e) || dynamic_cast<const BudgetExhausted*>(&e) ||
      dynamic_cast<const AlgorithmFailure*>(&e)) {
    return kPrecision;
  }
  // Bad relators, mismatching tables, incomplete class files and unreadable
  // or malformed files all trace back to the inputs.
  return kInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified twisted trace formula bounds for triangle-group surfaces", "twistcert"};
  app.require_subcommand(1);
  Options o;

  auto* classes = app.add_subcommand("classes", "enumerate primitive hyperbolic conjugacy classes");
  add_common(classes, o);
  add_signature(classes, o);
  classes->add_option("--max-length", o.max_length, "length cutoff L");
  classes->add_option("--dump-tiling", o.tiling_path, "write the covering generations used");

  auto* group = app.add_subcommand("group", "build the finite quotient by coset enumeration");
  add_common(group, o);

  auto* chartable = app.add_subcommand("chartable", "compute and validate the character table");
  add_common(chartable, o);
  chartable->add_option("--chartable", o.chartable_path, "load a table instead of computing it");

  auto* certify = app.add_subcommand("certify", "run the full pipeline and emit a certificate");
  add_common(certify, o);
  add_trace_params(certify, o);

  auto* multiplicity = app.add_subcommand("multiplicity", "report m1 from a certificate or a fresh run");
  add_common(multiplicity, o);
  add_trace_params(multiplicity, o);
  multiplicity->add_option("--certificate", o.certificate_path, "re-verify this certificate instead of running");

  auto* selftest = app.add_subcommand("selftest", "run every invariant suite at reduced scale");
  selftest->add_option("--threads", o.threads, "parallel width")->check(CLI::Range(1, 1024));
  selftest->add_option("--inject", o.inject, "corrupt one input: chartable-perturbation, drop-class");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInput;
  }

  // Worker threads read the process default, so --precision sets it for the
  // duration of this command and puts the previous value back afterwards.
  struct RestoreDefault {
    Precision saved = default_precision();
    ~RestoreDefault() { set_default_precision(saved); }
  } restore;
  try {
    if (o.precision != 0) {
      if (o.precision < 32) throw InputError("--precision must be at least 32 bits");
      set_default_precision(static_cast<Precision>(o.precision));
    }
    PrecisionGuard guard(default_precision());
    if (*classes) return cmd_classes(o, out);
    if (*group) return cmd_group(o, out);
    if (*chartable) return cmd_chartable(o, out);
    if (*certify) return cmd_certify(o, out);
    if (*multiplicity) return cmd_multiplicity(o, out);
    if (*selftest) return cmd_selftest(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace twistcert::cli
