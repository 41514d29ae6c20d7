#include "selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "twistcert/bundled.hpp"
#include "twistcert/error.hpp"
#include "twistcert/oracles.hpp"
#include "twistcert/pipeline.hpp"

namespace twistcert::cli {

namespace {

struct Failure {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

std::string enclosure_ops() {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 9999);
  const int samples = 20000;
  for (int i = 0; i < samples; ++i) {
    mpq_class a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    Enclosure ea = Enclosure::rational(a), eb = Enclosure::rational(b);
    expect((ea + eb).contains(mpq_class(a + b)), "sum misses exact value");
    expect((ea - eb).contains(mpq_class(a - b)), "difference misses exact value");
    expect((ea * eb).contains(mpq_class(a * b)), "product misses exact value");
    if (b != 0) expect((ea / eb).contains(mpq_class(a / b)), "quotient misses exact value");
  }
  return std::to_string(samples) + " random rational samples";
}

std::string quadrature() {
  IntegralSpec s;
  s.integrand = [](const Jet& x) { return sin(x); };
  s.a = Enclosure(0);
  s.b = Enclosure::pi();
  s.target_width = 1e-20;
  Enclosure v = integrate_or_throw(s);
  expect(v.contains(mpq_class(2)), "integral of sin over [0, pi] misses 2");
  TestFunction tf;
  Enclosure direct = identity_integral(tf);
  expect(direct.width_upper() < 1e-20, "identity integral too wide");
  return "sin integral " + v.str(20) + ", identity integral " + direct.str(12);
}

std::string generators() {
  for (int r : {7, 8, 9}) {
    TrianglePresentation t = build_presentation(2, 3, r);
    expect(t.x.matrix.power(2).encloses_identity(), "x^2 != 1 for r = " + std::to_string(r));
    expect(t.y.matrix.power(3).encloses_identity(), "y^3 != 1 for r = " + std::to_string(r));
    expect(t.z.matrix.power(r).encloses_identity(), "z^r != 1 for r = " + std::to_string(r));
    expect((t.x.matrix * t.y.matrix * t.z.matrix).encloses_identity(), "xyz != 1 for r = " + std::to_string(r));
    Enclosure area = Enclosure(2) * Enclosure::pi() * (Enclosure(1) - Enclosure::rational(1, 2) -
                                                       Enclosure::rational(1, 3) - Enclosure::rational(1, r));
    expect(t.area.overlaps(area), "orbifold area for r = " + std::to_string(r));
  }
  return "(2,3,7), (2,3,8), (2,3,9)";
}

std::string tiling() {
  TrianglePresentation t = build_presentation(2, 3, 7);
  CoverageState s = extend_until_covered(t, Enclosure(2));
  for (std::size_t i = 1; i < s.radius_history.size(); ++i) {
    expect(mpfr_cmp(s.radius_history[i].hi(), s.radius_history[i - 1].lo()) >= 0, "inner radius decreased");
  }
  auto sym = symbolic_generations(7, static_cast<int>(s.generations.size()));
  for (std::size_t g = 0; g < s.generations.size(); ++g) {
    expect(sym[g].labels.size() == s.generations[g].size(), "symbolic generation size differs at " + std::to_string(g));
  }
  return std::to_string(s.generations.size()) + " generations, inner radius " + s.inner_radius.str(8);
}

std::string completeness(bool drop_class, int threads) {
  std::ostringstream detail;
  for (int r : {7, 8}) {
    TrianglePresentation t = build_presentation(2, 3, r);
    ClassEnumeration e = build_classes(t, mpq_class(9, 5), threads);
    if (drop_class && !e.classes.empty()) e.classes.pop_back();
    oracle::WordOracleResult o = oracle::word_oracle_classes(t, 1.8);
    expect(e.classes.size() == o.classes.size(), "r = " + std::to_string(r) + ": pipeline has " +
                                                     std::to_string(e.classes.size()) + " classes, oracle " +
                                                     std::to_string(o.classes.size()));
    std::vector<Enclosure> lengths;
    for (const auto& c : e.classes) lengths.push_back(c.length);
    std::sort(lengths.begin(), lengths.end(), [](const Enclosure& a, const Enclosure& b) {
      return a.mid_double() < b.mid_double();
    });
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      expect(lengths[i].overlaps(o.classes[i].certified_length), "length mismatch for r = " + std::to_string(r));
    }
    detail << "r=" << r << ": " << o.classes.size() << " classes  ";
  }
  return detail.str();
}

std::string test_function() {
  mpq_class d(3, 4);
  TestFunction tf{d};
  oracle::PiecewisePoly conv = oracle::test_function_by_convolution(d);
  for (int k = -130; k <= 130; k += 3) {
    mpq_class x(k, 40);
    x.canonicalize();
    mpq_class exact = f_value_exact(tf, x);
    expect(oracle::evaluate(conv, x) == exact, "closed form differs from convolution at " + x.get_str());
    expect(f_value(tf, Enclosure::rational(x)).contains(exact), "f enclosure misses value at " + x.get_str());
  }
  expect(f_inner_branch(tf, 2 * d) == f_outer_branch(tf, 2 * d), "branches disagree at 2d");
  expect(f_outer_branch(tf, 4 * d) == 0, "f does not vanish at 4d");
  return "closed form = fourfold convolution at 87 points";
}

std::string quotient() {
  std::ostringstream detail;
  for (const char* name : {"genus10", "genus17"}) {
    Preset p = load_preset(name);
    QuotientGroup g = coset_enumerate(parse_relators(bundled_file(p.relators_file)));
    CoverReport c = verify_cover(g);
    expect(c.torsion_free && c.genus == p.genus, std::string(name) + ": wrong cover");
    int total = 0;
    for (const auto& cls : g.classes()) total += static_cast<int>(cls.size());
    expect(total == g.order(), "class equation fails");
    expect(g.power_class(g.class_of(g.generator(Gen::z)), p.r) == 0, "z^r is not trivial");
    detail << name << ": order " << g.order() << ", genus " << c.genus << "  ";
  }
  return detail.str();
}

std::string orthogonality(bool perturb) {
  std::ostringstream detail;
  for (const char* name : {"genus10", "genus17"}) {
    Preset p = load_preset(name);
    QuotientGroup g = coset_enumerate(parse_relators(bundled_file(p.relators_file)));
    CharacterTable t = compute_character_table(g);
    if (perturb) t.rows[1].values[1] = t.rows[1].values[1] + Cyclotomic(1);
    OrthogonalityReport rep = check_orthogonality(t);
    expect(rep.ok(), std::string(name) + ": " + rep.first_failure);
    ReferenceTable ref = parse_reference_table(nlohmann::json::parse(bundled_file(p.reference_file)));
    ValidationReport v = validate_against_reference(t, ref);
    expect(v.matched && v.realified_invariant, std::string(name) + ": reference table mismatch");
    detail << name << ": " << t.rows.size() << " rows  ";
  }
  return detail.str();
}

std::string collapse(int threads) {
  Preset p = load_preset("genus10");
  QuotientGroup g = coset_enumerate(parse_relators(bundled_file(p.relators_file)));
  CharacterTable table = compute_character_table(g);
  TrianglePresentation t = build_presentation(p.p, p.q, p.r);
  ClassEnumeration e = build_classes(t, p.max_length, threads);
  TraceEvaluator ev(t, enumerate_elliptic(t), e, g, table, TestFunction{p.d});
  Enclosure ell(0), id(0);
  for (std::size_t i = 0; i < table.real_rows.size(); ++i) {
    Enclosure weight(table.real_rows[i].regular_multiplicity());
    ell += weight * ev.elliptic_term(real_row_character(table, static_cast<int>(i)));
    id += weight * ev.identity_term(table.real_rows[i].real_degree);
  }
  expect(ell.contains_zero() && ell.width_upper() <= 1e-6, "elliptic terms do not collapse: " + ell.str());
  Enclosure target = Enclosure(g.order()) * t.area / (Enclosure(4) * Enclosure::pi()) * ev.identity_integral_value();
  expect(id.overlaps(target), "identity terms do not collapse to |G| area/(4 pi) I");
  return "elliptic sum " + ell.str(3) + ", identity sum " + id.str(10);
}

}  // namespace

std::vector<std::string> known_faults() { return {"chartable-perturbation", "drop-class"}; }

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
  auto faults = known_faults();
  for (const auto& f : options.inject) {
    if (std::find(faults.begin(), faults.end(), f) == faults.end()) throw InputError("unknown fault '" + f + "'");
  }
  auto injected = [&](const char* f) {
    return std::find(options.inject.begin(), options.inject.end(), f) != options.inject.end();
  };
  std::vector<std::pair<std::string, std::function<std::string()>>> suites = {
      {"enclosure", enclosure_ops},
      {"quadrature", quadrature},
      {"generators", generators},
      {"tiling", tiling},
      {"completeness", [&] { return completeness(injected("drop-class"), options.threads); }},
      {"test-function", test_function},
      {"quotient", quotient},
      {"orthogonality", [&] { return orthogonality(injected("chartable-perturbation")); }},
      {"collapse", [&] { return collapse(options.threads); }},
  };
  std::vector<SuiteResult> out;
  for (auto& [name, run] : suites) {
    SuiteResult r;
    r.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
      r.detail = run();
      r.pass = true;
    } catch (const Failure& f) {
      r.detail = f.why;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace twistcert::cli
