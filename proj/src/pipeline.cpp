#include "twistcert/pipeline.hpp"

#include <algorithm>
#include <chrono>

#include "twistcert/bundled.hpp"
#include "twistcert/error.hpp"
#include "twistcert/io.hpp"

namespace twistcert {

namespace {

nlohmann::json constants() { return nlohmann::json::parse(bundled_file("constants.json")); }

class Stopwatch {
 public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  nlohmann::json doc = constants();
  for (const auto& [name, _] : doc.at("presets").items()) out.push_back(name);
  return out;
}

Preset load_preset(const std::string& name) {
  nlohmann::json doc = constants();
  require_schema(doc, "twistcert.constants", 1);
  const auto& presets = doc.at("presets");
  if (!presets.contains(name)) {
    throw InputError("unknown preset '" + name + "' (known: " + join(preset_names(), ", ") + ")");
  }
  const auto& j = presets.at(name);
  Preset p;
  p.name = name;
  p.genus = j.at("genus").get<int>();
  const auto& sig = j.at("signature");
  p.p = sig.at(0).get<int>();
  p.q = sig.at(1).get<int>();
  p.r = sig.at(2).get<int>();
  p.relators_file = j.at("relators").get<std::string>();
  p.reference_file = j.at("reference").get<std::string>();
  p.lambda_max = parse_rational(j.at("lambdaMax").get<std::string>());
  p.m1_upper = j.at("m1Upper").get<int>();
  p.mu = j.at("mu").get<int>();
  p.d = parse_rational(j.at("d").get<std::string>());
  p.max_length = parse_rational(j.at("maxLength").get<std::string>());
  return p;
}

ResolvedRun resolve(const RunConfig& config) {
  ResolvedRun run;
  std::optional<Preset> preset;
  if (!config.preset.empty()) preset = load_preset(config.preset);

  if (!config.relators_path.empty()) {
    run.relators = parse_relators(read_file(config.relators_path));
  } else if (preset) {
    run.relators = parse_relators(bundled_file(preset->relators_file));
  } else {
    throw InputError("either a preset or a relators file is required");
  }
  if (preset && config.relators_path.empty()) {
    run.reference = parse_reference_table(nlohmann::json::parse(bundled_file(preset->reference_file)));
  }
  run.group_name = run.relators.name.empty() ? (preset ? preset->name : "custom") : run.relators.name;
  run.p = run.relators.p;
  run.q = run.relators.q;
  run.r = run.relators.r;
  if (preset) run.genus = preset->genus;

  auto pick = [](const auto& override_value, const auto& fallback, const char* what) {
    if (override_value) return *override_value;
    if (!fallback) throw InputError(std::string("custom runs need --") + what);
    return *fallback;
  };
  auto from_preset = [&](auto member) {
    using T = std::decay_t<decltype((*preset).*member)>;
    return preset ? std::optional<T>((*preset).*member) : std::nullopt;
  };
  run.params.d = pick(config.d, from_preset(&Preset::d), "d");
  run.params.lambda_max = pick(config.lambda_max, from_preset(&Preset::lambda_max), "lambda-max");
  run.params.m1_upper = pick(config.m1_upper, from_preset(&Preset::m1_upper), "m1-upper");
  // The hyperbolic sum needs every class up to the support 4d.
  std::optional<mpq_class> default_length = from_preset(&Preset::max_length);
  if (!default_length) default_length = 4 * run.params.d;
  run.params.max_length = pick(config.max_length, default_length, "max-length");
  std::optional<int> mu = config.mu ? config.mu : from_preset(&Preset::mu);
  run.params.mu = mu.value_or(0);  // 0: use the largest real degree once the table exists

  if (run.params.d <= 0) throw InputError("d must be positive");
  if (run.params.max_length < 0) throw InputError("max-length must be non-negative");
  return run;
}

GroupStage build_group(const ResolvedRun& run, std::size_t max_cosets) {
  GroupStage s{coset_enumerate(run.relators, max_cosets), {}};
  s.cover = verify_cover(s.group);
  if (run.genus != 0 && s.cover.genus != run.genus) {
    throw InconsistentPresentation("quotient gives genus " + std::to_string(s.cover.genus) + ", expected " +
                                   std::to_string(run.genus));
  }
  return s;
}

TableStage build_table(const ResolvedRun& run, const QuotientGroup& g, const std::string& chartable_path) {
  TableStage s;
  if (!chartable_path.empty()) {
    s.table = character_table_from_json(nlohmann::json::parse(read_file(chartable_path)));
    if (s.table.order != g.order() || s.table.class_count() != g.class_count()) {
      throw InputError("character table " + chartable_path + " does not belong to group " + g.name());
    }
  } else {
    s.table = compute_character_table(g);
  }
  s.orthogonality = check_orthogonality(s.table);
  if (!s.orthogonality.ok()) throw MismatchError("character table fails orthogonality: " + s.orthogonality.first_failure);

  s.real_row_labels.assign(s.table.real_rows.size(), "");
  if (run.reference) {
    s.validation = validate_against_reference(s.table, *run.reference);
    std::vector<std::vector<std::string>> names(s.table.real_rows.size());
    for (std::size_t ref = 0; ref < s.validation->row_map.size(); ++ref) {
      int row = s.validation->row_map[ref];
      for (std::size_t rr = 0; rr < s.table.real_rows.size(); ++rr) {
        const auto& cons = s.table.real_rows[rr].constituents;
        if (std::find(cons.begin(), cons.end(), row) != cons.end()) names[rr].push_back(run.reference->row_names[ref]);
      }
    }
    for (std::size_t rr = 0; rr < names.size(); ++rr) s.real_row_labels[rr] = join(names[rr], "+");
  }
  return s;
}

ClassEnumeration build_classes(const TrianglePresentation& t, const mpq_class& max_length, int threads,
                               const std::string& classes_path) {
  if (!classes_path.empty()) return classes_from_json(nlohmann::json::parse(read_file(classes_path)), t);
  EnumerationOptions options;
  options.threads = threads;
  return enumerate_primitive_hyperbolic(t, Enclosure::rational(max_length), options);
}

int trivial_real_row(const CharacterTable& t) {
  for (std::size_t i = 0; i < t.real_rows.size(); ++i) {
    const auto& row = t.real_rows[i];
    bool all_one = row.real_degree == 1;
    for (const auto& v : row.values) all_one = all_one && v == Cyclotomic(1);
    if (all_one) return static_cast<int>(i);
  }
  throw AlgorithmFailure("character table has no trivial row");
}

CertificationRun run_certification(const RunConfig& config) {
  Stopwatch watch;
  CertificationRun out{resolve(config), {}, {}, {}, {}, {}, {}};
  const ResolvedRun& run = out.run;
  out.seconds["resolve"] = watch.lap();

  out.group = build_group(run, config.max_cosets);
  out.run.genus = out.group.cover.genus;
  out.seconds["group"] = watch.lap();

  out.table = build_table(run, out.group.group, config.chartable_path);
  const CharacterTable& table = out.table.table;
  if (out.run.params.mu == 0) {
    for (const auto& row : table.real_rows) out.run.params.mu = std::max(out.run.params.mu, row.real_degree);
  }
  out.seconds["characters"] = watch.lap();

  TrianglePresentation t = build_presentation(run.p, run.q, run.r);
  out.classes = build_classes(t, run.params.max_length, config.threads, config.classes_path);
  out.seconds["classes"] = watch.lap();

  TestFunction tf{run.params.d};
  TraceEvaluator evaluator(t, enumerate_elliptic(t), out.classes, out.group.group, table, tf, config.quadrature);
  out.sides = evaluator.all_real_rows(config.threads);
  out.seconds["trace"] = watch.lap();

  int trivial = trivial_real_row(table);
  std::vector<ExclusionCheck> checks;
  for (std::size_t i = 0; i < out.sides.size(); ++i) {
    int row = static_cast<int>(i);
    ExclusionCheck c = check_exclusion(row, table.real_rows[i].real_degree, row == trivial, run.params.lambda_max,
                                       out.sides[i], tf);
    c.label = out.table.real_row_labels[i];
    checks.push_back(std::move(c));
  }
  nlohmann::json relators = nlohmann::json::array();
  for (const auto& w : run.relators.relators) relators.push_back(w.str());
  nlohmann::json digests = {{"relators", json_digest(relators)},
                            {"group", json_digest(group_json(out.group.group))},
                            {"chartable", json_digest(character_table_json(table))},
                            {"classes", json_digest(classes_json(t, out.classes))}};
  out.certificate = assemble_certificate(run.group_name, out.run.genus, run.params, std::move(checks),
                                         check_monotonicity(tf, run.params.lambda_max), std::move(digests));
  out.seconds["certify"] = watch.lap();
  return out;
}

}  // namespace twistcert
