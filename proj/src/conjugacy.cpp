#include "twistcert/conjugacy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "twistcert/error.hpp"
#include "twistcert/io.hpp"
#include "twistcert/parallel.hpp"

namespace twistcert {

std::vector<EllipticClass> enumerate_elliptic(const TrianglePresentation& t) {
  std::vector<EllipticClass> out;
  const std::pair<Gen, int> gens[3] = {{Gen::x, t.p}, {Gen::y, t.q}, {Gen::z, t.r}};
  for (const auto& [g, order] : gens) {
    for (int a = 1; a < order; ++a) {
      EllipticClass c;
      c.generator = g;
      c.power = a;
      c.order = order;
      c.angle_over_pi = mpq_class(a, order);
      c.angle_over_pi.canonicalize();
      c.primitive_order = order;
      c.word = Word::generator(g, a);
      out.push_back(std::move(c));
    }
  }
  return out;
}

Enclosure displacement_bound(const Enclosure& max_length, const Enclosure& axis_reach) {
  Enclosure two(2);
  return two * asinh(sinh(max_length / two) * cosh(axis_reach));
}

Enclosure conjugator_radius(const Enclosure& length, const Enclosure& axis_reach) {
  return Enclosure(2) * acosh(cosh(length / Enclosure(4)) * cosh(axis_reach));
}

Enclosure capture_radius(const Enclosure& max_length, const Enclosure& axis_reach) {
  return max(displacement_bound(max_length, axis_reach), conjugator_radius(max_length, axis_reach));
}

PointIndex::Key PointIndex::key(const HPoint& p) const {
  if (p.x.width_upper() > cell_ * 1e-3 || p.y.width_upper() > cell_ * 1e-3 * p.y.lo_double()) {
    throw PrecisionError("point enclosure too wide to index: " + p.str());
  }
  double u = p.x.mid_double() / p.y.mid_double();
  double v = std::log(p.y.mid_double());
  return {static_cast<std::int64_t>(std::floor(u / cell_)), static_cast<std::int64_t>(std::floor(v / cell_))};
}

void PointIndex::insert(const HPoint& p, std::size_t id) {
  cells_[key(p)].push_back(id);
  ++count_;
}

std::vector<std::size_t> PointIndex::near(const HPoint& p) const {
  Key k = key(p);
  std::vector<std::size_t> out;
  for (std::int64_t du = -1; du <= 1; ++du) {
    for (std::int64_t dv = -1; dv <= 1; ++dv) {
      auto it = cells_.find({k.first + du, k.second + dv});
      if (it != cells_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Candidate {
  const MoebiusElement* element;
  Enclosure displacement;
  Enclosure length;
  Enclosure trace;
};

// Orders by displacement (ties within 1e-20 broken by word).
bool closer(const Candidate& a, const Candidate& b) {
  double da = a.displacement.mid_double(), db = b.displacement.mid_double();
  if (std::fabs(da - db) > 1e-20 * std::max(1.0, da)) return da < db;
  return a.element->word < b.element->word;
}

std::optional<std::size_t> find_equal(const Mat2& m, const std::vector<Candidate>& cands, const PointIndex& index,
                                      const TrianglePresentation& t, const WordProblemProbe& probe,
                                      const Word& label) {
  HPoint image = apply(m, t.C);
  for (std::size_t j : index.near(image)) {
    MoebiusElement g{label, m};
    if (equal_in_group(g, *cands[j].element, probe) == Equality::equal) return j;
  }
  return std::nullopt;
}

}  // namespace

ClassEnumeration classes_from_coverage(const TrianglePresentation& t, const CoverageState& state,
                                       const Enclosure& max_length, int threads) {
  ClassEnumeration out;
  out.axis_reach = t.capture_distance();
  out.capture_radius = capture_radius(max_length, out.axis_reach);
  out.cutoff = max_length;
  out.generations = static_cast<int>(state.generations.size());
  out.inner_radius = state.inner_radius;
  Enclosure needed = out.capture_radius + t.polygon_diameter();
  if (mpfr_cmp(state.inner_radius.lo(), needed.hi()) < 0) {
    throw AlgorithmFailure("coverage radius " + state.inner_radius.str() + " below required " + needed.str());
  }
  WordProblemProbe probe = make_probe(t, state);

  std::vector<const MoebiusElement*> all;
  for (const auto& gen : state.generations) {
    for (const auto& g : gen) all.push_back(&g.element);
  }
  out.elements = all.size();

  Enclosure reach = displacement_bound(max_length, out.axis_reach);
  Enclosure conj_reach = conjugator_radius(max_length, out.axis_reach);
  Enclosure outer = max(reach, conj_reach);

  // Geometry of every element inside the capture ball.
  struct Info {
    bool inside = false;
    bool candidate = false;
    Enclosure displacement, length, trace;
  };
  std::vector<Info> info(all.size());
  parallel_for(all.size(), threads, [&](std::size_t i) {
    const MoebiusElement& g = *all[i];
    Info& slot = info[i];
    slot.displacement = distance(t.C, apply(g, t.C));
    if (mpfr_cmp(slot.displacement.lo(), outer.hi()) > 0) return;
    slot.inside = true;
    if (g.word.is_identity()) return;
    IsometryClass k = classify(g);
    if (k.kind == IsometryKind::undecided) {
      throw UndecidableAtPrecision("cannot classify " + g.word.str() + ": |trace| " + k.trace.str());
    }
    if (k.kind != IsometryKind::hyperbolic) return;
    if (mpfr_cmp(k.length->lo(), max_length.hi()) > 0) return;
    if (mpfr_cmp(slot.displacement.lo(), reach.hi()) > 0) return;
    Enclosure axis = point_axis_distance(g.matrix, *k.length, t.C);
    if (mpfr_cmp(axis.lo(), out.axis_reach.hi()) > 0) return;
    slot.candidate = true;
    slot.length = *k.length;
    slot.trace = k.trace;
  });

  std::vector<Candidate> cands;
  std::vector<Candidate> conjugators;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!info[i].inside) continue;
    if (info[i].candidate) cands.push_back({all[i], info[i].displacement, info[i].length, info[i].trace});
    if (mpfr_cmp(info[i].displacement.lo(), conj_reach.hi()) <= 0) {
      conjugators.push_back({all[i], info[i].displacement, Enclosure(0), Enclosure(0)});
    }
  }
  std::sort(cands.begin(), cands.end(), closer);
  std::sort(conjugators.begin(), conjugators.end(), closer);
  out.candidates = cands.size();

  PointIndex index;
  for (std::size_t i = 0; i < cands.size(); ++i) index.insert(apply(*cands[i].element, t.C), i);

  std::vector<int> class_of(cands.size(), -1);
  std::vector<std::size_t> first_member;
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (class_of[a] != -1) continue;
    int k = static_cast<int>(first_member.size());
    first_member.push_back(a);
    class_of[a] = k;
    const MoebiusElement& alpha = *cands[a].element;
    Enclosure radius = conjugator_radius(cands[a].length.upper(), out.axis_reach);
    std::vector<std::size_t> usable;
    for (std::size_t h = 0; h < conjugators.size(); ++h) {
      if (mpfr_cmp(conjugators[h].displacement.lo(), radius.hi()) <= 0) usable.push_back(h);
    }
    std::vector<std::optional<std::size_t>> hits(usable.size());
    parallel_for(usable.size(), threads, [&](std::size_t u) {
      const MoebiusElement& h = *conjugators[usable[u]].element;
      Mat2 beta = h.matrix * alpha.matrix * h.matrix.inverse();
      hits[u] = find_equal(beta, cands, index, t, probe, h.word * alpha.word * h.word.inverse());
    });
    for (const auto& hit : hits) {
      if (!hit) continue;
      if (class_of[*hit] == -1) {
        class_of[*hit] = k;
      } else if (class_of[*hit] != k) {
        throw AlgorithmFailure("conjugacy search reached an element already assigned to another class");
      }
    }
  }

  // A class is not primitive when it contains a power delta^n (n >= 2) of
  // some candidate delta; delta^n shares delta's axis, so it is a candidate.
  std::size_t nclasses = first_member.size();
  std::vector<bool> primitive(nclasses, true);
  for (std::size_t k = 0; k < nclasses; ++k) {
    const Candidate& delta = cands[first_member[k]];
    for (int n = 2;; ++n) {
      Enclosure nl = Enclosure(n) * delta.length;
      if (mpfr_cmp(nl.lo(), max_length.hi()) > 0) break;
      MoebiusElement power = delta.element->power(n);
      auto hit = find_equal(power.matrix, cands, index, t, probe, power.word);
      if (!hit) {
        // delta^n could only be missing if its length exceeds the cutoff.
        if (mpfr_cmp(nl.hi(), max_length.lo()) <= 0) {
          throw AlgorithmFailure("power " + power.word.str() + " missing from the candidate set");
        }
        continue;
      }
      primitive[static_cast<std::size_t>(class_of[*hit])] = false;
    }
  }

  std::vector<std::size_t> members(nclasses, 0);
  std::vector<std::size_t> best(nclasses, SIZE_MAX);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    auto k = static_cast<std::size_t>(class_of[i]);
    ++members[k];
    // cands is sorted by `closer`, so the first member seen is the representative.
    if (best[k] == SIZE_MAX) best[k] = i;
  }
  for (std::size_t k = 0; k < nclasses; ++k) {
    if (!primitive[k]) {
      ++out.non_primitive;
      continue;
    }
    const Candidate& rep = cands[best[k]];
    ConjugacyClassGeo c;
    c.representative = *rep.element;
    c.length = rep.length;
    c.trace = rep.trace;
    c.members = members[k];
    c.borderline = mpfr_cmp(rep.length.hi(), max_length.lo()) > 0;
    out.classes.push_back(std::move(c));
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const ConjugacyClassGeo& a, const ConjugacyClassGeo& b) {
    int c = mpfr_cmp(a.length.lo(), b.length.lo());
    if (c != 0) return c < 0;
    return a.representative.word < b.representative.word;
  });
  return out;
}

ClassEnumeration enumerate_primitive_hyperbolic(const TrianglePresentation& t, const Enclosure& max_length,
                                                const EnumerationOptions& options) {
  if (!max_length.certainly_positive()) throw DomainError("maximal length must be positive");
  Enclosure radius = capture_radius(max_length, t.capture_distance());
  Enclosure target = max(radius, Enclosure(options.probe_radius));
  CoverageState state = extend_until_covered(t, target, options.coverage);
  return classes_from_coverage(t, state, max_length, options.threads);
}

nlohmann::json classes_json(const TrianglePresentation& t, const ClassEnumeration& e) {
  Precision bits = e.cutoff.precision();
  for (const auto& c : e.classes) bits = std::max({bits, c.length.precision(), c.trace.precision()});
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : e.classes) {
    list.push_back({{"word", c.representative.word.str()},
                    {"length", enclosure_to_json(c.length, bits)},
                    {"trace", enclosure_to_json(c.trace, bits)},
                    {"borderline", c.borderline},
                    {"members", c.members}});
  }
  return {{"schema", schema_tag("twistcert.classes", 1)},
          {"precision", bits},
          {"signature", {t.p, t.q, t.r}},
          {"cutoff", enclosure_to_json(e.cutoff, bits)},
          {"stats",
           {{"elements", e.elements},
            {"candidates", e.candidates},
            {"nonPrimitive", e.non_primitive},
            {"generations", e.generations}}},
          {"classes", std::move(list)}};
}

ClassEnumeration classes_from_json(const nlohmann::json& doc, const TrianglePresentation& t) {
  require_schema(doc, "twistcert.classes", 1);
  Precision bits = document_precision(doc);
  auto sig = doc.at("signature").get<std::vector<int>>();
  if (sig != std::vector<int>{t.p, t.q, t.r}) throw InputError("class list signature does not match the group");
  ClassEnumeration e;
  e.cutoff = enclosure_from_json(doc.at("cutoff"), bits);
  if (doc.contains("stats")) {
    const auto& st = doc.at("stats");
    e.elements = st.value("elements", e.elements);
    e.candidates = st.value("candidates", e.candidates);
    e.non_primitive = st.value("nonPrimitive", e.non_primitive);
    e.generations = st.value("generations", e.generations);
  }
  for (const auto& item : doc.at("classes")) {
    ConjugacyClassGeo c;
    Word w = Word::parse(item.at("word").get<std::string>());
    c.representative = t.element(w);
    c.length = enclosure_from_json(item.at("length"), bits);
    c.trace = enclosure_from_json(item.at("trace"), bits);
    c.borderline = item.value("borderline", false);
    c.members = item.value("members", std::size_t{0});
    IsometryClass k = classify(c.representative);
    if (k.kind != IsometryKind::hyperbolic || !k.length->overlaps(c.length)) {
      throw InputError("class " + w.str() + " does not match its recorded length");
    }
    e.classes.push_back(std::move(c));
  }
  return e;
}

}  // namespace twistcert
