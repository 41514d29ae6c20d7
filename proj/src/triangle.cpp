#include "twistcert/triangle.hpp"

#include <algorithm>

#include "twistcert/error.hpp"
#include "twistcert/io.hpp"

namespace twistcert {

namespace {

Enclosure law_of_cosines_side(const Enclosure& opposite, const Enclosure& adj1, const Enclosure& adj2) {
  // Side opposite the angle `opposite` in a triangle with angles
  // (opposite, adj1, adj2).
  return acosh((cos(opposite) + cos(adj1) * cos(adj2)) / (sin(adj1) * sin(adj2)));
}

Enclosure pi_over(int n) { return Enclosure::pi() / Enclosure(n); }

}  // namespace

char label_char(Label l) {
  switch (l) {
    case Label::root: return '0';
    case Label::L: return 'L';
    case Label::M: return 'M';
    case Label::R: return 'R';
    case Label::I: return 'I';
  }
  return '?';
}

Mat2 TrianglePresentation::generator_matrix(Gen g) const {
  switch (g) {
    case Gen::x: return x.matrix;
    case Gen::y: return y.matrix;
    case Gen::z: return z.matrix;
  }
  return {};
}

Mat2 TrianglePresentation::evaluate(const Word& w) const {
  Mat2 m;
  for (const auto& s : w.syllables()) m = m * generator_matrix(s.gen).power(s.power);
  return m;
}

TrianglePresentation build_presentation(int p, int q, int r) {
  if (p < 2 || q < 2 || r < 2) throw InvalidSignature("triangle group orders must be at least 2");
  if (static_cast<long>(q) * r + static_cast<long>(p) * r + static_cast<long>(p) * q >=
      static_cast<long>(p) * q * r) {
    throw InvalidSignature("signature (" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) +
                           ") is not hyperbolic");
  }
  TrianglePresentation t;
  t.p = p;
  t.q = q;
  t.r = r;
  Enclosure alpha = pi_over(p), beta = pi_over(q), gamma = pi_over(r);
  t.side_CA = law_of_cosines_side(beta, alpha, gamma);
  t.side_CB = law_of_cosines_side(alpha, beta, gamma);
  t.side_AB = law_of_cosines_side(gamma, alpha, beta);

  t.C = HPoint::i();
  t.A = HPoint(Enclosure(0), exp(t.side_CA));
  Mat2 turn = rotation(t.C, gamma);
  t.B = apply(turn, HPoint(Enclosure(0), exp(t.side_CB)));
  t.B_mirror = HPoint(-t.B.x, t.B.y);
  t.base_edge = {t.B_mirror, t.B};

  Enclosure two(2);
  t.x = {Word::generator(Gen::x), rotation(t.A, two * alpha)};
  t.y = {Word::generator(Gen::y), rotation(t.B, two * beta)};
  t.z = {Word::generator(Gen::z), rotation(t.C, two * gamma)};

  mpq_class defect = mpq_class(1) - mpq_class(1, p) - mpq_class(1, q) - mpq_class(1, r);
  t.area = two * Enclosure::pi() * Enclosure::rational(defect);
  return t;
}

std::vector<Label> child_labels(Label parent, int r) {
  std::vector<Label> labels(static_cast<size_t>(r), Label::I);
  auto at = [&](int j) -> Label& { return labels[static_cast<size_t>(j)]; };
  at(2) = Label::R;
  if (parent == Label::L) {
    for (int j = 3; j <= r - 4; ++j) at(j) = Label::M;
    at(r - 3) = Label::L;
    at(r - 2) = Label::I;
  } else {
    for (int j = 3; j <= r - 3; ++j) at(j) = Label::M;
    at(r - 2) = Label::L;
  }
  at(r - 1) = Label::I;
  at(0) = Label::I;
  at(1) = Label::I;
  return labels;
}

Generation first_generation(const TrianglePresentation& t) {
  if (t.p != 2 || t.q != 3) throw InvalidSignature("the automaton needs p = 2 and q = 3");
  Generation gen;
  for (int k = 0; k < t.r; ++k) {
    Word w = Word::generator(Gen::z, k).normalized(t.p, t.q, t.r);
    gen.push_back({t.element(w), k == 0 ? Label::root : Label::M, 1, -1, k});
  }
  return gen;
}

Generation next_generation(const Generation& current, const TrianglePresentation& t) {
  std::vector<MoebiusElement> steps;
  for (int j = 0; j < t.r; ++j) {
    Word w = (Word::generator(Gen::x) * Word::generator(Gen::z, j)).normalized(t.p, t.q, t.r);
    steps.push_back(t.element(w));
  }
  Generation next;
  for (size_t i = 0; i < current.size(); ++i) {
    const LabeledElement& g = current[i];
    if (g.label == Label::I || g.label == Label::R) continue;
    std::vector<Label> labels = child_labels(g.label, t.r);
    for (int j = 0; j < t.r; ++j) {
      const MoebiusElement& s = steps[static_cast<size_t>(j)];
      MoebiusElement child{(g.element.word * s.word).normalized(t.p, t.q, t.r), g.element.matrix * s.matrix};
      next.push_back({std::move(child), labels[static_cast<size_t>(j)], g.generation + 1, static_cast<int>(i), j});
    }
  }
  return next;
}

Enclosure segment_distance(const HPoint& c, const HPoint& p, const HPoint& q) {
  Enclosure a1 = distance(c, p);
  Enclosure a2 = distance(c, q);
  Enclosure e = distance(p, q);
  Enclosure nearest_end = min(a1, a2);
  Enclosure ch1 = cosh(a1), ch2 = cosh(a2), che = cosh(e);
  // Angle at p (resp. q) is at most pi/2 iff this quantity is >= 0.
  Enclosure at_p = ch1 * che - ch2;
  Enclosure at_q = ch2 * che - ch1;
  if (at_p.certainly_negative() || at_q.certainly_negative()) return nearest_end;
  Enclosure cos_p = at_p / (sinh(a1) * sinh(e));
  Enclosure sin_p = sqrt(Enclosure(1) - sqr(cos_p));
  Enclosure altitude = asinh(sinh(a1) * sin_p);
  if (at_p.certainly_nonnegative() && at_q.certainly_nonnegative()) return altitude;
  // The foot may or may not lie on the segment; the hull holds either value.
  return Enclosure::hull(altitude, nearest_end);
}

Enclosure boundary_distance(const Generation& gen, const TrianglePresentation& t) {
  std::optional<Enclosure> best;
  for (const auto& g : gen) {
    if (g.label == Label::I) continue;
    HPoint p = apply(g.element, t.base_edge.first);
    HPoint q = apply(g.element, t.base_edge.second);
    Enclosure d = segment_distance(t.C, p, q);
    best = best ? min(*best, d) : d;
  }
  if (!best) throw AlgorithmFailure("generation has no boundary edges");
  return *best;
}

std::size_t CoverageState::element_count() const {
  std::size_t n = 0;
  for (const auto& g : generations) n += g.size();
  return n;
}

CoverageState start_coverage(const TrianglePresentation& t) {
  CoverageState s;
  s.generations.push_back(first_generation(t));
  s.inner_radius = boundary_distance(s.generations.back(), t);
  s.radius_history.push_back(s.inner_radius);
  return s;
}

void extend_coverage(CoverageState& state, const TrianglePresentation& t, const Enclosure& target,
                     const CoverageOptions& options) {
  Enclosure threshold = target;
  if (options.diameter_margin && target.certainly_positive()) threshold = target + t.polygon_diameter();
  while (mpfr_cmp(state.inner_radius.lo(), threshold.hi()) < 0) {
    if (static_cast<int>(state.generations.size()) >= options.max_generations ||
        state.element_count() >= options.max_elements) {
      throw BudgetExhausted("coverage stopped at inner radius " + state.inner_radius.str() + " short of " +
                            threshold.str());
    }
    state.generations.push_back(next_generation(state.generations.back(), t));
    state.inner_radius = boundary_distance(state.generations.back(), t);
    state.radius_history.push_back(state.inner_radius);
  }
}

CoverageState extend_until_covered(const TrianglePresentation& t, const Enclosure& target,
                                   const CoverageOptions& options) {
  CoverageState s = start_coverage(t);
  extend_coverage(s, t, target, options);
  return s;
}

WordProblemProbe make_probe(const TrianglePresentation& t, const CoverageState& state, double radius) {
  Enclosure rad(radius);
  if (mpfr_cmp(state.inner_radius.lo(), rad.hi()) < 0) {
    throw AlgorithmFailure("probe needs coverage radius " + rad.str() + ", have " + state.inner_radius.str());
  }
  std::optional<Enclosure> sep0, sep1;
  Word x_word = Word::generator(Gen::x);
  for (size_t n = 0; n < state.generations.size(); ++n) {
    for (const auto& g : state.generations[n]) {
      Enclosure moved = distance(t.C, apply(g.element, t.C));
      if (mpfr_cmp(moved.lo(), rad.hi()) > 0) continue;
      // Generation 1 is the stabiliser of C.
      if (n > 0) sep0 = sep0 ? min(*sep0, moved) : moved;
      bool fixes_a = g.element.word.is_identity() || g.element.word == x_word;
      if (!fixes_a) {
        Enclosure d = distance(t.A, apply(g.element, t.A));
        sep1 = sep1 ? min(*sep1, d) : d;
      }
    }
  }
  if (!sep0 || !sep1 || !sep0->certainly_positive() || !sep1->certainly_positive()) {
    throw PrecisionError("orbit separations are not certainly positive");
  }
  // Minimisers must lie inside the searched ball.
  if (mpfr_cmp(sep0->hi(), rad.lo()) > 0 ||
      mpfr_cmp((Enclosure(2) * t.side_CA + *sep1).hi(), rad.lo()) > 0) {
    throw AlgorithmFailure("probe radius too small to certify the orbit separations");
  }
  WordProblemProbe probe;
  probe.x0 = t.C;
  probe.x1 = t.A;
  probe.delta0 = sep0->lower();
  probe.delta1 = sep1->lower();
  int p = t.p, q = t.q, r = t.r;
  probe.evaluate = [p, q, r](const Word& w) { return build_presentation(p, q, r).evaluate(w); };
  return probe;
}

std::vector<SymbolicGeneration> symbolic_generations(int r, int count) {
  if (r < 6) throw InvalidSignature("the automaton needs r >= 6");
  std::vector<SymbolicGeneration> out;
  if (count <= 0) return out;
  SymbolicGeneration first;
  for (int k = 0; k < r; ++k) {
    first.labels.push_back(k == 0 ? Label::root : Label::M);
    first.parents.push_back(-1);
  }
  out.push_back(std::move(first));
  while (static_cast<int>(out.size()) < count) {
    const SymbolicGeneration& cur = out.back();
    SymbolicGeneration next;
    for (size_t i = 0; i < cur.labels.size(); ++i) {
      Label l = cur.labels[i];
      if (l == Label::I || l == Label::R) continue;
      for (Label c : child_labels(l, r)) {
        next.labels.push_back(c);
        next.parents.push_back(static_cast<int>(i));
      }
    }
    out.push_back(std::move(next));
  }
  return out;
}

nlohmann::json tiling_json(const TrianglePresentation& t, const CoverageState& state) {
  Precision bits = t.polygon_diameter().precision();
  for (const auto& r : state.radius_history) bits = std::max(bits, r.precision());
  nlohmann::json gens = nlohmann::json::array();
  for (size_t n = 0; n < state.generations.size(); ++n) {
    nlohmann::json elems = nlohmann::json::array();
    for (const auto& g : state.generations[n]) {
      elems.push_back({{"word", g.element.word.str()},
                       {"label", std::string(1, label_char(g.label))},
                       {"parent", g.parent},
                       {"j", g.j}});
    }
    gens.push_back({{"generation", n + 1},
                    {"innerRadius", enclosure_to_json(state.radius_history[n], bits)},
                    {"elements", std::move(elems)}});
  }
  return {{"schema", schema_tag("twistcert.tiling", 1)},
          {"signature", {t.p, t.q, t.r}},
          {"precision", bits},
          {"polygonDiameter", enclosure_to_json(t.polygon_diameter(), bits)},
          {"generations", std::move(gens)}};
}

}  // namespace twistcert
