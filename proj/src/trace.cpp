#include "twistcert/trace.hpp"

#include <algorithm>
#include <optional>

#include "twistcert/error.hpp"
#include "twistcert/io.hpp"
#include "twistcert/parallel.hpp"

namespace twistcert {

namespace {

Enclosure q(const mpq_class& v) { return Enclosure::rational(v); }

// (1/12d)(4 - 3x^2/(2d^2) + 3x^3/(8d^3)) for x >= 0.
template <typename T>
T inner_poly(const TestFunction& tf, const T& x) {
  Enclosure d = tf.d_enclosure();
  Enclosure c2 = Enclosure(3) / (Enclosure(2) * sqr(d));
  Enclosure c3 = Enclosure(3) / (Enclosure(8) * pow(d, 3));
  T inner = x * c3 - c2;
  T poly = x * x * inner + Enclosure(4);
  return poly * (Enclosure(1) / (Enclosure(12) * d));
}

// (1/12d)(2 - x/(2d))^3 for x >= 0.
template <typename T>
T outer_poly(const TestFunction& tf, const T& x) {
  Enclosure d = tf.d_enclosure();
  T u = Enclosure(2) - x * (Enclosure(1) / (Enclosure(2) * d));
  return u * u * u * (Enclosure(1) / (Enclosure(12) * d));
}

// -f'(x)/sinh(x/2) on [2d, 4d]: (1/(8d^2))(2 - x/(2d))^2 / sinh(x/2).
Jet identity_outer(const TestFunction& tf, const Jet& x) {
  Enclosure d = tf.d_enclosure();
  Jet u = Enclosure(2) - x * (Enclosure(1) / (Enclosure(2) * d));
  return sqr(u) * (Enclosure(1) / (Enclosure(8) * sqr(d))) / sinh(x * Enclosure::rational(1, 2));
}

Jet f_jet(const TestFunction& tf, const Jet& x, bool inner) { return inner ? inner_poly(tf, x) : outer_poly(tf, x); }

IntegralSpec make_spec(Integrand f, Enclosure a, Enclosure b, const QuadratureOptions& o) {
  IntegralSpec s;
  s.integrand = std::move(f);
  s.a = std::move(a);
  s.b = std::move(b);
  s.target_width = o.target_width;
  s.order = o.order;
  s.max_pieces = o.max_pieces;
  return s;
}

}  // namespace

mpq_class f_inner_branch(const TestFunction& tf, const mpq_class& x) {
  mpq_class a = abs(x), d = tf.d;
  return (4 - 3 * a * a / (2 * d * d) + 3 * a * a * a / (8 * d * d * d)) / (12 * d);
}

mpq_class f_outer_branch(const TestFunction& tf, const mpq_class& x) {
  mpq_class a = abs(x), d = tf.d;
  mpq_class u = 2 - a / (2 * d);
  return u * u * u / (12 * d);
}

mpq_class f_value_exact(const TestFunction& tf, const mpq_class& x) {
  mpq_class a = abs(x);
  if (a <= 2 * tf.d) return f_inner_branch(tf, a);
  if (a <= 4 * tf.d) return f_outer_branch(tf, a);
  return 0;
}

Enclosure f_value(const TestFunction& tf, const Enclosure& x) {
  Enclosure a = abs(x);
  Enclosure two_d = q(2 * tf.d), four_d = q(4 * tf.d);
  std::optional<Enclosure> out;
  auto add = [&](const Enclosure& v) { out = out ? Enclosure::hull(*out, v) : v; };
  if (mpfr_cmp(a.lo(), two_d.hi()) <= 0) {
    add(inner_poly(tf, Enclosure::hull(a.lower(), min(a.upper(), two_d.upper()))));
  }
  if (mpfr_cmp(a.hi(), two_d.lo()) >= 0 && mpfr_cmp(a.lo(), four_d.hi()) <= 0) {
    add(outer_poly(tf, Enclosure::hull(max(a.lower(), two_d.lower()), min(a.upper(), four_d.upper()))));
  }
  if (mpfr_cmp(a.hi(), four_d.lo()) >= 0) add(Enclosure(0));
  return *out;
}

Enclosure fhat_value(const TestFunction& tf, const Enclosure& y, Axis axis) {
  Enclosure u = tf.d_enclosure() * y;
  Enclosure s = axis == Axis::real ? sinc(u) : sinhc(u);
  return pow(s, 4);
}

mpq_class identity_integrand_limit(const TestFunction& tf) { return mpq_class(-1) / (2 * tf.d * tf.d * tf.d); }

Jet identity_integrand(const TestFunction& tf, const Jet& x) {
  // -f'(x) = (x/12d)(3/d^2 - 9x/(8d^3)) and sinh(x/2) = (x/2) sinhc(x/2).
  Enclosure d = tf.d_enclosure();
  Jet lin = Enclosure(3) / sqr(d) - x * (Enclosure(9) / (Enclosure(8) * pow(d, 3)));
  Jet half = x * Enclosure::rational(1, 2);
  return lin * (Enclosure(2) / (Enclosure(12) * d)) / sinhc(half);
}

Enclosure identity_integral(const TestFunction& tf, const QuadratureOptions& o) {
  Enclosure two_d = q(2 * tf.d), four_d = q(4 * tf.d);
  Enclosure inner = integrate_or_throw(
      make_spec([tf](const Jet& x) { return identity_integrand(tf, x); }, Enclosure(0), two_d, o));
  Enclosure outer =
      integrate_or_throw(make_spec([tf](const Jet& x) { return identity_outer(tf, x); }, two_d, four_d, o));
  // The integrand is even.
  return Enclosure(2) * (inner + outer);
}

Enclosure identity_term(int real_degree, const Enclosure& orbifold_area, const TestFunction& tf,
                        const QuadratureOptions& o) {
  return Enclosure(real_degree) * orbifold_area / (Enclosure(4) * Enclosure::pi()) * identity_integral(tf, o);
}

Enclosure elliptic_integral(const TestFunction& tf, const mpq_class& theta_over_pi, const QuadratureOptions& o) {
  Enclosure theta = Enclosure::pi() * q(theta_over_pi);
  // sin^2 is exact at the right angle, which is the common involution case.
  Enclosure shift = theta_over_pi == mpq_class(1, 2) ? Enclosure(2) : Enclosure(2) * sqr(sin(theta));
  Enclosure two_d = q(2 * tf.d), four_d = q(4 * tf.d);
  auto integrand = [tf, shift](bool inner) {
    return [tf, shift, inner](const Jet& x) {
      Jet s, c, hs, hc;
      sinh_cosh(x, s, c);
      sinh_cosh(x * Enclosure::rational(1, 2), hs, hc);
      return hc / (c + (shift - Enclosure(1))) * f_jet(tf, x, inner);
    };
  };
  return integrate_or_throw(make_spec(integrand(true), Enclosure(0), two_d, o)) +
         integrate_or_throw(make_spec(integrand(false), two_d, four_d, o));
}

ClassCharacter real_row_character(const CharacterTable& t, int real_row) {
  std::vector<Enclosure> values;
  for (int c = 0; c < t.class_count(); ++c) values.push_back(real_character_enclosure(t, real_row, c));
  return [values = std::move(values)](int cls) { return values[static_cast<std::size_t>(cls)]; };
}

ClassCharacter complex_row_character(const CharacterTable& t, int row, bool imaginary) {
  std::vector<Enclosure> values;
  for (const auto& v : t.rows.at(static_cast<std::size_t>(row)).values) {
    values.push_back(imaginary ? v.imag_part() : v.real_part());
  }
  return [values = std::move(values)](int cls) { return values[static_cast<std::size_t>(cls)]; };
}

nlohmann::json GeometricSide::to_json(Precision bits) const {
  return {{"realRow", real_row},
          {"identity", enclosure_to_json(identity, bits)},
          {"elliptic", enclosure_to_json(elliptic, bits)},
          {"hyperbolic", enclosure_to_json(hyperbolic, bits)},
          {"total", enclosure_to_json(total, bits)}};
}

void check_class_list_covers(const ClassEnumeration& e, const TestFunction& tf) {
  Enclosure need = q(tf.support());
  if (mpfr_cmp(e.cutoff.lo(), need.hi()) < 0) {
    throw IncompleteClassList("class list is certified up to " + e.cutoff.str() + ", the test function needs " +
                              need.str());
  }
}

TraceEvaluator::TraceEvaluator(const TrianglePresentation& t, std::vector<EllipticClass> elliptic,
                               const ClassEnumeration& hyperbolic, const QuotientGroup& g,
                               const CharacterTable& table, TestFunction tf, QuadratureOptions o)
    : elliptic_(std::move(elliptic)), table_(table), tf_(std::move(tf)), area_(t.area) {
  if (g.class_count() != table.class_count()) throw DomainError("character table does not belong to this group");
  check_class_list_covers(hyperbolic, tf_);
  identity_integral_ = identity_integral(tf_, o);

  // sin^2(theta) is symmetric under theta -> pi - theta.
  std::map<mpq_class, Enclosure> by_angle;
  for (const auto& e : elliptic_) {
    mpq_class key = std::min(e.angle_over_pi, mpq_class(1 - e.angle_over_pi));
    auto it = by_angle.find(key);
    if (it == by_angle.end()) it = by_angle.emplace(key, elliptic_integral(tf_, key, o)).first;
    elliptic_class_in_group_.push_back(g.class_of_word(e.word));
    elliptic_weight_.push_back(it->second / Enclosure(e.primitive_order));
  }

  Enclosure support = q(tf_.support());
  for (const auto& c : hyperbolic.classes) {
    if (!c.primitive) continue;
    int base = g.class_of_word(c.representative.word);
    for (long n = 1;; ++n) {
      Enclosure nl = Enclosure(n) * c.length;
      if (mpfr_cmp(nl.lo(), support.hi()) >= 0) break;
      Enclosure weight = c.length * f_value(tf_, nl) / (Enclosure(2) * sinh(nl / Enclosure(2)));
      hyperbolic_.push_back({g.power_class(base, n), std::move(weight)});
    }
  }
}

Enclosure TraceEvaluator::identity_term(int degree) const {
  return Enclosure(degree) * area_ / (Enclosure(4) * Enclosure::pi()) * identity_integral_;
}

Enclosure TraceEvaluator::elliptic_term(const ClassCharacter& chi) const {
  Enclosure sum(0);
  for (std::size_t i = 0; i < elliptic_.size(); ++i) sum += chi(elliptic_class_in_group_[i]) * elliptic_weight_[i];
  return sum;
}

Enclosure TraceEvaluator::hyperbolic_term(const ClassCharacter& chi) const {
  Enclosure sum(0);
  for (const auto& s : hyperbolic_) sum += chi(s.group_class) * s.weight;
  return sum;
}

GeometricSide TraceEvaluator::geometric_side(int real_row) const {
  GeometricSide out;
  out.real_row = real_row;
  ClassCharacter chi = real_row_character(table_, real_row);
  out.identity = identity_term(table_.real_rows.at(static_cast<std::size_t>(real_row)).real_degree);
  out.elliptic = elliptic_term(chi);
  out.hyperbolic = hyperbolic_term(chi);
  out.total = out.identity + out.elliptic + out.hyperbolic;
  return out;
}

std::vector<GeometricSide> TraceEvaluator::all_real_rows(int threads) const {
  std::vector<GeometricSide> out(table_.real_rows.size());
  parallel_for(out.size(), threads, [&](std::size_t i) { out[i] = geometric_side(static_cast<int>(i)); });
  return out;
}

}  // namespace twistcert
