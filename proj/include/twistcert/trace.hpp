#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "twistcert/characters.hpp"
#include "twistcert/conjugacy.hpp"
#include "twistcert/integrate.hpp"
#include "twistcert/quotient.hpp"

namespace twistcert {

// f_d = ((1/2d) 1_[-d,d])^{*4}, supported on [-4d, 4d], with
// fhat_d(y) = (sin(dy)/(dy))^4.
struct TestFunction {
  mpq_class d{3, 4};

  Enclosure d_enclosure() const { return Enclosure::rational(d); }
  mpq_class support() const { return 4 * d; }
};

// Closed-form branches: (1/12d)(4 - 3x^2/(2d^2) + 3|x|^3/(8d^3)) on |x| <= 2d,
// (1/12d)(2 - |x|/(2d))^3 on 2d <= |x| <= 4d, zero beyond.
mpq_class f_value_exact(const TestFunction& tf, const mpq_class& x);
Enclosure f_value(const TestFunction& tf, const Enclosure& x);
// The two printed branches evaluated without case selection; used to check
// continuity at 2d and 4d.
mpq_class f_inner_branch(const TestFunction& tf, const mpq_class& x);
mpq_class f_outer_branch(const TestFunction& tf, const mpq_class& x);

enum class Axis { real, imaginary };
// fhat at y (real axis) or at i*y (imaginary axis).
Enclosure fhat_value(const TestFunction& tf, const Enclosure& y, Axis axis);

// Limit at 0 of f'(x) / sinh(x/2), i.e. -1/(2 d^3).
mpq_class identity_integrand_limit(const TestFunction& tf);
// -f'(x)/sinh(x/2) on [0, 2d] as a jet, smooth through 0.
Jet identity_integrand(const TestFunction& tf, const Jet& x);

struct QuadratureOptions {
  double target_width = 1e-24;
  int order = 11;
  std::size_t max_pieces = 1u << 16;
};

// -integral over R of f'(x)/sinh(x/2).
Enclosure identity_integral(const TestFunction& tf, const QuadratureOptions& q = {});
Enclosure identity_term(int real_degree, const Enclosure& orbifold_area, const TestFunction& tf,
                        const QuadratureOptions& q = {});
// integral over [0, 4d] of cosh(x/2) / (cosh x - 1 + 2 sin^2(theta)) f(x).
Enclosure elliptic_integral(const TestFunction& tf, const mpq_class& theta_over_pi, const QuadratureOptions& q = {});

// Character of a row at a class, supplied as an enclosure. Real rows use
// their realified values; the complex variant gives the real or imaginary
// part of a complex row.
using ClassCharacter = std::function<Enclosure(int cls)>;
ClassCharacter real_row_character(const CharacterTable& t, int real_row);
ClassCharacter complex_row_character(const CharacterTable& t, int row, bool imaginary);

struct GeometricSide {
  int real_row = -1;
  Enclosure identity;
  Enclosure elliptic;
  Enclosure hyperbolic;
  Enclosure total;
  nlohmann::json to_json(Precision bits) const;
};

// Evaluates geometric sides for one group with cached integrals. The class
// list must be certified up to 4d.
class TraceEvaluator {
 public:
  TraceEvaluator(const TrianglePresentation& t, std::vector<EllipticClass> elliptic, const ClassEnumeration& hyperbolic,
                 const QuotientGroup& g, const CharacterTable& table, TestFunction tf, QuadratureOptions q = {});

  Enclosure identity_term(int degree) const;
  Enclosure elliptic_term(const ClassCharacter& chi) const;
  Enclosure hyperbolic_term(const ClassCharacter& chi) const;
  GeometricSide geometric_side(int real_row) const;
  std::vector<GeometricSide> all_real_rows(int threads = 1) const;

  const TestFunction& test_function() const { return tf_; }
  const Enclosure& orbifold_area() const { return area_; }
  const Enclosure& identity_integral_value() const { return identity_integral_; }

 private:
  std::vector<EllipticClass> elliptic_;
  std::vector<int> elliptic_class_in_group_;
  std::vector<Enclosure> elliptic_weight_;  // integral / m
  struct HyperbolicSummand {
    int group_class;  // class of gamma^n in G
    Enclosure weight; // l f(n l) / (2 sinh(n l / 2))
  };
  std::vector<HyperbolicSummand> hyperbolic_;
  const CharacterTable& table_;
  TestFunction tf_;
  Enclosure area_;
  Enclosure identity_integral_;
};

// Summands of the hyperbolic sum for one class: n >= 1 while n * l.lo < 4d.
// Throws IncompleteClassList when the enumeration cutoff is below 4d.
void check_class_list_covers(const ClassEnumeration& e, const TestFunction& tf);

}  // namespace twistcert
