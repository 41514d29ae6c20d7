#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "twistcert/enclosure.hpp"
#include "twistcert/jet.hpp"

namespace twistcert {

// Evaluates the integrand as a Taylor jet in the integration variable. Order-0
// jets are plain interval evaluations.
using Integrand = std::function<Jet(const Jet& x)>;

// Replacement integrand used on every piece that comes within `radius` of
// `point`, typically because the generic expression divides by zero there.
struct SingularPatch {
  Enclosure point;
  double radius = 0.0;
  Integrand provider;
};

struct IntegralSpec {
  Integrand integrand;
  Enclosure a;
  Enclosure b;
  double target_width = 1e-24;
  // Taylor order on each piece; the remainder uses order + 1.
  int order = 11;
  std::size_t max_pieces = 1u << 16;
  std::vector<SingularPatch> singular;
};

struct IntegralResult {
  Enclosure value;
  bool conclusive = true;  // false once the piece budget ran out
  std::size_t pieces = 0;
};

// Encloses the integral over [a, b] by deterministic adaptive bisection.
// Running out of budget still yields a sound enclosure, flagged inconclusive.
IntegralResult integrate(const IntegralSpec& spec);

// As integrate(), but throws BudgetExhausted on an inconclusive result.
Enclosure integrate_or_throw(const IntegralSpec& spec);

}  // namespace twistcert
