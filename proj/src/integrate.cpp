#include "twistcert/integrate.hpp"

#include <utility>

#include "twistcert/error.hpp"

namespace twistcert {

namespace {

bool near_patch(const Enclosure& lo, const Enclosure& hi, const SingularPatch& patch) {
  Enclosure r(patch.radius);
  return !(hi.certainly_less(patch.point - r) || lo.certainly_greater(patch.point + r));
}

const Integrand& integrand_for(const IntegralSpec& spec, const Enclosure& lo, const Enclosure& hi) {
  for (const auto& patch : spec.singular) {
    if (near_patch(lo, hi, patch)) return patch.provider;
  }
  return spec.integrand;
}

// Integral over [lo, hi] for thin lo < hi.
Enclosure piece_integral(const IntegralSpec& spec, const Enclosure& lo, const Enclosure& hi) {
  const Integrand& f = integrand_for(spec, lo, hi);
  Enclosure span = Enclosure::hull(lo, hi);
  if (spec.order <= 0) {
    return f(Jet::constant(span, 0)).value() * (hi - lo);
  }
  int n = spec.order % 2 == 1 ? spec.order : spec.order + 1;
  Enclosure m = Enclosure::hull(lo, hi).midpoint();
  Jet at_mid = f(Jet::variable(m, n));
  Jet over_span = f(Jet::variable(span, n + 1));
  Enclosure hp = hi - m;
  Enclosure hm = lo - m;
  Enclosure pp = hp;
  Enclosure pm = hm;
  Enclosure sum(0);
  for (int k = 0; k <= n; ++k) {
    sum += at_mid[k] * (pp - pm) / Enclosure(k + 1);
    pp *= hp;
    pm *= hm;
  }
  // (x - m)^(n+1) >= 0 since n + 1 is even, so the Lagrange remainder
  // integrates to a hull of the top coefficient times this moment.
  Enclosure moment = (pp - pm) / Enclosure(n + 2);
  return sum + over_span[n + 1] * moment;
}

}  // namespace

IntegralResult integrate(const IntegralSpec& spec) {
  if (!spec.integrand) throw DomainError("integrate: missing integrand");
  IntegralResult out;
  out.value = Enclosure(0);
  if (!spec.a.certainly_less(spec.b)) {
    if (spec.a.overlaps(spec.b)) {
      Enclosure span = Enclosure::hull(spec.a, spec.b);
      out.value = spec.integrand(Jet::constant(span, 0)).value() * (spec.b - spec.a);
      out.pieces = 1;
      return out;
    }
    IntegralSpec flipped = spec;
    std::swap(flipped.a, flipped.b);
    IntegralResult r = integrate(flipped);
    r.value = -r.value;
    return r;
  }

  Enclosure a = spec.a.upper();
  Enclosure b = spec.b.lower();
  if (!spec.a.is_thin()) {
    out.value += integrand_for(spec, spec.a.lower(), a)(Jet::constant(spec.a, 0)).value() * (a - spec.a);
  }
  if (!spec.b.is_thin()) {
    out.value += integrand_for(spec, b, spec.b.upper())(Jet::constant(spec.b, 0)).value() * (spec.b - b);
  }

  double total = (b - a).mid_double();
  struct Piece {
    Enclosure lo, hi, value;
  };
  std::vector<Piece> stack;
  stack.push_back({a, b, piece_integral(spec, a, b)});
  out.pieces = 1;
  std::vector<Enclosure> accepted;
  while (!stack.empty()) {
    Piece piece = std::move(stack.back());
    stack.pop_back();
    double len = (piece.hi - piece.lo).mid_double();
    double allowed = spec.target_width * len / total;
    bool small = len <= total * 1e-30;
    if (piece.value.width_upper() <= allowed || small) {
      accepted.push_back(std::move(piece.value));
      continue;
    }
    if (out.pieces + 2 > spec.max_pieces) {
      out.conclusive = false;
      accepted.push_back(std::move(piece.value));
      continue;
    }
    Enclosure mid = Enclosure::hull(piece.lo, piece.hi).midpoint();
    Enclosure left = piece_integral(spec, piece.lo, mid);
    Enclosure right = piece_integral(spec, mid, piece.hi);
    out.pieces += 2;
    // Right first so that the left half is processed next.
    stack.push_back({mid, piece.hi, std::move(right)});
    stack.push_back({piece.lo, mid, std::move(left)});
  }
  for (const auto& v : accepted) out.value += v;
  return out;
}

Enclosure integrate_or_throw(const IntegralSpec& spec) {
  IntegralResult r = integrate(spec);
  if (!r.conclusive) {
    throw BudgetExhausted("integration budget of " + std::to_string(spec.max_pieces) +
                          " pieces exhausted; enclosure " + r.value.str());
  }
  return r.value;
}

}  // namespace twistcert
