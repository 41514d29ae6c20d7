#include "twistcert/hyperbolic.hpp"

#include <algorithm>

#include "twistcert/error.hpp"

namespace twistcert {

HPoint::HPoint(Enclosure re, Enclosure im) : x(std::move(re)), y(std::move(im)) {
  if (y.certainly_positive()) return;
  if (y.certainly_negative() || mpfr_zero_p(y.hi())) throw DomainError("point below the real axis: " + y.str());
  throw PrecisionError("imaginary part not certainly positive: " + y.str());
}

std::string HPoint::str(int digits) const { return x.str(digits) + " + i" + y.str(digits); }

Mat2 Mat2::inverse() const { return {d, -b, -c, a}; }

Mat2 operator*(const Mat2& m, const Mat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Mat2 Mat2::operator-() const { return {-a, -b, -c, -d}; }

Mat2 Mat2::power(int n) const {
  Mat2 base = n < 0 ? inverse() : *this;
  unsigned k = static_cast<unsigned>(n < 0 ? -n : n);
  Mat2 result;
  while (k != 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

bool Mat2::encloses_identity() const {
  Enclosure one(1), zero(0), minus_one(-1);
  bool plus = a.contains(one) && d.contains(one) && b.contains(zero) && c.contains(zero);
  bool minus = a.contains(minus_one) && d.contains(minus_one) && b.contains(zero) && c.contains(zero);
  return plus || minus;
}

Mat2 rotation(const HPoint& center, const Enclosure& angle) {
  Enclosure half = angle / Enclosure(2);
  Enclosure co = cos(half);
  Enclosure si = sin(half);
  Mat2 k{co, si, -si, co};
  Enclosure s = sqrt(center.y);
  Mat2 m{s, center.x / s, Enclosure(0), Enclosure(1) / s};
  Mat2 m_inv{Enclosure(1) / s, -center.x / s, Enclosure(0), s};
  return m * k * m_inv;
}

HPoint apply(const Mat2& g, const HPoint& p) {
  Enclosure u = g.c * p.x + g.d;
  Enclosure cy = g.c * p.y;
  Enclosure den = sqr(u) + sqr(cy);
  Enclosure re = ((g.a * p.x + g.b) * u + g.a * cy * p.y) / den;
  Enclosure im = p.y / den;
  return {re, im};
}

Enclosure distance(const HPoint& p, const HPoint& q) {
  Enclosure chord = sqrt(sqr(p.x - q.x) + sqr(p.y - q.y));
  return Enclosure(2) * asinh(chord / (Enclosure(2) * sqrt(p.y * q.y)));
}

IsometryClass classify(const Mat2& g) {
  IsometryClass out;
  Enclosure tr = g.trace();
  out.trace = abs(tr);
  Enclosure two(2);
  if (out.trace.certainly_greater(two)) {
    out.kind = IsometryKind::hyperbolic;
    out.length = two * acosh(out.trace / two);
    return out;
  }
  if (out.trace.certainly_less(two)) {
    out.kind = IsometryKind::elliptic;
    // The representative with c < 0 is conjugate to a rotation matrix
    // [[cos t, sin t], [-sin t, cos t]] with t in (0, pi).
    if (g.c.certainly_negative()) {
      out.half_angle = acos(tr / two);
    } else if (g.c.certainly_positive()) {
      out.half_angle = acos(-tr / two);
    } else {
      Enclosure t = acos(out.trace / two);
      out.half_angle = Enclosure::hull(t, Enclosure::pi() - t);
    }
    return out;
  }
  return out;
}

Enclosure point_axis_distance(const Mat2& g, const Enclosure& length, const HPoint& p) {
  Enclosure half(2);
  Enclosure arg = sinh(distance(p, apply(g, p)) / half) / sinh(length / half);
  if (arg.certainly_less(Enclosure(1))) {
    throw DomainError("axis-distance argument " + arg.str() + " below 1");
  }
  return acosh(arg);
}

Enclosure point_axis_distance(const MoebiusElement& g, const HPoint& p) {
  IsometryClass k = classify(g);
  if (k.kind != IsometryKind::hyperbolic) {
    throw DomainError("point_axis_distance needs a hyperbolic element, got " + g.word.str());
  }
  return point_axis_distance(g.matrix, *k.length, p);
}

std::optional<Equality> try_equal(const Mat2& g, const Mat2& h, const WordProblemProbe& probe) {
  Enclosure d0 = distance(apply(g, probe.x0), apply(h, probe.x0));
  if (d0.certainly_positive()) return Equality::distinct;
  Enclosure d1 = distance(apply(g, probe.x1), apply(h, probe.x1));
  if (d1.certainly_positive()) return Equality::distinct;
  if (d0.certainly_less(probe.delta0) && d1.certainly_less(probe.delta1)) return Equality::equal;
  return std::nullopt;
}

Equality equal_in_group(const MoebiusElement& g, const MoebiusElement& h, const WordProblemProbe& probe) {
  if (auto r = try_equal(g.matrix, h.matrix, probe)) return *r;
  if (probe.evaluate) {
    Precision bits = 2 * std::max({working_precision(), g.matrix.a.precision(), h.matrix.a.precision()});
    PrecisionGuard guard(bits);
    if (auto r = try_equal(probe.evaluate(g.word), probe.evaluate(h.word), probe)) return *r;
  }
  throw UndecidableAtPrecision("cannot decide whether " + g.word.str() + " equals " + h.word.str());
}

}  // namespace twistcert
