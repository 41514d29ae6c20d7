#include "twistcert/jet.hpp"

#include <algorithm>
#include <cmath>

#include "twistcert/error.hpp"

namespace twistcert {

namespace {

int common_order(const Jet& a, const Jet& b) { return std::min(a.order(), b.order()); }

// g_j(q) for a thin q >= 0: sum over 2k >= j of binom(2k, j) q^(2k-j) / (2k+1)!.
Enclosure sinhc_coefficient_at(int j, const Enclosure& q) {
  double qd = q.hi_double();
  Enclosure q2 = sqr(q);
  int k = (j + 1) / 2;
  // term_k = binom(2k, j) q^(2k-j) / (2k+1)!
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(j));
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * k + 1));
  Enclosure term = Enclosure::rational(mpq_class(binom, fact)) * pow(q, 2 * k - j);
  Enclosure sum = term;
  Precision bits = working_precision();
  for (;; ++k) {
    // term_{k+1} / term_k = (2k+1) q^2 / ((2k+2-j)(2k+1-j)(2k+3))
    long num = 2L * k + 1;
    long den = (2L * k + 2 - j) * (2L * k + 1 - j) * (2L * k + 3);
    Enclosure next = term * q2 * Enclosure::rational(num, den);
    bool ratio_small = static_cast<double>(2 * k + 1 - j) >= 2.0 * qd * qd + 2.0;
    double mag = next.mag_upper();
    if (ratio_small && (mag == 0.0 || std::log2(mag) < std::log2(sum.mag_upper() + 1e-300) - bits - 8)) {
      // From here on each ratio is below 1/2, so the tail is at most 2 * next.
      Enclosure tail = Enclosure(2) * next.upper();
      return sum + Enclosure::hull(Enclosure(0), tail);
    }
    sum += next;
    term = next;
    if (k > 100000) throw PrecisionError("sinhc coefficient series did not converge");
  }
}

}  // namespace

Jet Jet::variable(const Enclosure& base, int order) {
  Jet j(order);
  j.c_[0] = base;
  for (int k = 1; k <= order; ++k) j.c_[static_cast<size_t>(k)] = Enclosure(k == 1 ? 1 : 0);
  return j;
}

Jet Jet::constant(const Enclosure& value, int order) {
  Jet j(order);
  j.c_[0] = value;
  for (int k = 1; k <= order; ++k) j.c_[static_cast<size_t>(k)] = Enclosure(0);
  return j;
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Jet& Jet::operator+=(const Jet& o) {
  c_.resize(static_cast<size_t>(common_order(*this, o)) + 1);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  c_.resize(static_cast<size_t>(common_order(*this, o)) + 1);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet& Jet::operator*=(const Enclosure& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Jet operator+(Jet a, const Enclosure& s) {
  a.c_[0] += s;
  return a;
}

Jet operator*(const Jet& a, const Jet& b) {
  int n = common_order(a, b);
  Jet r(n);
  for (int k = 0; k <= n; ++k) {
    Enclosure s = a[0] * b[k];
    for (int i = 1; i <= k; ++i) s += a[i] * b[k - i];
    r[k] = s;
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  if (b[0].contains_zero()) throw DomainError("jet division by a series whose value encloses zero");
  int n = common_order(a, b);
  Jet q(n);
  for (int k = 0; k <= n; ++k) {
    Enclosure s = a[k];
    for (int i = 1; i <= k; ++i) s -= b[i] * q[k - i];
    q[k] = s / b[0];
  }
  return q;
}

Jet operator/(const Jet& a, const Enclosure& s) {
  Jet r = a;
  for (auto& c : r.c_) c /= s;
  return r;
}

Jet sqr(const Jet& a) {
  Jet r = a * a;
  r[0] = sqr(a[0]);
  return r;
}

Jet pow(const Jet& a, int n) {
  if (n < 0) return Jet::constant(Enclosure(1), a.order()) / pow(a, -n);
  Jet r = Jet::constant(Enclosure(1), a.order());
  for (int i = 0; i < n; ++i) r = r * a;
  if (n > 0) r[0] = pow(a[0], n);
  return r;
}

Jet exp(const Jet& a) {
  int n = a.order();
  Jet e(n);
  e[0] = exp(a[0]);
  for (int k = 1; k <= n; ++k) {
    Enclosure s(0);
    for (int i = 1; i <= k; ++i) s += Enclosure(i) * a[i] * e[k - i];
    e[k] = s / Enclosure(k);
  }
  return e;
}

void sinh_cosh(const Jet& a, Jet& s, Jet& c) {
  int n = a.order();
  s = Jet(n);
  c = Jet(n);
  s[0] = sinh(a[0]);
  c[0] = cosh(a[0]);
  for (int k = 1; k <= n; ++k) {
    Enclosure ss(0), cc(0);
    for (int i = 1; i <= k; ++i) {
      Enclosure w = Enclosure(i) * a[i];
      ss += w * c[k - i];
      cc += w * s[k - i];
    }
    s[k] = ss / Enclosure(k);
    c[k] = cc / Enclosure(k);
  }
}

void sin_cos(const Jet& a, Jet& s, Jet& c) {
  int n = a.order();
  s = Jet(n);
  c = Jet(n);
  s[0] = sin(a[0]);
  c[0] = cos(a[0]);
  for (int k = 1; k <= n; ++k) {
    Enclosure ss(0), cc(0);
    for (int i = 1; i <= k; ++i) {
      Enclosure w = Enclosure(i) * a[i];
      ss += w * c[k - i];
      cc -= w * s[k - i];
    }
    s[k] = ss / Enclosure(k);
    c[k] = cc / Enclosure(k);
  }
}

Jet sinh(const Jet& a) {
  Jet s, c;
  sinh_cosh(a, s, c);
  return s;
}

Jet cosh(const Jet& a) {
  Jet s, c;
  sinh_cosh(a, s, c);
  return c;
}

Jet sin(const Jet& a) {
  Jet s, c;
  sin_cos(a, s, c);
  return s;
}

Jet cos(const Jet& a) {
  Jet s, c;
  sin_cos(a, s, c);
  return c;
}

Enclosure sinhc_coefficient(int j, const Enclosure& p) {
  if (j < 0) throw DomainError("negative coefficient index");
  bool odd = (j % 2) == 1;
  if (p.certainly_nonnegative()) {
    return Enclosure::hull(sinhc_coefficient_at(j, p.lower()).lower(), sinhc_coefficient_at(j, p.upper()).upper());
  }
  if (mpfr_sgn(p.hi()) <= 0) {
    Enclosure r = sinhc_coefficient(j, -p);
    return odd ? -r : r;
  }
  // Straddles zero: even coefficients are even and increasing in |p|, odd ones
  // are odd and increasing.
  Enclosure m = abs(p).upper();
  Enclosure top = sinhc_coefficient_at(j, m).upper();
  if (odd) return Enclosure::hull(-top, top);
  return Enclosure::hull(sinhc_coefficient_at(j, Enclosure(0)).lower(), top);
}

Jet sinhc(const Jet& a) {
  int n = a.order();
  // sinhc(a0 + delta) = sum_j g_j(a0) delta^j with delta_0 = 0.
  Jet delta = a;
  delta[0] = Enclosure(0);
  Jet r = Jet::constant(sinhc_coefficient(0, a[0]), n);
  Jet power = delta;
  for (int j = 1; j <= n; ++j) {
    Enclosure g = sinhc_coefficient(j, a[0]);
    for (int k = j; k <= n; ++k) r[k] += g * power[k];
    if (j < n) power = power * delta;
  }
  return r;
}

}  // namespace twistcert
