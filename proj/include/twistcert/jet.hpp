#pragma once

#include <vector>

#include "twistcert/enclosure.hpp"

namespace twistcert {

// Truncated Taylor series sum_k c_k t^k of a function around a base point.
// With an interval base point, c_k encloses f^(k)(xi)/k! for every xi in
// the base interval; this is what the integrator's remainder term uses.
class Jet {
 public:
  Jet() = default;
  static Jet variable(const Enclosure& base, int order);
  static Jet constant(const Enclosure& value, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Enclosure& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  Enclosure& operator[](int k) { return c_[static_cast<size_t>(k)]; }
  const Enclosure& value() const { return c_.front(); }

  Jet operator-() const;
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Enclosure& s);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator+(Jet a, const Enclosure& s);
  friend Jet operator-(Jet a, const Enclosure& s) { return a + (-s); }
  friend Jet operator+(const Enclosure& s, Jet a) { return std::move(a) + s; }
  friend Jet operator-(const Enclosure& s, const Jet& a) { return -a + s; }
  friend Jet operator*(Jet a, const Enclosure& s) { return a *= s; }
  friend Jet operator*(const Enclosure& s, Jet a) { return a *= s; }
  friend Jet operator/(const Jet& a, const Enclosure& s);

 private:
  explicit Jet(int order) : c_(static_cast<size_t>(order) + 1) {}
  std::vector<Enclosure> c_;

  friend Jet exp(const Jet& a);
  friend void sinh_cosh(const Jet& a, Jet& s, Jet& c);
  friend void sin_cos(const Jet& a, Jet& s, Jet& c);
  friend Jet sinhc(const Jet& a);
};

Jet sqr(const Jet& a);
Jet pow(const Jet& a, int n);
Jet exp(const Jet& a);
void sinh_cosh(const Jet& a, Jet& s, Jet& c);
void sin_cos(const Jet& a, Jet& s, Jet& c);
Jet sinh(const Jet& a);
Jet cosh(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
// sinh(u)/u, defined through u = 0.
Jet sinhc(const Jet& a);

// j-th Taylor coefficient of sinh(u)/u, enclosed over all u in p.
Enclosure sinhc_coefficient(int j, const Enclosure& p);

}  // namespace twistcert
