#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "twistcert/enclosure.hpp"

namespace twistcert {

// Exact element of Q(zeta_n), zeta_n = exp(2 pi i / n), stored in the power
// basis 1, zeta, ..., zeta^(phi(n)-1). The basis makes the representation
// unique for a fixed n; mixed-conductor operations embed into the lcm.
class Cyclotomic {
 public:
  Cyclotomic();  // 0 in Q
  Cyclotomic(long v);  // NOLINT: integers embed exactly
  static Cyclotomic rational(const mpq_class& q, int n = 1);
  static Cyclotomic zeta(int n, long k = 1);  // zeta_n^k
  // Sums of terms "c", "z", "z^k", "cz^k" with c an integer or fraction, in
  // Q(zeta_n); e.g. "z+z^2+z^4", "-1", "3/2-z^3".
  static Cyclotomic parse(std::string_view text, int n);

  int conductor() const { return n_; }
  const std::vector<mpq_class>& coefficients() const { return c_; }
  Cyclotomic in_conductor(int n) const;  // requires conductor() | n

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const mpq_class& q);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const mpq_class& q) { return a *= q; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  Cyclotomic conj() const;
  // Galois action zeta_n -> zeta_n^j, gcd(j, n) = 1.
  Cyclotomic galois(long j) const;

  bool is_zero() const;
  bool is_rational() const;
  bool is_real() const { return *this == conj(); }
  mpq_class to_rational() const;  // throws DomainError unless rational

  Enclosure real_part() const;
  Enclosure imag_part() const;

  std::string str() const;  // "z" denotes zeta_n
  nlohmann::json to_json() const;  // {"n": n, "terms": [[k, num, den], ...]}
  static Cyclotomic from_json(const nlohmann::json& j);

 private:
  Cyclotomic(int n, std::vector<mpq_class> c) : n_(n), c_(std::move(c)) {}
  static Cyclotomic from_exponents(int n, const std::vector<mpq_class>& by_exponent);
  int n_ = 1;
  std::vector<mpq_class> c_;
};

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int n);
int euler_phi(int n);

}  // namespace twistcert
