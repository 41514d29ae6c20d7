#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace twistcert {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;

// Process-wide default precision. Initialised from SPECTRAL_PRECISION_BITS
// when set, otherwise 128 bits.
Precision default_precision();
void set_default_precision(Precision bits);

// Precision used for newly computed enclosures on the calling thread.
Precision working_precision();

// Overrides the working precision of the calling thread for its lifetime.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(Precision bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  Precision saved_;
};

// Closed interval [lo, hi] with arbitrary-precision endpoints. Every
// operation rounds outward, so the result contains the exact image of any
// members of the operands.
class Enclosure {
 public:
  Enclosure();  // [0, 0]
  Enclosure(int v);  // NOLINT: integers are exact
  Enclosure(long v);  // NOLINT
  explicit Enclosure(double v);
  Enclosure(const Enclosure& other);
  Enclosure(Enclosure&& other) noexcept;
  Enclosure& operator=(const Enclosure& other);
  Enclosure& operator=(Enclosure&& other) noexcept;
  ~Enclosure();

  static Enclosure rational(const mpq_class& q);
  static Enclosure rational(long num, long den);
  static Enclosure bounds(double lo, double hi);
  static Enclosure hull(const Enclosure& a, const Enclosure& b);
  static Enclosure pi();
  // Decimal (or any mpfr-readable) endpoint strings; lo read rounding down,
  // hi rounding up.
  static Enclosure parse(std::string_view lo, std::string_view hi,
                         Precision bits = 0);
  // Inverse of lo_string()/hi_string(): round-to-nearest at the recorded
  // precision recovers the serialized endpoints bit for bit.
  static Enclosure parse_exact(std::string_view lo, std::string_view hi,
                               Precision bits);

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  Precision precision() const;

  double lo_double() const;   // rounded down
  double hi_double() const;   // rounded up
  double mid_double() const;  // nearest
  double width_upper() const;  // upper bound of hi - lo as a double
  double mag_upper() const;    // upper bound of max(|lo|, |hi|)
  Enclosure midpoint() const;  // thin enclosure of a point inside *this
  Enclosure lower() const;     // [lo, lo]
  Enclosure upper() const;     // [hi, hi]

  bool is_thin() const;
  bool contains(const mpq_class& q) const;
  bool contains(const Enclosure& inner) const;
  bool contains_zero() const;
  bool overlaps(const Enclosure& other) const;
  std::optional<Enclosure> intersect(const Enclosure& other) const;

  bool certainly_positive() const;  // lo > 0
  bool certainly_negative() const;  // hi < 0
  bool certainly_nonnegative() const;
  // Strict comparisons that hold for every pair of members.
  bool certainly_less(const Enclosure& other) const;
  bool certainly_greater(const Enclosure& other) const;

  Enclosure operator-() const;
  Enclosure& operator+=(const Enclosure& o);
  Enclosure& operator-=(const Enclosure& o);
  Enclosure& operator*=(const Enclosure& o);
  Enclosure& operator/=(const Enclosure& o);

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);

  // Decimal endpoints printed so that reading them back at the same precision
  // reproduces the binary endpoints exactly.
  std::string lo_string() const;
  std::string hi_string() const;
  std::string str(int digits = 12) const;

 private:
  friend class EnclosureAccess;
  void init(Precision bits);
  mpfr_t lo_;
  mpfr_t hi_;
};

std::ostream& operator<<(std::ostream& os, const Enclosure& e);

Enclosure sqr(const Enclosure& v);
Enclosure abs(const Enclosure& v);
Enclosure pow(const Enclosure& v, int n);
Enclosure sqrt(const Enclosure& v);
Enclosure exp(const Enclosure& v);
Enclosure log(const Enclosure& v);
Enclosure sinh(const Enclosure& v);
Enclosure cosh(const Enclosure& v);
Enclosure tanh(const Enclosure& v);
Enclosure asinh(const Enclosure& v);
Enclosure acosh(const Enclosure& v);
Enclosure sin(const Enclosure& v);
Enclosure cos(const Enclosure& v);
Enclosure acos(const Enclosure& v);
Enclosure max(const Enclosure& a, const Enclosure& b);
Enclosure min(const Enclosure& a, const Enclosure& b);
// sin(v)/v and sinh(v)/v with the removable singularity at 0 filled in.
Enclosure sinc(const Enclosure& v);
Enclosure sinhc(const Enclosure& v);

enum class ElementaryFn { sinh, cosh, tanh, arcsinh, arccosh, sin, cos, sqrt, exp };

std::optional<ElementaryFn> parse_elementary_fn(std::string_view name);
Enclosure env_fn(ElementaryFn fn, const Enclosure& v);

}  // namespace twistcert
