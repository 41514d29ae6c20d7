#include "twistcert/enclosure.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "twistcert/error.hpp"

namespace twistcert {

namespace {

Precision initial_default_precision() {
  if (const char* env = std::getenv("SPECTRAL_PRECISION_BITS")) {
    char* end = nullptr;
    long bits = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && bits >= 32 && bits <= 1 << 16) return bits;
  }
  return kDefaultPrecision;
}

std::atomic<Precision>& default_slot() {
  static std::atomic<Precision> slot{initial_default_precision()};
  return slot;
}

thread_local Precision tls_precision = 0;

// RAII scratch value.
struct Real {
  mpfr_t v;
  explicit Real(Precision bits) { mpfr_init2(v, bits); }
  ~Real() { mpfr_clear(v); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
};

void check_finite(mpfr_srcptr lo, mpfr_srcptr hi, const char* what) {
  if (mpfr_nan_p(lo) || mpfr_nan_p(hi) || mpfr_inf_p(lo) || mpfr_inf_p(hi)) {
    throw PrecisionError(std::string("non-finite enclosure endpoint in ") + what);
  }
}

}  // namespace

Precision default_precision() { return default_slot().load(); }

void set_default_precision(Precision bits) {
  if (bits < 32 || bits > (1 << 16)) throw InputError("precision must lie in [32, 65536] bits");
  default_slot().store(bits);
}

Precision working_precision() { return tls_precision != 0 ? tls_precision : default_precision(); }

PrecisionGuard::PrecisionGuard(Precision bits) : saved_(tls_precision) {
  if (bits < MPFR_PREC_MIN || bits > (1 << 16)) throw PrecisionError("unsupported precision");
  tls_precision = bits;
}

PrecisionGuard::~PrecisionGuard() { tls_precision = saved_; }

// Grants the free functions below access to the endpoints.
class EnclosureAccess {
 public:
  static mpfr_ptr lo(Enclosure& e) { return e.lo_; }
  static mpfr_ptr hi(Enclosure& e) { return e.hi_; }
  static Enclosure fresh() { return Enclosure(); }
  static void finish(Enclosure& e, const char* what) {
    check_finite(e.lo_, e.hi_, what);
    if (mpfr_cmp(e.lo_, e.hi_) > 0) throw PrecisionError(std::string("inverted enclosure in ") + what);
  }
};

namespace {
using A = EnclosureAccess;

// Result with both endpoints from a monotone increasing function.
template <typename F>
Enclosure increasing(const Enclosure& v, F f, const char* what) {
  Enclosure r = A::fresh();
  f(A::lo(r), v.lo(), MPFR_RNDD);
  f(A::hi(r), v.hi(), MPFR_RNDU);
  A::finish(r, what);
  return r;
}

template <typename F>
Enclosure decreasing(const Enclosure& v, F f, const char* what) {
  Enclosure r = A::fresh();
  f(A::lo(r), v.hi(), MPFR_RNDD);
  f(A::hi(r), v.lo(), MPFR_RNDU);
  A::finish(r, what);
  return r;
}

// Clamp [lo, hi] to [floor, +inf); throws when the intersection is empty.
Enclosure clamp_below(const Enclosure& v, long floor, const char* what) {
  if (mpfr_cmp_si(v.hi(), floor) < 0) {
    throw DomainError(std::string(what) + ": enclosure " + v.str() + " lies outside the domain");
  }
  if (mpfr_cmp_si(v.lo(), floor) >= 0) return v;
  Enclosure r = v;
  mpfr_set_si(A::lo(r), floor, MPFR_RNDN);
  return r;
}

}  // namespace

void Enclosure::init(Precision bits) {
  mpfr_init2(lo_, bits);
  mpfr_init2(hi_, bits);
}

Enclosure::Enclosure() {
  init(working_precision());
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(int v) : Enclosure(static_cast<long>(v)) {}

Enclosure::Enclosure(long v) {
  init(working_precision());
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Enclosure::Enclosure(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite double");
  init(working_precision());
  mpfr_set_d(lo_, v, MPFR_RNDD);
  mpfr_set_d(hi_, v, MPFR_RNDU);
}

Enclosure::Enclosure(const Enclosure& o) {
  init(std::max(mpfr_get_prec(o.lo_), mpfr_get_prec(o.hi_)));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& o) noexcept : Enclosure(o) {}

Enclosure& Enclosure::operator=(const Enclosure& o) {
  if (this == &o) return *this;
  Precision p = std::max(mpfr_get_prec(o.lo_), mpfr_get_prec(o.hi_));
  if (mpfr_get_prec(lo_) != p) {
    mpfr_set_prec(lo_, p);
    mpfr_set_prec(hi_, p);
  }
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Enclosure& Enclosure::operator=(Enclosure&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  return *this;
}

Enclosure::~Enclosure() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Enclosure Enclosure::rational(const mpq_class& q) {
  Enclosure r;
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Enclosure Enclosure::rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  return rational(mpq_class(num, den));
}

Enclosure Enclosure::bounds(double lo, double hi) {
  if (!(lo <= hi)) throw DomainError("bounds: lo > hi");
  Enclosure r;
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
  Enclosure r;
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Enclosure Enclosure::pi() {
  Enclosure r;
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Enclosure Enclosure::parse(std::string_view lo, std::string_view hi, Precision bits) {
  Precision p = bits != 0 ? bits : working_precision();
  PrecisionGuard guard(p);
  Enclosure r;
  std::string l(lo), h(hi);
  if (mpfr_set_str(r.lo_, l.c_str(), 10, MPFR_RNDD) != 0 ||
      mpfr_set_str(r.hi_, h.c_str(), 10, MPFR_RNDU) != 0) {
    throw InputError("malformed enclosure endpoint '" + l + "' / '" + h + "'");
  }
  if (mpfr_cmp(r.lo_, r.hi_) > 0) throw InputError("enclosure endpoints out of order");
  return r;
}

Enclosure Enclosure::parse_exact(std::string_view lo, std::string_view hi, Precision bits) {
  PrecisionGuard guard(bits);
  Enclosure r;
  std::string l(lo), h(hi);
  if (mpfr_set_str(r.lo_, l.c_str(), 10, MPFR_RNDN) != 0 ||
      mpfr_set_str(r.hi_, h.c_str(), 10, MPFR_RNDN) != 0) {
    throw InputError("malformed enclosure endpoint '" + l + "' / '" + h + "'");
  }
  if (mpfr_cmp(r.lo_, r.hi_) > 0) throw InputError("enclosure endpoints out of order");
  return r;
}

Precision Enclosure::precision() const { return std::max(mpfr_get_prec(lo_), mpfr_get_prec(hi_)); }

double Enclosure::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Enclosure::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Enclosure::mid_double() const {
  Real m(precision() + 2);
  mpfr_add(m.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
  return mpfr_get_d(m.v, MPFR_RNDN);
}

double Enclosure::width_upper() const {
  Real w(precision());
  mpfr_sub(w.v, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(w.v, MPFR_RNDU);
}

double Enclosure::mag_upper() const {
  double a = std::fabs(mpfr_get_d(lo_, mpfr_sgn(lo_) < 0 ? MPFR_RNDD : MPFR_RNDU));
  double b = std::fabs(mpfr_get_d(hi_, mpfr_sgn(hi_) < 0 ? MPFR_RNDD : MPFR_RNDU));
  return std::max(a, b);
}

Enclosure Enclosure::midpoint() const {
  PrecisionGuard guard(precision());
  Enclosure r;
  mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
  if (mpfr_cmp(r.lo_, lo_) < 0) mpfr_set(r.lo_, lo_, MPFR_RNDN);
  if (mpfr_cmp(r.lo_, hi_) > 0) mpfr_set(r.lo_, hi_, MPFR_RNDN);
  mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
  return r;
}

Enclosure Enclosure::lower() const {
  Enclosure r = *this;
  mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
  return r;
}

Enclosure Enclosure::upper() const {
  Enclosure r = *this;
  mpfr_set(r.lo_, r.hi_, MPFR_RNDN);
  return r;
}

bool Enclosure::is_thin() const { return mpfr_equal_p(lo_, hi_) != 0; }

bool Enclosure::contains(const mpq_class& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Enclosure::contains(const Enclosure& inner) const {
  return mpfr_cmp(lo_, inner.lo_) <= 0 && mpfr_cmp(hi_, inner.hi_) >= 0;
}

bool Enclosure::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Enclosure::overlaps(const Enclosure& o) const {
  return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
}

std::optional<Enclosure> Enclosure::intersect(const Enclosure& o) const {
  if (!overlaps(o)) return std::nullopt;
  Enclosure r;
  mpfr_max(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

bool Enclosure::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Enclosure::certainly_negative() const { return mpfr_sgn(hi_) < 0; }
bool Enclosure::certainly_nonnegative() const { return mpfr_sgn(lo_) >= 0; }
bool Enclosure::certainly_less(const Enclosure& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
bool Enclosure::certainly_greater(const Enclosure& o) const { return mpfr_cmp(lo_, o.hi_) > 0; }

Enclosure Enclosure::operator-() const {
  Enclosure r = A::fresh();
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  Enclosure r = A::fresh();
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  A::finish(r, "addition");
  return r;
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  Enclosure r = A::fresh();
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  A::finish(r, "subtraction");
  return r;
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  Enclosure r = A::fresh();
  if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) >= 0) {
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  } else if (mpfr_sgn(a.hi_) <= 0 && mpfr_sgn(b.hi_) <= 0) {
    mpfr_mul(r.lo_, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  } else if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.hi_) <= 0) {
    mpfr_mul(r.lo_, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.lo_, b.hi_, MPFR_RNDU);
  } else if (mpfr_sgn(a.hi_) <= 0 && mpfr_sgn(b.lo_) >= 0) {
    mpfr_mul(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  } else {
    Precision p = mpfr_get_prec(r.lo_);
    Real t(p);
    mpfr_srcptr al[2] = {a.lo_, a.hi_};
    mpfr_srcptr bl[2] = {b.lo_, b.hi_};
    mpfr_mul(r.lo_, al[0], bl[0], MPFR_RNDD);
    mpfr_mul(r.hi_, al[0], bl[0], MPFR_RNDU);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        if (i == 0 && j == 0) continue;
        mpfr_mul(t.v, al[i], bl[j], MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t.v, MPFR_RNDD);
        mpfr_mul(t.v, al[i], bl[j], MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t.v, MPFR_RNDU);
      }
    }
  }
  A::finish(r, "multiplication");
  return r;
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.contains_zero()) throw DomainError("division by an enclosure containing zero: " + b.str());
  Enclosure r = A::fresh();
  Real t(mpfr_get_prec(r.lo_));
  mpfr_srcptr al[2] = {a.lo_, a.hi_};
  mpfr_srcptr bl[2] = {b.lo_, b.hi_};
  mpfr_div(r.lo_, al[0], bl[0], MPFR_RNDD);
  mpfr_div(r.hi_, al[0], bl[0], MPFR_RNDU);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (i == 0 && j == 0) continue;
      mpfr_div(t.v, al[i], bl[j], MPFR_RNDD);
      mpfr_min(r.lo_, r.lo_, t.v, MPFR_RNDD);
      mpfr_div(t.v, al[i], bl[j], MPFR_RNDU);
      mpfr_max(r.hi_, r.hi_, t.v, MPFR_RNDU);
    }
  }
  A::finish(r, "division");
  return r;
}

Enclosure& Enclosure::operator+=(const Enclosure& o) { return *this = *this + o; }
Enclosure& Enclosure::operator-=(const Enclosure& o) { return *this = *this - o; }
Enclosure& Enclosure::operator*=(const Enclosure& o) { return *this = *this * o; }
Enclosure& Enclosure::operator/=(const Enclosure& o) { return *this = *this / o; }

namespace {

std::string endpoint_string(mpfr_srcptr v) {
  if (mpfr_zero_p(v)) return "0";
  Precision p = mpfr_get_prec(v);
  // Enough decimal digits for an exact round trip under round-to-nearest.
  size_t digits = 1 + static_cast<size_t>(std::ceil(static_cast<double>(p) * 0.30102999566398120));
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, v, MPFR_RNDN);
  std::string s(raw);
  mpfr_free_str(raw);
  bool neg = !s.empty() && s[0] == '-';
  std::string mant = neg ? s.substr(1) : s;
  std::ostringstream os;
  if (neg) os << '-';
  os << mant[0] << '.' << mant.substr(1) << 'e' << (exp10 - 1);
  return os.str();
}

std::string short_string(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, rnd == MPFR_RNDD ? "%.*RDg" : "%.*RUg", digits, v);
  return buf;
}

}  // namespace

std::string Enclosure::lo_string() const { return endpoint_string(lo_); }
std::string Enclosure::hi_string() const { return endpoint_string(hi_); }

std::string Enclosure::str(int digits) const {
  return "[" + short_string(lo_, digits, MPFR_RNDD) + ", " + short_string(hi_, digits, MPFR_RNDU) + "]";
}

std::ostream& operator<<(std::ostream& os, const Enclosure& e) { return os << e.str(); }

Enclosure sqr(const Enclosure& v) {
  Enclosure r = A::fresh();
  if (mpfr_sgn(v.lo()) >= 0) {
    mpfr_sqr(A::lo(r), v.lo(), MPFR_RNDD);
    mpfr_sqr(A::hi(r), v.hi(), MPFR_RNDU);
  } else if (mpfr_sgn(v.hi()) <= 0) {
    mpfr_sqr(A::lo(r), v.hi(), MPFR_RNDD);
    mpfr_sqr(A::hi(r), v.lo(), MPFR_RNDU);
  } else {
    Real t(mpfr_get_prec(A::hi(r)));
    mpfr_set_zero(A::lo(r), 1);
    mpfr_sqr(A::hi(r), v.lo(), MPFR_RNDU);
    mpfr_sqr(t.v, v.hi(), MPFR_RNDU);
    mpfr_max(A::hi(r), A::hi(r), t.v, MPFR_RNDU);
  }
  A::finish(r, "sqr");
  return r;
}

Enclosure abs(const Enclosure& v) {
  if (mpfr_sgn(v.lo()) >= 0) return v;
  if (mpfr_sgn(v.hi()) <= 0) return -v;
  Enclosure r = A::fresh();
  mpfr_set_zero(A::lo(r), 1);
  mpfr_neg(A::hi(r), v.lo(), MPFR_RNDU);
  mpfr_max(A::hi(r), A::hi(r), v.hi(), MPFR_RNDU);
  return r;
}

Enclosure pow(const Enclosure& v, int n) {
  if (n < 0) return Enclosure(1) / pow(v, -n);
  if (n == 0) return Enclosure(1);
  auto f = [n](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) { mpfr_pow_ui(out, in, static_cast<unsigned long>(n), rnd); };
  if (n % 2 == 1) return increasing(v, f, "pow");
  return increasing(abs(v), f, "pow");
}

Enclosure sqrt(const Enclosure& v) {
  return increasing(clamp_below(v, 0, "sqrt"), [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_sqrt(o, i, r); },
                    "sqrt");
}

Enclosure exp(const Enclosure& v) {
  return increasing(v, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_exp(o, i, r); }, "exp");
}

Enclosure log(const Enclosure& v) {
  if (mpfr_sgn(v.lo()) <= 0) throw DomainError("log: enclosure " + v.str() + " not strictly positive");
  return increasing(v, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_log(o, i, r); }, "log");
}

Enclosure sinh(const Enclosure& v) {
  return increasing(v, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_sinh(o, i, r); }, "sinh");
}

Enclosure cosh(const Enclosure& v) {
  auto f = [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_cosh(o, i, r); };
  if (mpfr_sgn(v.lo()) >= 0) return increasing(v, f, "cosh");
  if (mpfr_sgn(v.hi()) <= 0) return decreasing(v, f, "cosh");
  return increasing(abs(v), f, "cosh");
}

Enclosure tanh(const Enclosure& v) {
  return increasing(v, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_tanh(o, i, r); }, "tanh");
}

Enclosure asinh(const Enclosure& v) {
  return increasing(v, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_asinh(o, i, r); }, "arcsinh");
}

Enclosure acosh(const Enclosure& v) {
  return increasing(clamp_below(v, 1, "arccosh"),
                    [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_acosh(o, i, r); }, "arccosh");
}

Enclosure acos(const Enclosure& v) {
  if (mpfr_cmp_si(v.lo(), 1) > 0 || mpfr_cmp_si(v.hi(), -1) < 0) {
    throw DomainError("arccos: enclosure " + v.str() + " outside [-1, 1]");
  }
  Enclosure c = v;
  if (mpfr_cmp_si(c.lo(), -1) < 0) mpfr_set_si(A::lo(c), -1, MPFR_RNDN);
  if (mpfr_cmp_si(c.hi(), 1) > 0) mpfr_set_si(A::hi(c), 1, MPFR_RNDN);
  return decreasing(c, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_acos(o, i, r); }, "arccos");
}

Enclosure max(const Enclosure& a, const Enclosure& b) {
  Enclosure r = A::fresh();
  mpfr_max(A::lo(r), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(A::hi(r), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Enclosure min(const Enclosure& a, const Enclosure& b) {
  Enclosure r = A::fresh();
  mpfr_min(A::lo(r), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(A::hi(r), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

namespace {

// Hull of a periodic function over [lo, hi] whose extrema +-1 sit at
// (k + shift) * pi with value (-1)^k.
template <typename F>
Enclosure periodic_unit(const Enclosure& v, F f, long shift_num, long shift_den, const char* what) {
  Enclosure pi = Enclosure::pi();
  Enclosure two_pi = pi * Enclosure(2);
  if (!(v.upper() - v.lower()).certainly_less(two_pi) || v.mag_upper() > 1e15) return Enclosure::bounds(-1.0, 1.0);
  Enclosure a = v.lower();
  Enclosure b = v.upper();
  Enclosure r = A::fresh();
  {
    Real t(mpfr_get_prec(A::lo(r)));
    f(A::lo(r), v.lo(), MPFR_RNDD);
    f(t.v, v.hi(), MPFR_RNDD);
    mpfr_min(A::lo(r), A::lo(r), t.v, MPFR_RNDD);
    f(A::hi(r), v.lo(), MPFR_RNDU);
    f(t.v, v.hi(), MPFR_RNDU);
    mpfr_max(A::hi(r), A::hi(r), t.v, MPFR_RNDU);
  }
  Enclosure shift = Enclosure::rational(shift_num, shift_den);
  long k0 = static_cast<long>(std::floor((a / pi - shift).lo_double())) - 1;
  long k1 = static_cast<long>(std::ceil((b / pi - shift).hi_double())) + 1;
  for (long k = k0; k <= k1; ++k) {
    Enclosure at = (Enclosure(k) + shift) * pi;
    if (!at.overlaps(v)) continue;
    if (k % 2 == 0) {
      mpfr_set_si(A::hi(r), 1, MPFR_RNDU);
    } else {
      mpfr_set_si(A::lo(r), -1, MPFR_RNDD);
    }
  }
  if (mpfr_cmp_si(A::hi(r), 1) > 0) mpfr_set_si(A::hi(r), 1, MPFR_RNDU);
  if (mpfr_cmp_si(A::lo(r), -1) < 0) mpfr_set_si(A::lo(r), -1, MPFR_RNDD);
  A::finish(r, what);
  return r;
}


// Series sum_k s^k p^{2k} / (2k+1)! at a thin point |p| <= 1 with a
// rigorous tail; sign = -1 gives sin(p)/p, +1 gives sinh(p)/p.
Enclosure unit_series(const Enclosure& p, int sign) {
  Enclosure p2 = sqr(p);
  Enclosure term(1);
  Enclosure sum(1);
  Precision bits = working_precision();
  for (int k = 1;; ++k) {
    term = term * p2 / Enclosure((2 * k) * (2 * k + 1));
    if (sign < 0) term = -term;
    sum += term;
    double mag = term.mag_upper();
    if (k > 2 && (mag == 0.0 || std::log2(mag) < -static_cast<double>(bits) - 8)) {
      // Remaining terms decrease by a factor <= 1/20 each; bound them by
      // twice the magnitude of the last one.
      Enclosure next = abs(term) * p2 / Enclosure((2 * k + 2) * (2 * k + 3));
      Enclosure tail = Enclosure(2) * next.upper();
      return sum + Enclosure::hull(-tail, tail);
    }
    if (k > 10000) throw PrecisionError("series did not converge");
  }
}

}  // namespace

Enclosure sin(const Enclosure& v) {
  return periodic_unit(v, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_sin(o, i, r); }, 1, 2, "sin");
}

Enclosure cos(const Enclosure& v) {
  return periodic_unit(v, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_cos(o, i, r); }, 0, 1, "cos");
}

Enclosure sinc(const Enclosure& v) {
  Enclosure a = abs(v);
  Enclosure one(1);
  if (a.certainly_greater(one) || mpfr_cmp_si(a.lo(), 1) >= 0) return sin(a) / a;
  // sinc is decreasing on [0, 1].
  Enclosure inner_hi = min(a.upper(), one);
  Enclosure at_lo = mpfr_zero_p(a.lo()) ? Enclosure(1) : unit_series(a.lower(), -1);
  Enclosure at_hi = unit_series(inner_hi, -1);
  Enclosure r = Enclosure::hull(at_hi.lower(), at_lo.upper());
  if (mpfr_cmp_si(a.hi(), 1) > 0) {
    Enclosure outer = Enclosure::hull(one, a.upper());
    r = Enclosure::hull(r, sin(outer) / outer);
  }
  return r;
}

Enclosure sinhc(const Enclosure& v) {
  Enclosure a = abs(v);
  auto at = [](const Enclosure& p) {
    if (mpfr_zero_p(p.lo())) return Enclosure(1);
    if (mpfr_cmp_si(p.lo(), 1) <= 0) return unit_series(p, +1);
    return sinh(p) / p;
  };
  // sinhc is increasing in |v|.
  return Enclosure::hull(at(a.lower()).lower(), at(a.upper()).upper());
}

std::optional<ElementaryFn> parse_elementary_fn(std::string_view name) {
  if (name == "sinh") return ElementaryFn::sinh;
  if (name == "cosh") return ElementaryFn::cosh;
  if (name == "tanh") return ElementaryFn::tanh;
  if (name == "arcsinh" || name == "asinh") return ElementaryFn::arcsinh;
  if (name == "arccosh" || name == "acosh") return ElementaryFn::arccosh;
  if (name == "sin") return ElementaryFn::sin;
  if (name == "cos") return ElementaryFn::cos;
  if (name == "sqrt") return ElementaryFn::sqrt;
  if (name == "exp") return ElementaryFn::exp;
  return std::nullopt;
}

Enclosure env_fn(ElementaryFn fn, const Enclosure& v) {
  switch (fn) {
    case ElementaryFn::sinh: return sinh(v);
    case ElementaryFn::cosh: return cosh(v);
    case ElementaryFn::tanh: return tanh(v);
    case ElementaryFn::arcsinh: return asinh(v);
    case ElementaryFn::arccosh: return acosh(v);
    case ElementaryFn::sin: return sin(v);
    case ElementaryFn::cos: return cos(v);
    case ElementaryFn::sqrt: return sqrt(v);
    case ElementaryFn::exp: return exp(v);
  }
  throw DomainError("unknown elementary function");
}

}  // namespace twistcert
