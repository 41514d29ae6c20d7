#include "twistcert/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

#include "twistcert/error.hpp"

namespace twistcert {

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw AlgorithmFailure("cyclotomic polynomial division left a remainder");
  }
  return quot;
}

// Folds exponents modulo n and reduces modulo Phi_n.
std::vector<mpq_class> reduce(int n, std::vector<mpq_class> poly) {
  std::vector<mpq_class> folded(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < poly.size(); ++k) folded[k % static_cast<std::size_t>(n)] += poly[k];
  const auto& phi = cyclotomic_polynomial(n);
  std::size_t deg = phi.size() - 1;
  for (std::size_t i = folded.size(); i-- > deg;) {
    if (folded[i] == 0) continue;
    mpq_class c = folded[i];
    for (std::size_t j = 0; j <= deg; ++j) folded[i - deg + j] -= c * phi[j];
  }
  folded.resize(deg);
  return folded;
}

mpq_class parse_rational(std::string_view s) {
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0) throw InputError("bad rational coefficient '" + std::string(s) + "'");
  q.canonicalize();
  return q;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw DomainError("euler_phi needs n >= 1");
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<long>> cache;
  if (n < 1) throw DomainError("cyclotomic polynomial needs n >= 1");
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic() : n_(1), c_(1) {}

Cyclotomic::Cyclotomic(long v) : n_(1), c_{mpq_class(v)} {}

Cyclotomic Cyclotomic::rational(const mpq_class& q, int n) {
  std::vector<mpq_class> c(static_cast<std::size_t>(euler_phi(n)));
  c[0] = q;
  return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::from_exponents(int n, const std::vector<mpq_class>& by_exponent) {
  return Cyclotomic(n, reduce(n, by_exponent));
}

Cyclotomic Cyclotomic::zeta(int n, long k) {
  if (n < 1) throw DomainError("zeta needs n >= 1");
  std::vector<mpq_class> e(static_cast<std::size_t>(n));
  e[static_cast<std::size_t>(((k % n) + n) % n)] = 1;
  return from_exponents(n, e);
}

Cyclotomic Cyclotomic::parse(std::string_view text, int n) {
  Cyclotomic sum = rational(0, n);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) throw InputError("empty cyclotomic expression");
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    mpq_class coeff = start == i ? mpq_class(1) : parse_rational(text.substr(start, i - start));
    skip();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip();
    }
    long exponent = 0;
    if (i < text.size() && text[i] == 'z') {
      ++i;
      exponent = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        std::size_t es = i;
        if (i < text.size() && text[i] == '-') ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (es == i) throw InputError("missing exponent in '" + std::string(text) + "'");
        exponent = std::stol(std::string(text.substr(es, i - es)));
      }
    } else if (start == i) {
      throw InputError("cannot parse cyclotomic expression '" + std::string(text) + "'");
    }
    sum += zeta(n, exponent) * mpq_class(coeff * sign);
    skip();
    if (i < text.size() && text[i] != '+' && text[i] != '-') {
      throw InputError("unexpected character in '" + std::string(text) + "'");
    }
  }
  return sum;
}

Cyclotomic Cyclotomic::in_conductor(int n) const {
  if (n % n_ != 0) throw DomainError("conductor " + std::to_string(n_) + " does not divide " + std::to_string(n));
  if (n == n_) return *this;
  std::size_t m = static_cast<std::size_t>(n / n_);
  std::vector<mpq_class> e(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < c_.size(); ++k) e[k * m] = c_[k];
  return from_exponents(n, e);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  int n = std::lcm(n_, o.n_);
  if (n != n_) *this = in_conductor(n);
  const Cyclotomic& b = o.n_ == n ? o : o.in_conductor(n);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += b.c_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  int n = std::lcm(n_, o.n_);
  Cyclotomic a = n_ == n ? *this : in_conductor(n);
  Cyclotomic b = o.n_ == n ? o : o.in_conductor(n);
  std::vector<mpq_class> prod(2 * a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  *this = from_exponents(n, prod);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const mpq_class& q) {
  for (auto& c : c_) c *= q;
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  int n = std::lcm(a.n_, b.n_);
  return a.in_conductor(n).c_ == b.in_conductor(n).c_;
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::galois(long j) const {
  long jm = ((j % n_) + n_) % n_;
  if (std::gcd(jm, static_cast<long>(n_)) != 1) throw DomainError("Galois exponent not coprime to the conductor");
  std::vector<mpq_class> e(static_cast<std::size_t>(n_));
  for (std::size_t k = 0; k < c_.size(); ++k) e[(k * static_cast<std::size_t>(jm)) % static_cast<std::size_t>(n_)] += c_[k];
  return from_exponents(n_, e);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k) {
    if (c_[k] != 0) return false;
  }
  return true;
}

mpq_class Cyclotomic::to_rational() const {
  if (!is_rational()) throw DomainError("cyclotomic value " + str() + " is not rational");
  return c_[0];
}

Enclosure Cyclotomic::real_part() const {
  Enclosure sum = Enclosure::rational(c_[0]);
  for (std::size_t k = 1; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Enclosure angle = Enclosure(2) * Enclosure::pi() * Enclosure::rational(static_cast<long>(k), n_);
    sum += Enclosure::rational(c_[k]) * cos(angle);
  }
  return sum;
}

Enclosure Cyclotomic::imag_part() const {
  Enclosure sum(0);
  for (std::size_t k = 1; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Enclosure angle = Enclosure(2) * Enclosure::pi() * Enclosure::rational(static_cast<long>(k), n_);
    sum += Enclosure::rational(c_[k]) * sin(angle);
  }
  return sum;
}

std::string Cyclotomic::str() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    mpq_class c = c_[k];
    if (c == 0) continue;
    bool negative = c < 0;
    mpq_class a = abs(c);
    if (!out.empty()) out += negative ? "-" : "+";
    else if (negative) out += "-";
    bool unit = a == 1;
    if (k == 0 || !unit) out += a.get_str();
    if (k >= 1) out += "z";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

nlohmann::json Cyclotomic::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    terms.push_back({k, c_[k].get_num().get_str(), c_[k].get_den().get_str()});
  }
  return {{"n", n_}, {"terms", std::move(terms)}};
}

Cyclotomic Cyclotomic::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms") || !j.at("terms").is_array()) {
    throw InputError("cyclotomic must be {n, terms}");
  }
  int n = j.at("n").get<int>();
  if (n < 1) throw InputError("cyclotomic conductor must be positive");
  std::vector<mpq_class> e(static_cast<std::size_t>(n));
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 3) throw InputError("cyclotomic term must be [k, num, den]");
    long k = t[0].get<long>();
    auto as_string = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    mpq_class c(mpz_class(as_string(t[1])), mpz_class(as_string(t[2])));
    c.canonicalize();
    e[static_cast<std::size_t>(((k % n) + n) % n)] += c;
  }
  return from_exponents(n, e);
}

}  // namespace twistcert
