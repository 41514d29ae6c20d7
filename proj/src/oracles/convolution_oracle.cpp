#include <algorithm>

#include "twistcert/error.hpp"
#include "twistcert/oracles.hpp"

namespace twistcert::oracle {

namespace {

using Poly = std::vector<mpq_class>;

Poly add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly scale(Poly a, const mpq_class& s) {
  for (auto& c : a) c *= s;
  return a;
}

// u^k for the linear polynomial u.
Poly power(const Poly& u, int k) {
  Poly out{1};
  for (int i = 0; i < k; ++i) out = mul(out, u);
  return out;
}

mpq_class horner(const Poly& p, const mpq_class& x) {
  mpq_class v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

mpq_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return mpq_class(out);
}

// Contribution of one pair of pieces: x -> integral of p(t) q(x - t) over
// t in [a1, b1] with x - t in [a2, b2].
void pair_contribution(const Piece& p, const Piece& q, std::vector<Piece>& out) {
  std::vector<mpq_class> cuts{p.a + q.a, p.a + q.b, p.b + q.a, p.b + q.b};
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const mpq_class &u = cuts[k], &v = cuts[k + 1];
    if (u == v) continue;
    mpq_class mid = (u + v) / 2;
    // Integration limits are linear in x on (u, v).
    Poly lo = mid - q.b >= p.a ? Poly{-q.b, 1} : Poly{p.a};
    Poly hi = mid - q.a <= p.b ? Poly{-q.a, 1} : Poly{p.b};
    Poly h;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
      for (std::size_t j = 0; j < q.coeffs.size(); ++j) {
        for (std::size_t m = 0; m <= j; ++m) {
          // q_j (x - t)^j contributes q_j C(j, m) x^(j-m) (-t)^m.
          mpq_class c = p.coeffs[i] * q.coeffs[j] * binomial(static_cast<int>(j), static_cast<int>(m));
          if (m % 2 == 1) c = -c;
          if (c == 0) continue;
          int e = static_cast<int>(i + m) + 1;
          Poly antideriv = add(power(hi, e), scale(power(lo, e), -1));
          Poly xpow(j - m + 1);
          xpow[j - m] = 1;
          h = add(h, scale(mul(xpow, antideriv), c / e));
        }
      }
    }
    out.push_back({u, v, h});
  }
}

}  // namespace

PiecewisePoly box(const mpq_class& half_width, const mpq_class& height) {
  if (half_width <= 0) throw DomainError("box half width must be positive");
  return {{-half_width, half_width, {height}}};
}

PiecewisePoly convolve(const PiecewisePoly& f, const PiecewisePoly& g) {
  std::vector<Piece> parts;
  for (const auto& p : f) {
    for (const auto& q : g) pair_contribution(p, q, parts);
  }
  std::vector<mpq_class> cuts;
  for (const auto& part : parts) {
    cuts.push_back(part.a);
    cuts.push_back(part.b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  PiecewisePoly out;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    Piece piece{cuts[k], cuts[k + 1], {}};
    for (const auto& part : parts) {
      if (part.a <= piece.a && piece.b <= part.b) piece.coeffs = add(piece.coeffs, part.coeffs);
    }
    while (!piece.coeffs.empty() && piece.coeffs.back() == 0) piece.coeffs.pop_back();
    out.push_back(std::move(piece));
  }
  return out;
}

mpq_class evaluate(const PiecewisePoly& f, const mpq_class& x) {
  for (const auto& piece : f) {
    if (piece.a <= x && x <= piece.b) return horner(piece.coeffs, x);
  }
  return 0;
}

PiecewisePoly test_function_by_convolution(const mpq_class& d) {
  PiecewisePoly g = box(d, 1 / (2 * d));
  return convolve(convolve(g, g), convolve(g, g));
}

}  // namespace twistcert::oracle
