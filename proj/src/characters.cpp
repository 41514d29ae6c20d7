#include "twistcert/characters.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "twistcert/error.hpp"
#include "twistcert/io.hpp"

namespace twistcert {

namespace {

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;  // row-major

class Field {
 public:
  explicit Field(long p) : p_(p) {}
  long p() const { return p_; }
  long norm(long a) const { return ((a % p_) + p_) % p_; }
  long mul(long a, long b) const { return norm(a) * norm(b) % p_; }
  long pow(long a, long e) const {
    long r = 1;
    a = norm(a);
    for (; e > 0; e >>= 1, a = a * a % p_) {
      if (e & 1) r = r * a % p_;
    }
    return r;
  }
  long inv(long a) const {
    if (norm(a) == 0) throw AlgorithmFailure("division by zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
  }

  // Basis of {c : N c = 0} for an r x d matrix N.
  std::vector<Vec> nullspace(Mat m) const {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t piv = r;
      while (piv < rows && m[piv][c] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(m[piv], m[r]);
      long s = inv(m[r][c]);
      for (auto& v : m[r]) v = mul(v, s);
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || m[i][c] == 0) continue;
        long f = m[i][c];
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = norm(m[i][j] - f * m[r][j]);
      }
      pivot_col.push_back(static_cast<int>(c));
      ++r;
    }
    std::vector<Vec> basis;
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    for (std::size_t free = 0; free < cols; ++free) {
      if (is_pivot[free]) continue;
      Vec v(cols, 0);
      v[free] = 1;
      for (std::size_t i = 0; i < pivot_col.size(); ++i) v[static_cast<std::size_t>(pivot_col[i])] = norm(-m[i][free]);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  long p_;
};

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

long primitive_root(const Field& f) {
  long p = f.p();
  std::vector<long> factors;
  long m = p - 1;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    factors.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) factors.push_back(m);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long q : factors) ok = ok && f.pow(g, (p - 1) / q) != 1;
    if (ok) return g;
  }
  throw AlgorithmFailure("no primitive root modulo " + std::to_string(p));
}

// Columns of `basis` (k x d stored as d vectors of length k) split into the
// eigenspaces of m; throws when m is not diagonalisable on the span.
std::vector<std::vector<Vec>> split(const Field& f, const Mat& m, const std::vector<Vec>& basis) {
  std::size_t k = m.size(), d = basis.size();
  std::vector<Vec> image(d, Vec(k, 0));
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t i = 0; i < k; ++i) {
      long s = 0;
      for (std::size_t j = 0; j < k; ++j) s = (s + m[i][j] * basis[c][j]) % f.p();
      image[c][i] = s;
    }
  }
  std::vector<std::vector<Vec>> parts;
  std::size_t found = 0;
  for (long lambda = 0; lambda < f.p() && found < d; ++lambda) {
    Mat n(k, Vec(d, 0));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t c = 0; c < d; ++c) n[i][c] = f.norm(image[c][i] - lambda * basis[c][i]);
    }
    auto ns = f.nullspace(n);
    if (ns.empty()) continue;
    std::vector<Vec> part;
    for (const auto& coeffs : ns) {
      Vec v(k, 0);
      for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t i = 0; i < k; ++i) v[i] = (v[i] + coeffs[c] * basis[c][i]) % f.p();
      }
      part.push_back(std::move(v));
    }
    found += part.size();
    parts.push_back(std::move(part));
  }
  if (found != d) throw AlgorithmFailure("class matrix is not diagonalisable modulo " + std::to_string(f.p()));
  return parts;
}

std::string row_key(const ComplexRow& r) {
  std::string key;
  for (const auto& v : r.values) key += v.str() + "|";
  return key;
}

std::vector<ComplexRow> modular_table(const QuotientGroup& g, long p) {
  Field f(p);
  const int k = g.class_count();
  const std::size_t ku = static_cast<std::size_t>(k);
  const int n = g.order();
  const int e = g.exponent();
  if (g.classes()[0].element_order != 1) throw AlgorithmFailure("class 0 is not the identity class");

  // m[j][l][c] = #{(a, b) in C_j x C_l : ab = rep_c}.
  std::vector<Mat> m(ku, Mat(ku, Vec(ku, 0)));
  for (std::size_t j = 0; j < ku; ++j) {
    for (std::size_t c = 0; c < ku; ++c) {
      int target = g.classes()[c].representative;
      for (int a : g.classes()[j].members) {
        int l = g.class_of(g.mul(g.inverse(a), target));
        m[j][static_cast<std::size_t>(l)][c] += 1;
      }
    }
    for (auto& row : m[j]) {
      for (auto& v : row) v %= p;
    }
  }

  std::vector<std::vector<Vec>> spaces;
  std::vector<Vec> all;
  for (std::size_t i = 0; i < ku; ++i) {
    Vec v(ku, 0);
    v[i] = 1;
    all.push_back(v);
  }
  spaces.push_back(all);
  for (std::size_t j = 1; j < ku; ++j) {
    std::vector<std::vector<Vec>> next;
    for (auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      for (auto& part : split(f, m[j], s)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != ku) throw AlgorithmFailure("class matrices did not separate the characters");

  long z = f.pow(primitive_root(f), (p - 1) / e);
  std::vector<ComplexRow> rows;
  for (const auto& s : spaces) {
    Vec w = s[0];
    if (w[0] == 0) throw AlgorithmFailure("central character vanishes at the identity");
    long scale = f.inv(w[0]);
    for (auto& v : w) v = f.mul(v, scale);
    long sum = 0;
    for (std::size_t c = 0; c < ku; ++c) {
      int ci = g.inverse_class(static_cast<int>(c));
      long size = static_cast<long>(g.classes()[c].size());
      sum = f.norm(sum + f.mul(f.mul(w[c], w[static_cast<std::size_t>(ci)]), f.inv(size)));
    }
    long deg_sq = f.mul(n, f.inv(sum));
    int degree = 0;
    for (int d = 1; d * d <= n; ++d) {
      if (f.mul(d, d) == deg_sq) degree = d;
    }
    if (degree == 0) throw AlgorithmFailure("degree has no small square root modulo " + std::to_string(p));

    std::vector<long> theta(ku);
    for (std::size_t c = 0; c < ku; ++c) {
      theta[c] = f.mul(f.mul(degree, w[c]), f.inv(static_cast<long>(g.classes()[c].size())));
    }
    ComplexRow row;
    row.degree = degree;
    for (int c = 0; c < k; ++c) {
      int o = g.classes()[static_cast<std::size_t>(c)].element_order;
      long zo = f.pow(z, e / o);
      Cyclotomic value = Cyclotomic::rational(0, o);
      long total = 0;
      for (int j = 0; j < o; ++j) {
        long acc = 0;
        for (int l = 0; l < o; ++l) {
          long twist = f.pow(zo, static_cast<long>(o - (static_cast<long>(j) * l) % o) % o);
          acc = f.norm(acc + f.mul(theta[static_cast<std::size_t>(g.power_class(c, l))], twist));
        }
        long mult = f.mul(acc, f.inv(o));
        if (mult > degree) throw AlgorithmFailure("eigenvalue multiplicity does not lift modulo " + std::to_string(p));
        total += mult;
        if (mult) value += Cyclotomic::zeta(o, j) * mpq_class(mult);
      }
      if (total != degree) throw AlgorithmFailure("eigenvalue multiplicities do not sum to the degree");
      row.values.push_back(std::move(value));
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const ComplexRow& a, const ComplexRow& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return row_key(a) < row_key(b);
  });
  return rows;
}

}  // namespace

CharacterTable compute_character_table(const QuotientGroup& g) {
  CharacterTable t;
  t.group = g.name();
  t.order = g.order();
  t.conductor = g.exponent();
  for (int c = 0; c < g.class_count(); ++c) {
    const auto& cls = g.classes()[static_cast<std::size_t>(c)];
    t.class_sizes.push_back(static_cast<int>(cls.size()));
    t.class_orders.push_back(cls.element_order);
    t.inverse_class.push_back(g.inverse_class(c));
    t.square_class.push_back(g.power_class(c, 2));
    t.class_words.push_back(g.element_word(cls.representative).str());
  }
  long p = t.conductor + 1;
  auto next_prime = [&](long from) {
    long q = from;
    while (!(is_prime(q) && q * q > 4L * t.order)) q += t.conductor;
    return q;
  };
  p = next_prime(p);
  std::string last_error;
  for (int attempt = 0; attempt < 8; ++attempt, p = next_prime(p + t.conductor)) {
    if (t.order % p == 0) continue;
    try {
      t.rows = modular_table(g, p);
      t.prime = static_cast<int>(p);
      realify(t);
      return t;
    } catch (const AlgorithmFailure& e) {
      last_error = e.what();
    }
  }
  throw AlgorithmFailure("character table computation failed: " + last_error);
}

void realify(CharacterTable& t) {
  const mpq_class order(t.order);
  for (auto& row : t.rows) {
    Cyclotomic nu;
    for (int c = 0; c < t.class_count(); ++c) {
      nu += row.values[static_cast<std::size_t>(t.square_class[static_cast<std::size_t>(c)])] *
            mpq_class(t.class_sizes[static_cast<std::size_t>(c)]);
    }
    mpq_class v = nu.to_rational() / order;
    if (v != 1 && v != 0 && v != -1) throw AlgorithmFailure("Frobenius-Schur indicator " + v.get_str() + " is invalid");
    row.frobenius_schur = static_cast<int>(v.get_num().get_si());
  }
  t.real_rows.clear();
  std::vector<bool> used(t.rows.size(), false);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (used[i]) continue;
    const auto& row = t.rows[i];
    RealRow real;
    real.frobenius_schur = row.frobenius_schur;
    real.constituents.push_back(static_cast<int>(i));
    used[i] = true;
    if (row.frobenius_schur == 1) {
      real.real_degree = row.degree;
      real.values = row.values;
    } else if (row.frobenius_schur == -1) {
      real.real_degree = 2 * row.degree;
      for (const auto& v : row.values) real.values.push_back(v * mpq_class(2));
    } else {
      std::size_t partner = t.rows.size();
      for (std::size_t j = i + 1; j < t.rows.size() && partner == t.rows.size(); ++j) {
        if (used[j] || t.rows[j].degree != row.degree) continue;
        bool conj = true;
        for (std::size_t c = 0; c < row.values.size() && conj; ++c) conj = t.rows[j].values[c] == row.values[c].conj();
        if (conj) partner = j;
      }
      if (partner == t.rows.size()) throw AlgorithmFailure("complex-type character has no conjugate partner");
      used[partner] = true;
      real.constituents.push_back(static_cast<int>(partner));
      real.real_degree = 2 * row.degree;
      for (std::size_t c = 0; c < row.values.size(); ++c) real.values.push_back(row.values[c] + t.rows[partner].values[c]);
    }
    t.real_rows.push_back(std::move(real));
  }
}

OrthogonalityReport check_orthogonality(const CharacterTable& t) {
  OrthogonalityReport rep;
  const std::size_t k = static_cast<std::size_t>(t.class_count());
  const mpq_class order(t.order);
  auto fail = [&](const std::string& what) {
    if (rep.first_failure.empty()) rep.first_failure = what;
  };
  std::vector<std::vector<Cyclotomic>> conj(t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (const auto& v : t.rows[i].values) conj[i].push_back(v.conj());
  }

  rep.rows_orthonormal = t.rows.size() == k;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t j = i; j < t.rows.size(); ++j) {
      Cyclotomic s;
      for (std::size_t c = 0; c < k; ++c) s += t.rows[i].values[c] * conj[j][c] * mpq_class(t.class_sizes[c]);
      if (!(s == Cyclotomic::rational(i == j ? order : mpq_class(0)))) {
        rep.rows_orthonormal = false;
        fail("row orthogonality fails for rows " + std::to_string(i) + ", " + std::to_string(j));
      }
    }
  }
  rep.columns_orthogonal = true;
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t c2 = c; c2 < k; ++c2) {
      Cyclotomic s;
      for (std::size_t i = 0; i < t.rows.size(); ++i) s += t.rows[i].values[c] * conj[i][c2];
      mpq_class want = c == c2 ? order / t.class_sizes[c] : mpq_class(0);
      if (!(s == Cyclotomic::rational(want))) {
        rep.columns_orthogonal = false;
        fail("column orthogonality fails for classes " + std::to_string(c) + ", " + std::to_string(c2));
      }
    }
  }
  long squares = 0;
  for (const auto& r : t.rows) squares += static_cast<long>(r.degree) * r.degree;
  rep.degrees_square_sum = squares == t.order;
  if (!rep.degrees_square_sum) fail("sum of squared degrees is " + std::to_string(squares));
  rep.regular_collapse = true;
  for (std::size_t c = 0; c < k; ++c) {
    Cyclotomic s;
    for (const auto& r : t.rows) s += r.values[c] * mpq_class(r.degree);
    if (!(s == Cyclotomic(c == 0 ? t.order : 0))) {
      rep.regular_collapse = false;
      fail("regular character is wrong at class " + std::to_string(c));
    }
  }
  rep.real_rows_real = !t.real_rows.empty();
  for (std::size_t r = 0; r < t.real_rows.size(); ++r) {
    for (const auto& v : t.real_rows[r].values) {
      if (!v.is_real()) {
        rep.real_rows_real = false;
        fail("real row " + std::to_string(r) + " has a non-real value");
      }
    }
  }
  return rep;
}

const Cyclotomic& real_character(const CharacterTable& t, int real_row, int cls) {
  if (real_row < 0 || real_row >= static_cast<int>(t.real_rows.size()) || cls < 0 || cls >= t.class_count()) {
    throw DomainError("real character index out of range");
  }
  return t.real_rows[static_cast<std::size_t>(real_row)].values[static_cast<std::size_t>(cls)];
}

Enclosure real_character_enclosure(const CharacterTable& t, int real_row, int cls) {
  return real_character(t, real_row, cls).real_part();
}

ReferenceTable parse_reference_table(const nlohmann::json& doc) {
  require_schema(doc, "twistcert.reference-table", 1);
  ReferenceTable ref;
  ref.group = doc.value("group", "");
  ref.order = doc.at("order").get<int>();
  ref.conductor = doc.at("conductor").get<int>();
  ref.class_names = doc.at("classes").get<std::vector<std::string>>();
  for (const auto& row : doc.at("rows")) {
    ref.row_names.push_back(row.at("name").get<std::string>());
    std::vector<Cyclotomic> values;
    for (const auto& v : row.at("values")) values.push_back(Cyclotomic::parse(v.get<std::string>(), ref.conductor));
    if (values.size() != ref.class_names.size()) throw InputError("reference row " + ref.row_names.back() + " has the wrong length");
    ref.values.push_back(std::move(values));
  }
  if (doc.contains("notRealizable")) ref.not_realizable = doc.at("notRealizable").get<std::vector<std::string>>();
  return ref;
}

nlohmann::json ValidationReport::to_json() const {
  return {{"matched", matched},
          {"columnMap", column_map},
          {"rowMap", row_map},
          {"matchingBijections", matching_bijections},
          {"galoisBijections", galois_bijections},
          {"realifiedInvariant", realified_invariant},
          {"ambiguousRealRows", ambiguous_real_rows},
          {"alternativeRowMaps", alternative_row_maps},
          {"realizabilityAgrees", realizability_agrees}};
}

ValidationReport validate_against_reference(const CharacterTable& t, const ReferenceTable& ref) {
  const std::size_t k = static_cast<std::size_t>(t.class_count());
  if (ref.class_names.size() != k || ref.values.size() != t.rows.size()) {
    throw MismatchError("reference table is " + std::to_string(ref.values.size()) + "x" +
                        std::to_string(ref.class_names.size()) + ", computed table is " +
                        std::to_string(t.rows.size()) + "x" + std::to_string(k));
  }
  if (ref.order != t.order) {
    throw MismatchError("reference order " + std::to_string(ref.order) + " differs from " + std::to_string(t.order));
  }
  // Class sizes implied by the reference through column orthogonality.
  std::vector<int> ref_size(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    Cyclotomic s;
    for (const auto& row : ref.values) s += row[c] * row[c].conj();
    mpq_class norm = s.to_rational();
    mpq_class size = mpq_class(t.order) / norm;
    if (norm <= 0 || size.get_den() != 1) throw MismatchError("reference column " + ref.class_names[c] + " has no integral class size");
    ref_size[c] = static_cast<int>(size.get_num().get_si());
  }

  std::vector<std::vector<int>> bijections;
  std::vector<int> best_cols;
  std::vector<int> best_rows;
  std::size_t best_mismatch = SIZE_MAX;
  std::vector<int> cols(k, -1);
  std::vector<bool> used(k, false);

  auto match_rows = [&](const std::vector<int>& map, std::vector<int>& row_map) {
    // Greedy exact matching; rows are distinct so exact matches are unique.
    row_map.assign(ref.values.size(), -1);
    std::vector<bool> taken(t.rows.size(), false);
    std::size_t mismatches = 0;
    for (std::size_t r = 0; r < ref.values.size(); ++r) {
      std::size_t best = t.rows.size(), best_bad = SIZE_MAX;
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (taken[i]) continue;
        std::size_t bad = 0;
        for (std::size_t c = 0; c < k; ++c) {
          if (!(t.rows[i].values[static_cast<std::size_t>(map[c])] == ref.values[r][c])) ++bad;
        }
        if (bad < best_bad) {
          best_bad = bad;
          best = i;
        }
      }
      taken[best] = true;
      row_map[r] = static_cast<int>(best);
      mismatches += best_bad;
    }
    return mismatches;
  };

  std::function<void(std::size_t)> search = [&](std::size_t c) {
    if (c == k) {
      std::vector<int> rows;
      std::size_t bad = match_rows(cols, rows);
      if (bad == 0) bijections.push_back(cols);
      if (bad < best_mismatch) {
        best_mismatch = bad;
        best_cols = cols;
        best_rows = rows;
      }
      return;
    }
    for (std::size_t m = 0; m < k; ++m) {
      if (used[m] || t.class_sizes[m] != ref_size[c]) continue;
      used[m] = true;
      cols[c] = static_cast<int>(m);
      search(c + 1);
      used[m] = false;
    }
  };
  search(0);

  if (bijections.empty()) {
    std::string detail = "no size-compatible class bijection";
    if (!best_cols.empty()) {
      for (std::size_t r = 0; r < ref.values.size() && detail.rfind("entry", 0) != 0; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
          const Cyclotomic& mine = t.rows[static_cast<std::size_t>(best_rows[r])].values[static_cast<std::size_t>(best_cols[c])];
          if (!(mine == ref.values[r][c])) {
            detail = "entry (" + ref.row_names[r] + ", " + ref.class_names[c] + "): reference " +
                     ref.values[r][c].str() + ", computed " + mine.str() + " (conductor " +
                     std::to_string(mine.conductor()) + ")";
            break;
          }
        }
      }
    }
    throw MismatchError("computed character table does not match the reference: " + detail);
  }

  ValidationReport rep;
  rep.matched = true;
  rep.column_map = bijections.front();
  match_rows(rep.column_map, rep.row_map);
  rep.matching_bijections = static_cast<int>(bijections.size());
  std::vector<int> real_of(t.rows.size(), -1);
  for (std::size_t r = 0; r < t.real_rows.size(); ++r) {
    for (int c : t.real_rows[r].constituents) real_of[static_cast<std::size_t>(c)] = static_cast<int>(r);
  }
  rep.realified_invariant = true;
  std::vector<std::vector<int>> names(ref.row_names.size());
  for (const auto& b : bijections) {
    std::vector<int> rows;
    match_rows(b, rows);
    bool fixes_real_rows = true;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int real = real_of[static_cast<std::size_t>(rows[r])];
      if (real != real_of[static_cast<std::size_t>(rep.row_map[r])]) fixes_real_rows = false;
      if (std::find(names[r].begin(), names[r].end(), real) == names[r].end()) names[r].push_back(real);
    }
    if (!fixes_real_rows) {
      rep.alternative_row_maps.push_back(rows);
      continue;
    }
    ++rep.galois_bijections;
    for (const auto& real : t.real_rows) {
      for (std::size_t c = 0; c < k; ++c) {
        if (!(real.values[static_cast<std::size_t>(b[c])] == real.values[static_cast<std::size_t>(rep.column_map[c])])) {
          rep.realified_invariant = false;
        }
      }
    }
  }
  for (auto& n : names) {
    if (n.size() < 2) continue;
    std::sort(n.begin(), n.end());
    if (std::find(rep.ambiguous_real_rows.begin(), rep.ambiguous_real_rows.end(), n) == rep.ambiguous_real_rows.end()) {
      rep.ambiguous_real_rows.push_back(n);
    }
  }
  rep.realizability_agrees = true;
  for (std::size_t r = 0; r < ref.row_names.size(); ++r) {
    bool listed = std::find(ref.not_realizable.begin(), ref.not_realizable.end(), ref.row_names[r]) != ref.not_realizable.end();
    bool real_type = t.rows[static_cast<std::size_t>(rep.row_map[r])].frobenius_schur == 1;
    if (listed == real_type) rep.realizability_agrees = false;
  }
  return rep;
}

nlohmann::json character_table_json(const CharacterTable& t) {
  nlohmann::json classes = nlohmann::json::array();
  for (int c = 0; c < t.class_count(); ++c) {
    std::size_t cu = static_cast<std::size_t>(c);
    classes.push_back({{"size", t.class_sizes[cu]},
                       {"elementOrder", t.class_orders[cu]},
                       {"representativeWord", t.class_words[cu]},
                       {"inverseClass", t.inverse_class[cu]},
                       {"squareClass", t.square_class[cu]}});
  }
  auto values_json = [](const std::vector<Cyclotomic>& vs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : vs) out.push_back(v.to_json());
    return out;
  };
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"degree", r.degree}, {"fs", r.frobenius_schur}, {"values", values_json(r.values)}});
  }
  nlohmann::json real_rows = nlohmann::json::array();
  for (const auto& r : t.real_rows) {
    real_rows.push_back({{"realDegree", r.real_degree},
                         {"fs", r.frobenius_schur},
                         {"constituents", r.constituents},
                         {"values", values_json(r.values)}});
  }
  return {{"schema", schema_tag("twistcert.chartable", 1)},
          {"group", t.group},
          {"order", t.order},
          {"conductor", t.conductor},
          {"prime", t.prime},
          {"classes", std::move(classes)},
          {"complexRows", std::move(rows)},
          {"realRows", std::move(real_rows)}};
}

CharacterTable character_table_from_json(const nlohmann::json& doc) {
  require_schema(doc, "twistcert.chartable", 1);
  CharacterTable t;
  t.group = doc.value("group", "");
  t.order = doc.at("order").get<int>();
  t.conductor = doc.at("conductor").get<int>();
  t.prime = doc.value("prime", 0);
  for (const auto& c : doc.at("classes")) {
    t.class_sizes.push_back(c.at("size").get<int>());
    t.class_orders.push_back(c.at("elementOrder").get<int>());
    t.class_words.push_back(c.at("representativeWord").get<std::string>());
    t.inverse_class.push_back(c.at("inverseClass").get<int>());
    t.square_class.push_back(c.at("squareClass").get<int>());
  }
  auto values_from = [&](const nlohmann::json& vs) {
    std::vector<Cyclotomic> out;
    for (const auto& v : vs) out.push_back(Cyclotomic::from_json(v));
    if (out.size() != t.class_sizes.size()) throw InputError("character row has the wrong length");
    return out;
  };
  for (const auto& r : doc.at("complexRows")) {
    t.rows.push_back({r.at("degree").get<int>(), values_from(r.at("values")), r.at("fs").get<int>()});
  }
  for (const auto& r : doc.at("realRows")) {
    RealRow real;
    real.real_degree = r.at("realDegree").get<int>();
    real.frobenius_schur = r.at("fs").get<int>();
    real.constituents = r.at("constituents").get<std::vector<int>>();
    real.values = values_from(r.at("values"));
    t.real_rows.push_back(std::move(real));
  }
  return t;
}

}  // namespace twistcert
