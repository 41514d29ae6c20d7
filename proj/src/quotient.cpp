#include "twistcert/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "twistcert/error.hpp"
#include "twistcert/io.hpp"

namespace twistcert {

namespace {

constexpr int kColumns = 6;

int column(Gen g, bool inverse) { return 2 * static_cast<int>(g) + (inverse ? 1 : 0); }
int inverse_column(int c) { return c ^ 1; }

std::vector<int> columns_of(const Word& w) {
  std::vector<int> out;
  for (const auto& s : w.syllables()) {
    int c = column(s.gen, s.power < 0);
    for (int k = 0; k < std::abs(s.power); ++k) out.push_back(c);
  }
  return out;
}

// Hazelgrove-Leech-Trotter enumeration with union-find coincidence handling.
class CosetTable {
 public:
  explicit CosetTable(std::size_t max_cosets) : max_(max_cosets) { add_row(); }

  void enumerate(const std::vector<std::vector<int>>& relators) {
    for (std::size_t a = 0; a < rows_.size(); ++a) {
      for (const auto& rel : relators) {
        if (!alive(a)) break;
        scan_and_fill(static_cast<int>(a), rel);
      }
      if (!alive(a)) continue;
      for (int c = 0; c < kColumns; ++c) {
        if (rows_[a][static_cast<std::size_t>(c)] < 0) define(static_cast<int>(a), c);
      }
    }
  }

  // Live cosets renumbered consecutively in order of definition.
  std::vector<std::array<int, kColumns>> compact() {
    std::vector<int> index(rows_.size(), -1);
    int n = 0;
    for (std::size_t a = 0; a < rows_.size(); ++a) {
      if (alive(a)) index[a] = n++;
    }
    std::vector<std::array<int, kColumns>> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::size_t a = 0; a < rows_.size(); ++a) {
      if (!alive(a)) continue;
      std::array<int, kColumns> row{};
      for (int c = 0; c < kColumns; ++c) {
        int t = rows_[a][static_cast<std::size_t>(c)];
        if (t < 0) throw AlgorithmFailure("coset table incomplete after enumeration");
        row[static_cast<std::size_t>(c)] = index[static_cast<std::size_t>(rep(t))];
      }
      out.push_back(row);
    }
    return out;
  }

 private:
  bool alive(std::size_t a) const { return parent_[a] == static_cast<int>(a); }

  int add_row() {
    if (rows_.size() >= max_) {
      throw BudgetExhausted("coset enumeration exceeded " + std::to_string(max_) + " cosets");
    }
    std::array<int, kColumns> row;
    row.fill(-1);
    rows_.push_back(row);
    parent_.push_back(static_cast<int>(rows_.size() - 1));
    return static_cast<int>(rows_.size() - 1);
  }

  int& entry(int a, int c) { return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]; }

  void define(int a, int c) {
    int b = add_row();
    entry(a, c) = b;
    entry(b, inverse_column(c)) = a;
  }

  int rep(int a) {
    int root = a;
    while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(a)] != root) {
      int next = parent_[static_cast<std::size_t>(a)];
      parent_[static_cast<std::size_t>(a)] = root;
      a = next;
    }
    return root;
  }

  void merge(int k, int l) {
    int phi = rep(k), psi = rep(l);
    if (phi == psi) return;
    int mu = std::min(phi, psi), nu = std::max(phi, psi);
    parent_[static_cast<std::size_t>(nu)] = mu;
    queue_.push_back(nu);
  }

  void coincidence(int a, int b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      int g = queue_[i];
      for (int c = 0; c < kColumns; ++c) {
        int d = entry(g, c);
        if (d < 0) continue;
        int ci = inverse_column(c);
        if (entry(d, ci) == g) entry(d, ci) = -1;
        int mu = rep(g), nu = rep(d);
        if (entry(mu, c) >= 0) {
          merge(nu, entry(mu, c));
        } else if (entry(nu, ci) >= 0) {
          merge(mu, entry(nu, ci));
        } else {
          entry(mu, c) = nu;
          entry(nu, ci) = mu;
        }
      }
    }
  }

  void scan_and_fill(int a, const std::vector<int>& w) {
    int f = a, b = a;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) >= 0) {
        f = entry(f, w[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, inverse_column(w[static_cast<std::size_t>(j)])) >= 0) {
        b = entry(b, inverse_column(w[static_cast<std::size_t>(j)]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        entry(f, w[static_cast<std::size_t>(i)]) = b;
        entry(b, inverse_column(w[static_cast<std::size_t>(i)])) = f;
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  std::size_t max_;
  std::vector<std::array<int, kColumns>> rows_;
  std::vector<int> parent_;
  std::vector<int> queue_;
};

}  // namespace

GroupPresentationData parse_relators(std::string_view text) {
  GroupPresentationData data;
  bool have_signature = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "name") {
      ls >> data.name;
    } else if (key == "signature") {
      if (!(ls >> data.p >> data.q >> data.r)) {
        throw InputError("line " + std::to_string(line_no) + ": signature needs three integers");
      }
      have_signature = true;
    } else {
      try {
        data.relators.push_back(Word::parse(line));
      } catch (const Error& e) {
        throw InputError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
  }
  if (!have_signature) throw InputError("relators file has no signature line");
  return data;
}

QuotientGroup coset_enumerate(const GroupPresentationData& data, std::size_t max_cosets) {
  if (data.p < 2 || data.q < 2 || data.r < 2) throw InvalidSignature("generator orders must be at least 2");
  std::vector<std::vector<int>> relators;
  relators.push_back(columns_of(Word::generator(Gen::x, data.p)));
  relators.push_back(columns_of(Word::generator(Gen::y, data.q)));
  relators.push_back(columns_of(Word::generator(Gen::z, data.r)));
  relators.push_back(columns_of(Word::parse("xyz")));
  for (const auto& w : data.relators) {
    if (!w.is_identity()) relators.push_back(columns_of(w));
  }
  // Short relators first: they collapse the table early.
  std::stable_sort(relators.begin() + 4, relators.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  CosetTable table(max_cosets);
  table.enumerate(relators);

  QuotientGroup g;
  g.name_ = data.name;
  g.p_ = data.p;
  g.q_ = data.q;
  g.r_ = data.r;
  g.table_ = table.compact();
  g.finish();

  // Every relator must act trivially on every coset.
  for (const auto& rel : relators) {
    for (int a = 0; a < g.n_; ++a) {
      int c = a;
      for (int col : rel) c = g.table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(col)];
      if (c != a) throw InconsistentPresentation("relator does not close on coset " + std::to_string(a));
    }
  }
  return g;
}

void QuotientGroup::finish() {
  n_ = static_cast<int>(table_.size());
  const std::size_t n = static_cast<std::size_t>(n_);

  // Renumber in breadth-first order over x, X, y, Y, z, Z so that smaller
  // indices carry shorter words.
  std::vector<int> order_of(n, -1), bfs;
  std::vector<int> tree_parent(n, -1), tree_column(n, -1);
  order_of[0] = 0;
  bfs.push_back(0);
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    int a = bfs[i];
    for (int c = 0; c < kColumns; ++c) {
      int b = table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
      if (order_of[static_cast<std::size_t>(b)] >= 0) continue;
      order_of[static_cast<std::size_t>(b)] = static_cast<int>(bfs.size());
      tree_parent[static_cast<std::size_t>(b)] = a;
      tree_column[static_cast<std::size_t>(b)] = c;
      bfs.push_back(b);
    }
  }
  if (bfs.size() != n) throw AlgorithmFailure("coset graph is not connected");
  std::vector<std::array<int, kColumns>> renumbered(n);
  std::vector<int> parent(n, -1), parent_column(n, -1);
  for (std::size_t old = 0; old < n; ++old) {
    std::size_t now = static_cast<std::size_t>(order_of[old]);
    for (int c = 0; c < kColumns; ++c) {
      renumbered[now][static_cast<std::size_t>(c)] =
          order_of[static_cast<std::size_t>(table_[old][static_cast<std::size_t>(c)])];
    }
    if (tree_parent[old] >= 0) {
      parent[now] = order_of[static_cast<std::size_t>(tree_parent[old])];
      parent_column[now] = tree_column[old];
    }
  }
  table_ = std::move(renumbered);

  words_.assign(n, Word());
  for (std::size_t a = 1; a < n; ++a) {
    int c = parent_column[a];
    words_[a] = words_[static_cast<std::size_t>(parent[a])] * Word::generator(static_cast<Gen>(c / 2), c % 2 ? -1 : 1);
  }

  mul_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    int* row = &mul_[a * n];
    row[0] = static_cast<int>(a);
    // BFS order guarantees the parent of b is already filled.
    for (std::size_t b = 1; b < n; ++b) {
      row[b] = table_[static_cast<std::size_t>(row[parent[b]])][static_cast<std::size_t>(parent_column[b])];
    }
  }
  inv_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mul_[a * n + b] == 0) {
        inv_[a] = static_cast<int>(b);
        break;
      }
    }
    if (inv_[a] < 0) throw AlgorithmFailure("multiplication table has no inverse for element " + std::to_string(a));
  }
  order_.assign(n, 0);
  exponent_ = 1;
  for (std::size_t a = 0; a < n; ++a) {
    int k = 1;
    for (int c = static_cast<int>(a); c != 0; c = mul(c, static_cast<int>(a))) ++k;
    order_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }
  for (int g = 0; g < 3; ++g) gen_[g] = table_[0][static_cast<std::size_t>(2 * g)];

  // Conjugation orbits under the generators.
  class_of_.assign(n, -1);
  std::vector<GroupClass> raw;
  for (std::size_t a = 0; a < n; ++a) {
    if (class_of_[a] >= 0) continue;
    GroupClass cls;
    int id = static_cast<int>(raw.size());
    class_of_[a] = id;
    cls.members.push_back(static_cast<int>(a));
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      int m = cls.members[i];
      for (int h : gen_) {
        int conj = mul(mul(inverse(h), m), h);
        if (class_of_[static_cast<std::size_t>(conj)] < 0) {
          class_of_[static_cast<std::size_t>(conj)] = id;
          cls.members.push_back(conj);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    cls.element_order = order_[static_cast<std::size_t>(cls.representative)];
    raw.push_back(std::move(cls));
  }
  std::vector<int> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const auto& A = raw[static_cast<std::size_t>(a)];
    const auto& B = raw[static_cast<std::size_t>(b)];
    return std::make_tuple(A.element_order, A.size(), A.representative) <
           std::make_tuple(B.element_order, B.size(), B.representative);
  });
  classes_.clear();
  std::vector<int> new_index(raw.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    new_index[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    classes_.push_back(std::move(raw[static_cast<std::size_t>(perm[i])]));
  }
  for (auto& c : class_of_) c = new_index[static_cast<std::size_t>(c)];

  power_map_.assign(classes_.size() * static_cast<std::size_t>(exponent_), 0);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    int acc = 0;
    for (int k = 0; k < exponent_; ++k) {
      power_map_[c * static_cast<std::size_t>(exponent_) + static_cast<std::size_t>(k)] =
          class_of_[static_cast<std::size_t>(acc)];
      acc = mul(acc, classes_[c].representative);
    }
  }
}

int QuotientGroup::power(int a, long k) const {
  long e = ((k % order_[static_cast<std::size_t>(a)]) + order_[static_cast<std::size_t>(a)]) %
           order_[static_cast<std::size_t>(a)];
  int acc = 0;
  for (long i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

int QuotientGroup::power_class(int c, long k) const {
  long e = ((k % exponent_) + exponent_) % exponent_;
  return power_map_[static_cast<std::size_t>(c) * static_cast<std::size_t>(exponent_) + static_cast<std::size_t>(e)];
}

std::vector<int> QuotientGroup::generator_permutation(Gen g) const {
  std::vector<int> perm(static_cast<std::size_t>(n_));
  for (int a = 0; a < n_; ++a) perm[static_cast<std::size_t>(a)] = table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(column(g, false))];
  return perm;
}

int QuotientGroup::element_of_word(const Word& w) const {
  int c = 0;
  for (const auto& s : w.syllables()) {
    int col = column(s.gen, s.power < 0);
    for (int k = 0; k < std::abs(s.power); ++k) c = table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(col)];
  }
  return c;
}

CoverReport verify_cover(const QuotientGroup& g) {
  CoverReport rep;
  const int want[3] = {g.p(), g.q(), g.r()};
  rep.torsion_free = true;
  for (int i = 0; i < 3; ++i) {
    rep.generator_orders[i] = g.element_order(g.generator(static_cast<Gen>(i)));
    if (rep.generator_orders[i] != want[i]) rep.torsion_free = false;
  }
  if (!rep.torsion_free) {
    throw NotASurface("generator orders in the quotient are (" + std::to_string(rep.generator_orders[0]) + "," +
                      std::to_string(rep.generator_orders[1]) + "," + std::to_string(rep.generator_orders[2]) +
                      "), expected (" + std::to_string(want[0]) + "," + std::to_string(want[1]) + "," +
                      std::to_string(want[2]) + ")");
  }
  // chi = -|G| (1 - 1/p - 1/q - 1/r) = 2 - 2 genus.
  long p = g.p(), q = g.q(), r = g.r();
  long num = -static_cast<long>(g.order()) * (p * q * r - q * r - p * r - p * q);
  long den = p * q * r;
  if (num % den != 0 || (num / den) % 2 != 0) throw NotASurface("Euler characteristic is not an even integer");
  rep.genus = static_cast<int>(1 - (num / den) / 2);
  return rep;
}

nlohmann::json group_json(const QuotientGroup& g) {
  nlohmann::json gens;
  for (Gen s : {Gen::x, Gen::y, Gen::z}) gens[std::string(1, gen_letter(s))] = g.generator_permutation(s);
  nlohmann::json classes = nlohmann::json::array();
  for (int c = 0; c < g.class_count(); ++c) {
    const auto& cls = g.classes()[static_cast<std::size_t>(c)];
    classes.push_back({{"index", c},
                       {"size", cls.size()},
                       {"elementOrder", cls.element_order},
                       {"representative", cls.representative},
                       {"representativeWord", g.element_word(cls.representative).str()},
                       {"inverseClass", g.inverse_class(c)}});
  }
  nlohmann::json powers;
  for (int k = 2; k <= g.exponent(); ++k) {
    bool prime = true;
    for (int d = 2; d * d <= k; ++d) prime = prime && (k % d != 0);
    if (!prime || g.exponent() % k != 0) continue;
    std::vector<int> map;
    for (int c = 0; c < g.class_count(); ++c) map.push_back(g.power_class(c, k));
    powers[std::to_string(k)] = map;
  }
  return {{"schema", schema_tag("twistcert.group", 1)},
          {"name", g.name()},
          {"signature", {g.p(), g.q(), g.r()}},
          {"order", g.order()},
          {"exponent", g.exponent()},
          {"generators", std::move(gens)},
          {"classes", std::move(classes)},
          {"powerMaps", std::move(powers)}};
}

}  // namespace twistcert
