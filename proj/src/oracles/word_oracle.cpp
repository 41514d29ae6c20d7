#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>

#include "twistcert/error.hpp"
#include "twistcert/oracles.hpp"

namespace twistcert::oracle {

namespace {

// Plain double matrices; the oracle deliberately avoids the enclosure code.
using M = std::array<double, 4>;

M mul(const M& a, const M& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

M inv(const M& a) { return {a[3], -a[1], -a[2], a[0]}; }

M mid(const Mat2& m) { return {m.a.mid_double(), m.b.mid_double(), m.c.mid_double(), m.d.mid_double()}; }

// A generic point has trivial stabiliser, so its image identifies the element.
constexpr double kPx = 0.1372, kPy = 1.2913;
constexpr double kCell = 1e-6;

using Key = std::pair<std::int64_t, std::int64_t>;
struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept { return std::hash<std::int64_t>()(k.first * 1000003 ^ k.second); }
};

std::pair<double, double> image(const M& m) {
  // (a z + b) / (c z + d) for z = kPx + i kPy.
  double nr = m[0] * kPx + m[1], ni = m[0] * kPy, dr = m[2] * kPx + m[3], di = m[2] * kPy;
  double den = dr * dr + di * di;
  return {(nr * dr + ni * di) / den, (ni * dr - nr * di) / den};
}

class ElementIndex {
 public:
  // Returns the existing id of the element or -1.
  long find(const M& m) const {
    auto [x, y] = image(m);
    Key k = key(x, y);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = cells_.find({k.first + dx, k.second + dy});
        if (it == cells_.end()) continue;
        for (const auto& [id, px, py] : it->second) {
          if (std::abs(px - x) < 1e-8 * py && std::abs(py - y) < 1e-8 * py) return id;
        }
      }
    }
    return -1;
  }
  void insert(const M& m, long id) {
    auto [x, y] = image(m);
    cells_[key(x, y)].push_back({id, x, y});
  }

 private:
  static Key key(double x, double y) {
    return {static_cast<std::int64_t>(std::floor(x / y / kCell)), static_cast<std::int64_t>(std::floor(std::log(y) / kCell))};
  }
  struct Entry {
    long id;
    double x, y;
  };
  std::unordered_map<Key, std::vector<Entry>, KeyHash> cells_;
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

double translation_length(const M& m) {
  double tr = std::abs(m[0] + m[3]);
  return tr > 2 ? 2 * std::acosh(tr / 2) : 0;
}

}  // namespace

WordOracleResult word_oracle_classes(const TrianglePresentation& t, double max_length,
                                     const WordOracleOptions& options) {
  struct Letter {
    char c;
    M m;
  };
  std::vector<Letter> letters;
  const Gen gens[3] = {Gen::x, Gen::y, Gen::z};
  const char lower[3] = {'x', 'y', 'z'}, upper[3] = {'X', 'Y', 'Z'};
  const int orders[3] = {t.p, t.q, t.r};
  for (int g = 0; g < 3; ++g) {
    M m = mid(t.generator_matrix(gens[g]));
    letters.push_back({lower[g], m});
    if (orders[g] > 2) letters.push_back({upper[g], inv(m)});
  }

  std::vector<M> mats{{1, 0, 0, 1}};
  std::vector<std::string> words{""};
  std::vector<int> word_length{0};
  ElementIndex index;
  index.insert(mats[0], 0);
  std::size_t layer_begin = 0;
  for (int len = 1; len <= options.max_word_length; ++len) {
    std::size_t layer_end = mats.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& l : letters) {
        M m = mul(mats[i], l.m);
        if (index.find(m) >= 0) continue;
        long id = static_cast<long>(mats.size());
        mats.push_back(m);
        words.push_back(words[i] + l.c);
        word_length.push_back(len);
        index.insert(m, id);
        if (mats.size() > options.max_elements) throw BudgetExhausted("word oracle ball exceeds element budget");
      }
    }
    layer_begin = layer_end;
  }

  WordOracleResult out;
  out.elements = mats.size();
  const double slack = 1e-9;
  std::vector<long> cand;  // element ids of hyperbolic elements with length <= L
  std::unordered_map<long, std::size_t> cand_pos;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    double l = translation_length(mats[i]);
    if (l > 1e-6 && l <= max_length + slack) {
      cand_pos[static_cast<long>(i)] = cand.size();
      cand.push_back(static_cast<long>(i));
    }
  }
  out.candidates = cand.size();

  UnionFind uf(cand.size());
  auto link = [&](std::size_t a, const M& conj) {
    long id = index.find(conj);
    if (id < 0) return;
    auto it = cand_pos.find(id);
    if (it != cand_pos.end()) uf.unite(a, it->second);
  };
  for (std::size_t a = 0; a < cand.size(); ++a) {
    const M& g = mats[static_cast<std::size_t>(cand[a])];
    for (const auto& l : letters) link(a, mul(mul(l.m, g), inv(l.m)));
  }
  std::vector<std::size_t> small_ball;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (word_length[i] <= options.conjugator_length) small_ball.push_back(i);
  }
  auto representatives = [&] {
    std::map<std::size_t, std::size_t> rep;  // root -> shortest member
    for (std::size_t a = 0; a < cand.size(); ++a) {
      std::size_t root = uf.find(a);
      auto it = rep.find(root);
      if (it == rep.end() || words[static_cast<std::size_t>(cand[a])].size() <
                                 words[static_cast<std::size_t>(cand[it->second])].size()) {
        rep[root] = a;
      }
    }
    return rep;
  };
  // Components can split when the conjugating path leaves the ball.
  for (const auto& [root, a] : representatives()) {
    const M& g = mats[static_cast<std::size_t>(cand[a])];
    for (std::size_t h : small_ball) link(a, mul(mul(mats[h], g), inv(mats[h])));
  }

  auto reps = representatives();
  std::map<std::size_t, bool> primitive;
  std::map<std::size_t, std::size_t> members;
  for (std::size_t a = 0; a < cand.size(); ++a) ++members[uf.find(a)];
  for (const auto& [root, _] : reps) primitive[root] = true;
  for (const auto& [root, a] : reps) {
    const M& g = mats[static_cast<std::size_t>(cand[a])];
    double l = translation_length(g);
    M pw = g;
    for (int n = 2; n * l <= max_length + slack; ++n) {
      pw = mul(pw, g);
      for (std::size_t h : small_ball) {
        long id = index.find(mul(mul(mats[h], pw), inv(mats[h])));
        auto it = id < 0 ? cand_pos.end() : cand_pos.find(id);
        if (it != cand_pos.end()) primitive[uf.find(it->second)] = false;
      }
    }
  }

  for (const auto& [root, a] : reps) {
    if (!primitive[root]) continue;
    OracleClass c;
    const auto id = static_cast<std::size_t>(cand[a]);
    c.word = words[id].empty() ? "1" : words[id];
    c.length = translation_length(mats[id]);
    c.members = members[root];
    IsometryClass cls = classify(t.evaluate(Word::parse(c.word)));
    if (cls.kind != IsometryKind::hyperbolic) throw AlgorithmFailure("oracle representative " + c.word + " is not hyperbolic");
    c.certified_length = *cls.length;
    out.classes.push_back(std::move(c));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const OracleClass& a, const OracleClass& b) { return a.length < b.length; });
  return out;
}

}  // namespace twistcert::oracle
