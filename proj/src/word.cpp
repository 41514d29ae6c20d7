#include "twistcert/word.hpp"

#include <cctype>
#include <cstdlib>

#include "twistcert/error.hpp"

namespace twistcert {

char gen_letter(Gen g) { return "xyz"[static_cast<int>(g)]; }

namespace {

int reduce_power(int power, int order) {
  if (order <= 0) return power;
  int m = ((power % order) + order) % order;
  if (2 * m > order) m -= order;
  return m;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : t_(text) {}

  Word parse_all() {
    Word w = parse_sequence();
    skip_space();
    if (i_ != t_.size()) fail("unexpected character");
    return w;
  }

 private:
  Word parse_sequence() {
    Word w;
    for (;;) {
      skip_space();
      if (i_ >= t_.size() || t_[i_] == ')') return w;
      if (t_[i_] == '*' || t_[i_] == '.') {
        ++i_;
        continue;
      }
      Word atom = parse_atom();
      skip_space();
      if (i_ < t_.size() && t_[i_] == '^') {
        ++i_;
        atom = atom.power(parse_int());
      }
      w *= atom;
    }
  }

  Word parse_atom() {
    char c = t_[i_];
    if (c == '(') {
      ++i_;
      Word inner = parse_sequence();
      if (i_ >= t_.size() || t_[i_] != ')') fail("missing ')'");
      ++i_;
      return inner;
    }
    ++i_;
    switch (c) {
      case 'x': return Word::generator(Gen::x, 1);
      case 'y': return Word::generator(Gen::y, 1);
      case 'z': return Word::generator(Gen::z, 1);
      case 'X': return Word::generator(Gen::x, -1);
      case 'Y': return Word::generator(Gen::y, -1);
      case 'Z': return Word::generator(Gen::z, -1);
      default: --i_; fail("unknown letter");
    }
    return {};
  }

  int parse_int() {
    skip_space();
    bool braces = i_ < t_.size() && t_[i_] == '{';
    if (braces) ++i_;
    size_t start = i_;
    if (i_ < t_.size() && (t_[i_] == '-' || t_[i_] == '+')) ++i_;
    while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
    std::string digits(t_.substr(start, i_ - start));
    if (digits.empty() || digits == "-" || digits == "+") fail("missing exponent");
    if (braces) {
      if (i_ >= t_.size() || t_[i_] != '}') fail("missing '}'");
      ++i_;
    }
    long v = std::strtol(digits.c_str(), nullptr, 10);
    if (v > 100000 || v < -100000) fail("exponent out of range");
    return static_cast<int>(v);
  }

  void skip_space() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }

  [[noreturn]] void fail(const char* what) const {
    throw InputError(std::string("cannot parse word '") + std::string(t_) + "' at offset " + std::to_string(i_) +
                     ": " + what);
  }

  std::string_view t_;
  size_t i_ = 0;
};

}  // namespace

Word Word::generator(Gen g, int power) {
  Word w;
  w.push(g, power);
  return w;
}

Word Word::parse(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed.empty() || trimmed == "1" || trimmed == "id" || trimmed == "e") return {};
  return Parser(trimmed).parse_all();
}

int Word::length() const {
  int n = 0;
  for (const auto& s : s_) n += std::abs(s.power);
  return n;
}

void Word::push(Gen g, int power) {
  if (power == 0) return;
  if (!s_.empty() && s_.back().gen == g) {
    s_.back().power += power;
    if (s_.back().power == 0) s_.pop_back();
    return;
  }
  s_.push_back({g, power});
}

Word Word::inverse() const {
  Word w;
  for (auto it = s_.rbegin(); it != s_.rend(); ++it) w.push(it->gen, -it->power);
  return w;
}

Word Word::power(int n) const {
  Word base = n < 0 ? inverse() : *this;
  Word w;
  for (int i = 0; i < std::abs(n); ++i) w *= base;
  return w;
}

Word Word::normalized(int p, int q, int r) const {
  const int orders[3] = {p, q, r};
  Word w;
  for (const auto& s : s_) {
    int order = orders[static_cast<int>(s.gen)];
    int pw = reduce_power(s.power, order);
    if (pw == 0) continue;
    w.push(s.gen, pw);
    while (!w.s_.empty()) {
      Syllable& last = w.s_.back();
      int reduced = reduce_power(last.power, orders[static_cast<int>(last.gen)]);
      if (reduced == 0) {
        w.s_.pop_back();
        continue;
      }
      last.power = reduced;
      break;
    }
  }
  return w;
}

Word& Word::operator*=(const Word& o) {
  for (const auto& s : o.s_) push(s.gen, s.power);
  return *this;
}

bool Word::operator<(const Word& o) const {
  int a = length(), b = o.length();
  if (a != b) return a < b;
  return str() < o.str();
}

std::string Word::str() const {
  if (s_.empty()) return "1";
  std::string out;
  for (const auto& s : s_) {
    out += gen_letter(s.gen);
    if (s.power != 1) out += "^" + std::to_string(s.power);
  }
  return out;
}

}  // namespace twistcert
