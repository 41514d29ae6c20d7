#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace twistcert {

enum class Gen : std::uint8_t { x = 0, y = 1, z = 2 };

struct Syllable {
  Gen gen;
  int power;  // nonzero
  bool operator==(const Syllable&) const = default;
};

// Freely reduced word over {x, y, z}^(+-1), stored as generator powers.
// Powers are not reduced modulo generator orders unless normalized() is used.
class Word {
 public:
  Word() = default;
  static Word generator(Gen g, int power = 1);
  // Accepts letters x y z (X Y Z for inverses), `^n` / `^-n` exponents on
  // letters and parenthesised groups, and "1" / "id" / "" for the identity.
  static Word parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return s_; }
  bool is_identity() const { return s_.empty(); }
  // Number of letters after expanding powers.
  int length() const;

  Word inverse() const;
  Word power(int n) const;
  // Reduces every power into (-order/2, order/2] with the given generator
  // orders, merging syllables as needed.
  Word normalized(int p, int q, int r) const;

  Word& operator*=(const Word& o);
  friend Word operator*(Word a, const Word& b) { return a *= b; }
  bool operator==(const Word&) const = default;
  bool operator<(const Word& o) const;

  std::string str() const;  // e.g. "z^3xz^-2", "1" for the identity

 private:
  void push(Gen g, int power);
  std::vector<Syllable> s_;
};

char gen_letter(Gen g);

}  // namespace twistcert
