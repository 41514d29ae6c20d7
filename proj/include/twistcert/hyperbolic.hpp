#pragma once

#include <array>
#include <functional>
#include <optional>

#include "twistcert/enclosure.hpp"
#include "twistcert/word.hpp"

namespace twistcert {

// Point x + iy of the upper half-plane.
struct HPoint {
  Enclosure x;
  Enclosure y;

  HPoint() : x(0), y(1) {}
  HPoint(Enclosure re, Enclosure im);
  static HPoint i() { return {}; }
  std::string str(int digits = 12) const;
};

// Real 2x2 matrix [[a, b], [c, d]] with enclosure entries.
struct Mat2 {
  Enclosure a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {}; }
  Enclosure trace() const { return a + d; }
  Enclosure det() const { return a * d - b * c; }
  // Inverse of a determinant-one matrix.
  Mat2 inverse() const;
  friend Mat2 operator*(const Mat2& m, const Mat2& n);
  Mat2 operator-() const;
  Mat2 power(int n) const;
  // True if every entry of *this or of its negative encloses the identity.
  bool encloses_identity() const;
};

// Elliptic rotation about `center` by `angle` (counterclockwise).
Mat2 rotation(const HPoint& center, const Enclosure& angle);

// Group element carried as a word together with its matrix, up to sign.
struct MoebiusElement {
  Word word;
  Mat2 matrix;

  MoebiusElement inverse() const { return {word.inverse(), matrix.inverse()}; }
  friend MoebiusElement operator*(const MoebiusElement& g, const MoebiusElement& h) {
    return {g.word * h.word, g.matrix * h.matrix};
  }
  MoebiusElement power(int n) const { return {word.power(n), matrix.power(n)}; }
};

HPoint apply(const Mat2& g, const HPoint& p);
inline HPoint apply(const MoebiusElement& g, const HPoint& p) { return apply(g.matrix, p); }

Enclosure distance(const HPoint& p, const HPoint& q);

enum class IsometryKind { elliptic, hyperbolic, undecided };

struct IsometryClass {
  IsometryKind kind = IsometryKind::undecided;
  Enclosure trace;  // |trace|
  std::optional<Enclosure> length;      // hyperbolic: translation length
  std::optional<Enclosure> half_angle;  // elliptic: half the rotation angle in (0, pi)
};

IsometryClass classify(const Mat2& g);
inline IsometryClass classify(const MoebiusElement& g) { return classify(g.matrix); }

// Distance from p to the axis of hyperbolic g with translation length `length`.
Enclosure point_axis_distance(const Mat2& g, const Enclosure& length, const HPoint& p);
Enclosure point_axis_distance(const MoebiusElement& g, const HPoint& p);

// Two points with discrete orbits and certified lower bounds on the distance
// from each point to any other point of its orbit.
struct WordProblemProbe {
  HPoint x0;
  HPoint x1;
  Enclosure delta0;
  Enclosure delta1;
  // Re-evaluates a word at the calling thread's working precision; used for
  // the single automatic retry at doubled precision.
  std::function<Mat2(const Word&)> evaluate;
};

enum class Equality { equal, distinct };

// Decides g == h in the group. Throws UndecidableAtPrecision if the decision
// is still open after a retry at doubled precision.
Equality equal_in_group(const MoebiusElement& g, const MoebiusElement& h, const WordProblemProbe& probe);

// Single-precision attempt; nullopt when the enclosures straddle a threshold.
std::optional<Equality> try_equal(const Mat2& g, const Mat2& h, const WordProblemProbe& probe);

}  // namespace twistcert
