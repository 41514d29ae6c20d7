#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "twistcert/triangle.hpp"

namespace twistcert {

struct EllipticClass {
  Gen generator;
  int power = 1;            // 1 <= power < order
  int order = 1;            // order of the generator
  mpq_class angle_over_pi;  // half rotation angle / pi = power / order
  int primitive_order = 1;  // order of the primitive elliptic element (= order)
  Word word;

  Enclosure half_angle() const { return Enclosure::pi() * Enclosure::rational(angle_over_pi); }
};

std::vector<EllipticClass> enumerate_elliptic(const TrianglePresentation& t);

// max{2 asinh(sinh(L/2) cosh D), 2 acosh(cosh(L/4) cosh D)}.
Enclosure capture_radius(const Enclosure& max_length, const Enclosure& axis_reach);
// Elements with translation length <= L whose axis passes within D of the
// basepoint move it by at most this much.
Enclosure displacement_bound(const Enclosure& max_length, const Enclosure& axis_reach);
// 2 acosh(cosh(l/4) cosh D): radius of the conjugator ball.
Enclosure conjugator_radius(const Enclosure& length, const Enclosure& axis_reach);

// Buckets points of the upper half-plane by rounded (x / y, log y) so that
// two enclosures of the same exact point always land in neighbouring cells.
class PointIndex {
 public:
  explicit PointIndex(double cell = 1e-7) : cell_(cell) {}
  void insert(const HPoint& p, std::size_t id);
  // Ids stored in the 3x3 block of cells around p.
  std::vector<std::size_t> near(const HPoint& p) const;
  std::size_t size() const { return count_; }

 private:
  using Key = std::pair<std::int64_t, std::int64_t>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::int64_t>()(k.first * 1000003 ^ k.second);
    }
  };
  Key key(const HPoint& p) const;
  double cell_;
  std::size_t count_ = 0;
  std::unordered_map<Key, std::vector<std::size_t>, KeyHash> cells_;
};

struct ConjugacyClassGeo {
  MoebiusElement representative;
  Enclosure length;
  Enclosure trace;  // |trace|
  bool primitive = true;
  bool borderline = false;  // length enclosure straddles the cutoff
  std::size_t members = 0;  // candidates found in the class
};

struct ClassEnumeration {
  std::vector<ConjugacyClassGeo> classes;
  Enclosure cutoff;          // certified: every primitive class with length <= cutoff is listed
  Enclosure capture_radius;  // R
  Enclosure axis_reach;      // D
  std::size_t elements = 0;
  std::size_t candidates = 0;
  std::size_t non_primitive = 0;
  int generations = 0;
  Enclosure inner_radius;
};

struct EnumerationOptions {
  CoverageOptions coverage;
  int threads = 1;
  double probe_radius = 3.0;
};

ClassEnumeration enumerate_primitive_hyperbolic(const TrianglePresentation& t, const Enclosure& max_length,
                                                const EnumerationOptions& options = {});

// Same pipeline on an already covered region; `state` must cover the capture
// radius with margin.
ClassEnumeration classes_from_coverage(const TrianglePresentation& t, const CoverageState& state,
                                       const Enclosure& max_length, int threads = 1);

nlohmann::json classes_json(const TrianglePresentation& t, const ClassEnumeration& e);
ClassEnumeration classes_from_json(const nlohmann::json& doc, const TrianglePresentation& t);

}  // namespace twistcert
