#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "twistcert/hyperbolic.hpp"

namespace twistcert {

// Rotations x, y, z by 2pi/p, 2pi/q, 2pi/r about the vertices A, B, C of a
// (pi/p, pi/q, pi/r) triangle listed counterclockwise, so that xyz = 1.
// C = i, A lies straight above C, and B lies to the left of the line CA.
struct TrianglePresentation {
  int p = 0, q = 0, r = 0;
  MoebiusElement x, y, z;
  HPoint A, B, C;
  HPoint B_mirror;                     // reflection of B across the line AC
  std::pair<HPoint, HPoint> base_edge;  // edge of F opposite C, F on its left
  Enclosure area;                       // 2 pi (1 - 1/p - 1/q - 1/r)
  Enclosure side_CA, side_CB, side_AB;

  Mat2 generator_matrix(Gen g) const;
  Mat2 evaluate(const Word& w) const;
  MoebiusElement element(const Word& w) const { return {w, evaluate(w)}; }
  // Farthest point of F from C; F is the triangle C, B, B_mirror.
  Enclosure capture_distance() const { return side_CB; }
  // Upper bound for the diameter of the polygon P0 = union of z^k(F).
  Enclosure polygon_diameter() const { return Enclosure(2) * side_CB; }
};

TrianglePresentation build_presentation(int p, int q, int r);

enum class Label : std::uint8_t { root, L, M, R, I };
char label_char(Label l);

struct LabeledElement {
  MoebiusElement element;
  Label label = Label::M;
  int generation = 1;
  int parent = -1;  // index into the previous generation, -1 in generation 1
  int j = 0;        // child index: element = parent * x * z^j
};

using Generation = std::vector<LabeledElement>;

Generation first_generation(const TrianglePresentation& t);
Generation next_generation(const Generation& current, const TrianglePresentation& t);

// Labels of the children of a parent with label `parent`, indexed by j.
std::vector<Label> child_labels(Label parent, int r);

// Distance from c to the geodesic segment [p, q] by the altitude rule.
Enclosure segment_distance(const HPoint& c, const HPoint& p, const HPoint& q);

// Distance from C to the nearest boundary edge g(e0) of the generation.
Enclosure boundary_distance(const Generation& g, const TrianglePresentation& t);

struct CoverageState {
  std::vector<Generation> generations;
  Enclosure inner_radius;
  std::vector<Enclosure> radius_history;  // inner radius after each generation

  std::size_t element_count() const;
};

struct CoverageOptions {
  int max_generations = 40;
  std::size_t max_elements = 2'000'000;
  // Require inner radius >= target + polygon diameter. Targets <= 0 need no
  // margin because the only polygon meeting {C} is P0 itself.
  bool diameter_margin = true;
};

CoverageState start_coverage(const TrianglePresentation& t);
// Extends `state` in place until its inner radius clears the target.
void extend_coverage(CoverageState& state, const TrianglePresentation& t, const Enclosure& target,
                     const CoverageOptions& options = {});
CoverageState extend_until_covered(const TrianglePresentation& t, const Enclosure& target,
                                   const CoverageOptions& options = {});

// Probe with x0 = C, x1 = A. Orbit separations are minima over generated
// elements moving C by at most `radius`, which must already be covered.
WordProblemProbe make_probe(const TrianglePresentation& t, const CoverageState& state, double radius = 3.0);

// Label-only automaton for r >= 6 (including the euclidean r = 6 case).
struct SymbolicGeneration {
  std::vector<Label> labels;
  std::vector<int> parents;
};
std::vector<SymbolicGeneration> symbolic_generations(int r, int count);

nlohmann::json tiling_json(const TrianglePresentation& t, const CoverageState& state);

}  // namespace twistcert
