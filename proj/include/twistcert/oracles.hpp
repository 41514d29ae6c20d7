#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "twistcert/enclosure.hpp"
#include "twistcert/triangle.hpp"

// Brute-force cross-checks that share no code with the production paths
// beyond matrix evaluation of words.
namespace twistcert::oracle {

struct WordOracleOptions {
  int max_word_length = 18;  // BFS radius in the letters x X y Y z Z
  int conjugator_length = 8;  // ball used to merge components and test roots
  std::size_t max_elements = 3'000'000;
};

struct OracleClass {
  std::string word;  // shortest representative found
  double length = 0;
  Enclosure certified_length;  // re-evaluated from the word at working precision
  std::size_t members = 0;
  bool primitive = true;
};

struct WordOracleResult {
  std::vector<OracleClass> classes;  // primitive classes only, sorted by length
  std::size_t elements = 0;
  std::size_t candidates = 0;
};

// Enumerates the ball of words in double precision, keeps hyperbolic elements
// with translation length <= max_length, and splits them into conjugacy
// classes by conjugating with generators and with a small ball.
WordOracleResult word_oracle_classes(const TrianglePresentation& t, double max_length,
                                     const WordOracleOptions& options = {});

// Piecewise polynomial with rational breakpoints.
struct Piece {
  mpq_class a, b;
  std::vector<mpq_class> coeffs;  // in x, constant first
};
using PiecewisePoly = std::vector<Piece>;

PiecewisePoly box(const mpq_class& half_width, const mpq_class& height);
PiecewisePoly convolve(const PiecewisePoly& f, const PiecewisePoly& g);
// Value at x; at a shared breakpoint both pieces must agree, the first wins.
mpq_class evaluate(const PiecewisePoly& f, const mpq_class& x);

// ((1/2d) 1_[-d,d])^{*4} by repeated exact convolution.
PiecewisePoly test_function_by_convolution(const mpq_class& d);

}  // namespace twistcert::oracle
