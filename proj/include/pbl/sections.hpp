#pragma once

#include <string>
#include <vector>

#include "pbl/bundle.hpp"
#include "pbl/cohomology.hpp"
#include "pbl/poly.hpp"

namespace pbl {

// H^0(P(E), a xi - b H) = H^0(P^n, Sym^a E (-b)).
//
// Split bundles use the closed form. Otherwise sections are glued from the charts
// alpha_i != 0: tuples (s_0..s_n) of degree-(0) elements of Sym^a W modulo the relations
// with alpha_j^b s_i = alpha_i^b s_j, divided by the alpha-torsion found at power max(b,1).
// This is exact when the presented module is saturated in the bidegrees used, which is
// assumed (exact = false) and checked empirically.
struct SectionCount {
  Count dimension = 0;
  bool exact = false;
};

struct SectionSpace {
  int a = 0;
  int b = 0;
  Count dimension = 0;
  bool exact = false;
  std::string method;  // "split-closed-form" or "glued-charts"
  // Each element is a tuple: one polynomial for split bundles and b = 0, otherwise s_i for
  // the chart alpha_i != 0 (the section is s_i / alpha_i^b there).
  // Polynomials live in blocks "x" (one variable per summand of W) and "a".
  std::vector<std::vector<MultiPoly>> basis;
};

std::vector<Block> section_blocks(const BundlePresentation& bp);

SectionCount section_dimension(const BundlePresentation& bp, int a, int b);
SectionSpace section_space(const BundlePresentation& bp, int a, int b);
// Forces the glued computation even for split bundles (used to cross-check the closed form).
SectionCount glued_section_dimension(const BundlePresentation& bp, int a, int b);

struct SlopeResult {
  Rational c;
  std::vector<int> last_positive_b;  // index a-1: largest b with a nonzero section
};

// Max over 1 <= a <= a_max of max{b/a : h^0 > 0}. b is searched up to a*c1, which bounds
// any section of a quotient of nonnegative line bundles (restrict to a general line).
SlopeResult slope_trace(const BundlePresentation& bp, int a_max);
Rational cone_slope(const BundlePresentation& bp, int a_max);

}  // namespace pbl
