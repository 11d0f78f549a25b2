#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pbl/bundle.hpp"
#include "pbl/geometry.hpp"

namespace pbl {

// Blocks: "a" (alpha, arity n+1) then "x" (arity N+1).
std::vector<Block> incidence_blocks(int n, std::size_t target_size);

struct IncidenceModel {
  std::size_t alpha_arity = 0;
  std::size_t x_arity = 0;
  // One bihomogeneous constraint per relation, written in target coordinates.
  std::vector<MultiPoly> relation_constraints;
  // 2x2 minors tying each positive-twist block to alpha.
  std::vector<MultiPoly> proportionality_minors;
  // x-indices of each O(1) summand (length n+1), ordered like alpha.
  std::vector<std::vector<std::size_t>> proportional_blocks;
  std::vector<MultiPoly> constraints() const;
};

IncidenceModel incidence_model(const BundlePresentation& bp);

enum class FiberKind { Empty, Point, LinearPk, HypersurfaceInLine, HypersurfaceInPn };

struct FiberClass {
  FiberKind kind = FiberKind::Empty;
  int dimension = -1;
  int ambient = 0;  // k for LinearPk / HypersurfaceInPn (the fiber lies in P^k)
  std::string str() const;
  friend bool operator==(const FiberClass&, const FiberClass&) = default;
};

FiberClass fiber_over(const BundlePresentation& bp, const ProjPoint& x);

// Registered image equations (all must vanish); throws NoImageEquation.
std::vector<MultiPoly> image_equations(const BundlePresentation& bp);
bool image_membership(const BundlePresentation& bp, const ProjPoint& x);

// Does sum_i x_{2i} y_{2i+1} stay nonzero for every choice of roots y_{2i+1}^{d-1} = x_{2i+1}?
bool nowhere_vanishing_section(int d, int n, const RatVector& x);
// The eliminated value itself (product over root choices).
Rational nowhere_vanishing_resultant(int d, int n, const RatVector& x);

}  // namespace pbl
