#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pbl/poly.hpp"

namespace pbl {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

// Division-free determinant (Berkowitz) over the polynomial ring.
MultiPoly poly_determinant(const PolyMatrix& m, const std::vector<Block>& blocks);

// Sylvester matrix of f and g with respect to variable `var`; f's rows come first.
PolyMatrix sylvester_matrix(const MultiPoly& f, const MultiPoly& g, std::size_t var);

// det Sylvester(f, g). With f monic in var this is the product of g over the roots of f.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var);

struct RootConstraint {
  std::size_t var;
  MultiPoly monic;  // monic in var
};

// Eliminates each constrained variable in turn.
MultiPoly iterated_resultant(const MultiPoly& poly, const std::vector<RootConstraint>& constraints);

}  // namespace pbl
