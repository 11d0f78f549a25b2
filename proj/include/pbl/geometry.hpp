#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "pbl/matrix.hpp"
#include "pbl/poly.hpp"

namespace pbl {

class ProjPoint {
 public:
  explicit ProjPoint(RatVector coords);
  const RatVector& coords() const { return c_; }
  std::size_t size() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  // Scaled so that the first nonzero coordinate is 1.
  ProjPoint normalized() const;
  // Equality up to a nonzero scalar.
  friend bool operator==(const ProjPoint& a, const ProjPoint& b);

 private:
  RatVector c_;
};

// Single variable block "x" of arity ambient+1.
std::vector<Block> x_block(std::size_t nvars);

struct Hypersurface {
  std::size_t ambient = 0;  // P^ambient
  MultiPoly f;
};

Hypersurface make_hypersurface(std::size_t ambient, MultiPoly f);
bool on_hypersurface(const Hypersurface& h, const ProjPoint& p);

struct LinearSubspace {
  std::size_t ambient = 0;
  RatMatrix equations;  // rows are linear forms, full row rank
};

LinearSubspace make_linear_subspace(std::size_t ambient, RatMatrix equations);
// {x_0 = x_2 = ... = x_2n = 0} in P^{2n+1+extra}.
LinearSubspace even_coordinate_subspace(int n, std::size_t extra = 0);
bool subspace_contains(const LinearSubspace& l, const ProjPoint& p);

struct DeterminantalLocus {
  int t = 0;
  std::size_t ambient = 0;                // t + 1
  std::size_t expected_codim = 2;
  std::array<MultiPoly, 3> quadrics;
  bool contains(const ProjPoint& p) const;
  // Jacobian of the quadrics has rank expected_codim at p (p must lie on the locus).
  bool smooth_at(const ProjPoint& p) const;
};

Hypersurface vnd_hypersurface(int n, int d);
Hypersurface cone_over(const Hypersurface& h, std::size_t extra);
bool smooth_at(const Hypersurface& h, const ProjPoint& p);
DeterminantalLocus determinantal_locus(int t);
bool hyperplane_contains(const RatVector& form, const LinearSubspace& sub);

// Integer points of {-radius..radius}^nvars, one representative per projective point:
// first nonzero coordinate positive and coordinate gcd 1. Lexicographic order.
void for_each_grid_point(std::size_t nvars, long radius, const std::function<void(const ProjPoint&)>& fn);
std::vector<ProjPoint> grid_points(std::size_t nvars, long radius);

// Point of the locus from parameters; the parametrizations cover a dense subset.
ProjPoint locus_sample(int t, const std::vector<Rational>& params);
std::size_t locus_parameter_count(int t);

}  // namespace pbl
