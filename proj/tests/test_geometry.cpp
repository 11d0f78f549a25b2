#include "doctest.h"

#include "pbl/error.hpp"
#include "pbl/geometry.hpp"
#include "pbl/random.hpp"

using namespace pbl;

namespace {

ProjPoint pt(std::initializer_list<long> c) {
  RatVector v;
  for (long x : c) v.push_back(Rational(x));
  return ProjPoint(v);
}

}  // namespace

TEST_CASE("projective points compare up to scale") {
  CHECK(pt({2, 4, 0}) == pt({-1, -2, 0}));
  CHECK_FALSE(pt({1, 0}) == pt({0, 1}));
  CHECK(pt({0, 3, 6}).normalized().coords() == RatVector{Rational(0), Rational(1), Rational(2)});
  CHECK_THROWS(pt({0, 0}));
}

TEST_CASE("the hypersurfaces V(n,d)") {
  const Hypersurface q = vnd_hypersurface(2, 2);
  CHECK(q.ambient == 5);
  CHECK(on_hypersurface(q, pt({1, -1, 1, 1, 0, 0})));
  CHECK_FALSE(on_hypersurface(q, pt({1, 1, 0, 0, 0, 0})));
  const Hypersurface c = vnd_hypersurface(2, 3);
  // x0^2 x1 + x2^2 x3 + x4^2 x5
  CHECK(on_hypersurface(c, pt({1, -1, 1, 1, 0, 7})));
  CHECK_FALSE(on_hypersurface(c, pt({1, 1, 0, 0, 0, 0})));
  CHECK_THROWS_AS(vnd_hypersurface(1, 2), Error);
}

TEST_CASE("cones") {
  const Hypersurface q = vnd_hypersurface(2, 2);
  CHECK(cone_over(q, 0).f == q.f);
  const Hypersurface cq = cone_over(q, 1);
  CHECK(cq.ambient == 6);
  CHECK(on_hypersurface(cq, pt({0, 0, 0, 0, 0, 0, 1})));
  CHECK_FALSE(smooth_at(cq, pt({0, 0, 0, 0, 0, 0, 1})));
  CHECK(on_hypersurface(cq, pt({1, -1, 1, 1, 0, 0, 5})));
}

TEST_CASE("smoothness on V") {
  CHECK(smooth_at(vnd_hypersurface(2, 2), pt({1, 0, 0, 0, 0, 0})));
  CHECK_FALSE(smooth_at(vnd_hypersurface(2, 3), pt({0, 1, 0, 0, 0, 0})));
  CHECK(smooth_at(vnd_hypersurface(2, 3), pt({1, 0, 0, 0, 0, 0})));
  try {
    smooth_at(vnd_hypersurface(2, 2), pt({1, 1, 0, 0, 0, 0}));
    FAIL("expected NotOnHypersurface");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOnHypersurface);
  }
}

TEST_CASE("V(2,2) is smooth at every scanned point") {
  const Hypersurface q = vnd_hypersurface(2, 2);
  long on = 0;
  for_each_grid_point(6, 2, [&](const ProjPoint& p) {
    if (!on_hypersurface(q, p)) return;
    ++on;
    CHECK(smooth_at(q, p));
  });
  CHECK(on > 0);
}

TEST_CASE("singular points of V(n,3) lie in L0 and L0 is singular") {
  for (int n : {2, 3}) {
    const Hypersurface v = vnd_hypersurface(n, 3);
    const LinearSubspace l0 = even_coordinate_subspace(n);
    for_each_grid_point(static_cast<std::size_t>(2 * n + 2), n == 2 ? 2 : 1, [&](const ProjPoint& p) {
      if (!on_hypersurface(v, p)) return;
      CHECK(smooth_at(v, p) == !subspace_contains(l0, p));
    });
  }
}

TEST_CASE("determinantal loci examples") {
  CHECK(determinantal_locus(2).contains(pt({1, 2, 4, 8})));
  CHECK_FALSE(determinantal_locus(2).contains(pt({1, 0, 0, 1})));
  CHECK(determinantal_locus(3).contains(pt({1, 0, 0, 0, 0})));
  // Segre image of ([1:1],[1:1:1])
  CHECK(determinantal_locus(4).contains(pt({1, 1, 1, 1, 1, 1})));
  CHECK_THROWS(determinantal_locus(5));
}

TEST_CASE("the twisted cubic parametrization satisfies the quadrics identically") {
  const DeterminantalLocus loc = determinantal_locus(2);
  const std::vector<Block> su{{"s", 2}};
  const MultiPoly s = MultiPoly::variable(su, 0, 0), u = MultiPoly::variable(su, 0, 1);
  const std::vector<MultiPoly> images{s * s * s, s * s * u, s * u * u, u * u * u};
  for (const auto& q : loc.quadrics) CHECK(q.compose(images).is_zero());
}

TEST_CASE("determinantal loci are smooth at sampled points") {
  Rng rng(31);
  for (int t = 2; t <= 4; ++t) {
    const DeterminantalLocus loc = determinantal_locus(t);
    int tested = 0;
    for (int k = 0; k < 50; ++k) {
      std::vector<Rational> params;
      for (std::size_t i = 0; i < locus_parameter_count(t); ++i) params.push_back(Rational(rng.uniform(1, 6)));
      const ProjPoint p = locus_sample(t, params);
      REQUIRE(loc.contains(p));
      CHECK(loc.smooth_at(p));
      ++tested;
    }
    CHECK(tested == 50);
  }
}

TEST_CASE("hyperplanes and linear subspaces") {
  const LinearSubspace l0 = even_coordinate_subspace(2);
  RatVector x0(6), x1(6);
  x0[0] = Rational(1);
  x1[1] = Rational(1);
  CHECK(hyperplane_contains(x0, l0));
  CHECK_FALSE(hyperplane_contains(x1, l0));
  const LinearSubspace line = make_linear_subspace(2, RatMatrix{{0, 1, 0}, {0, 0, 1}});
  CHECK_FALSE(hyperplane_contains(RatVector{Rational(1), Rational(1), Rational(1)}, line));
  CHECK(subspace_contains(line, pt({3, 0, 0})));
}

TEST_CASE("grid points are one per projective point") {
  const auto pts = grid_points(2, 1);
  CHECK(pts.size() == 4);
  const auto big = grid_points(3, 2);
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t j = i + 1; j < big.size(); ++j) CHECK_FALSE(big[i] == big[j]);
}
