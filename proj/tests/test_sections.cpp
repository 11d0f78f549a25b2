#include "doctest.h"

#include "pbl/bundle.hpp"
#include "pbl/cohomology.hpp"
#include "pbl/error.hpp"
#include "pbl/sections.hpp"

using namespace pbl;

TEST_CASE("split bundles: sections of O(2)+O+O") {
  const BundlePresentation t1 = make_type1(2, 3);
  CHECK(section_dimension(t1, 1, 2).dimension == 1);
  CHECK(section_dimension(t1, 1, 3).dimension == 0);
  CHECK(section_dimension(t1, 1, 2).exact);
  // Sym^2 = O(4) + 2 O(2) + 3 O at b = 2: 6 + 2 + 0
  CHECK(section_dimension(t1, 2, 2).dimension == h0_line(2, 2) + 0 + 2);
}

TEST_CASE("type 5 at t = 2") {
  const BundlePresentation t5 = make_type5(2, 2);
  CHECK(section_dimension(t5, 1, 1).dimension == 0);
  CHECK(section_dimension(t5, 2, 1).dimension > 0);
  CHECK_FALSE(section_dimension(t5, 2, 1).exact);
}

TEST_CASE("glued counts of catalog bundles") {
  struct Row {
    BundlePresentation bp;
    int a, b;
    Count dim;
  };
  const std::vector<Row> rows{
      {make_type3(2, 2), 1, 0, 5},      {make_type3(2, 2), 2, 0, 14},
      {make_type5(2, 2), 1, 0, 4},      {make_type5(2, 2), 2, 0, 10},
      {make_type5(2, 2), 2, 1, 1},      {make_type5(2, 3, 3), 1, 0, 5},
      {make_type5(2, 3, 3), 2, 0, 15},  {make_type5(2, 4, 4), 1, 0, 6},
      {make_type5(2, 4, 4), 2, 0, 21},  {make_type6(2, 2), 1, 0, 3},
      {make_type6(2, 2), 2, 0, 6},      {make_type4a(3), 1, 0, 6},
      {make_type4a(3), 2, 0, 20},       {make_type4b(2), 1, 0, 5},
      {make_section_fstar(2, 2, 0), 1, 0, 6},
      {make_drum_bundle("ptangent", 2), 1, 0, 6},
      {make_drum_bundle("pomega", 3), 1, 0, 10},
      {make_type2(2, 2), 1, 0, 6},      {make_type2(2, 2), 2, 0, 18},
  };
  for (const auto& row : rows) {
    CAPTURE(row.bp.label());
    CAPTURE(row.a);
    CAPTURE(row.b);
    CHECK(section_dimension(row.bp, row.a, row.b).dimension == row.dim);
  }
}

TEST_CASE("h0(E) of T(-1) and Omega(2)") {
  for (int n = 2; n <= 3; ++n) {
    CHECK(section_dimension(make_drum_bundle("ptangent", n), 1, 0).dimension - h0_line(n, 1) ==
          h0_tangent_twist(n, -1));
  }
  CHECK(section_dimension(make_drum_bundle("pomega", 3), 1, 0).dimension - h0_line(3, 1) == bott_h(3, 1, 0, 2));
}

TEST_CASE("basis size equals dimension") {
  for (const auto& [bp, a, b] : std::vector<std::tuple<BundlePresentation, int, int>>{
           {make_type5(2, 2), 2, 1}, {make_type3(2, 2), 1, 0}, {make_type1(2, 2), 2, 1}, {make_type6(2, 2), 1, 0}}) {
    const SectionSpace s = section_space(bp, a, b);
    CAPTURE(bp.label());
    CHECK(s.basis.size() == static_cast<std::size_t>(s.dimension));
    CHECK(s.dimension == section_dimension(bp, a, b).dimension);
  }
}

TEST_CASE("split basis elements are bihomogeneous of the right degrees") {
  const BundlePresentation bp = make_type1(2, 3);
  const SectionSpace s = section_space(bp, 2, 1);
  REQUIRE_FALSE(s.basis.empty());
  for (const auto& tuple : s.basis)
    for (const auto& p : tuple) {
      if (p.is_zero()) continue;
      CHECK(p.is_multihomogeneous());
      CHECK(p.degree_in_block(0) == 2);
    }
}

TEST_CASE("glued computation agrees with the closed form on split bundles") {
  for (const auto& bp : {make_type2(2, 3), make_type1(2, 2)})
    for (int a = 1; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        CAPTURE(bp.label());
        CAPTURE(a);
        CAPTURE(b);
        CHECK(glued_section_dimension(bp, a, b).dimension == section_dimension(bp, a, b).dimension);
      }
}

TEST_CASE("slopes") {
  CHECK(cone_slope(make_type1(2, 2), 3) == Rational(2));
  CHECK(cone_slope(make_type5(2, 2), 4) == Rational(1, 2));
  CHECK(cone_slope(make_type6(2, 2), 3) == Rational(0));
  CHECK(cone_slope(make_type3(2, 2), 3) == Rational(1));
  const SlopeResult tr = slope_trace(make_type5(2, 2), 2);
  CHECK(tr.last_positive_b == std::vector<int>{0, 1});
}

TEST_CASE("slope is unchanged by a trivial summand") {
  for (const auto& bp : {make_type1(2, 2), make_type5(2, 2), make_type6(2, 2)})
    CHECK(cone_slope(add_trivial_summand(bp), 3) == cone_slope(bp, 3));
}

TEST_CASE("slope needs a_max >= 2") {
  CHECK_THROWS_AS(cone_slope(make_type1(2, 2), 1), Error);
}
