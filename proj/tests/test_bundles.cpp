#include "doctest.h"

#include "pbl/bundle.hpp"
#include "pbl/cohomology.hpp"
#include "pbl/cone.hpp"
#include "pbl/error.hpp"
#include "pbl/incidence.hpp"
#include "pbl/pencil.hpp"
#include "pbl/random.hpp"

using namespace pbl;

namespace {

ProjPoint pt(std::initializer_list<long> c) {
  RatVector v;
  for (long x : c) v.push_back(Rational(x));
  return ProjPoint(v);
}

RatVector vec(std::initializer_list<long> c) {
  RatVector v;
  for (long x : c) v.push_back(Rational(x));
  return v;
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadInput;
}

}  // namespace

TEST_CASE("catalog presentations have c1 = 2") {
  for (const auto& bp : {make_type1(2, 3), make_type2(2, 3), make_type3(2, 2), make_type3(3, 4), make_type4a(3),
                         make_type4a(4), make_type4b(2), make_type5(2, 2), make_type5(2, 4, 4), make_type5(3, 3),
                         make_type6(2, 2), make_type6(3, 4)}) {
    CAPTURE(bp.label());
    CHECK(bp.first_chern() == 2);
    CHECK(bp.resolution_rank() == bp.rank);
  }
}

TEST_CASE("type 1 is split") {
  const BundlePresentation bp = make_type1(2, 3);
  CHECK(bp.twists == std::vector<int>{2, 0, 0});
  CHECK(bp.relations.empty());
  CHECK(bp.rank == 3);
}

TEST_CASE("type 3 has the Euler relation and the section") {
  const BundlePresentation bp = make_type3(2, 2);
  CHECK(bp.twists.size() == 4);
  CHECK(bp.relations.size() == 2);
  CHECK(bp.rank == 2);
}

TEST_CASE("type 5 relations come from the pencil") {
  const BundlePresentation bp = make_type5(2, 2);
  REQUIRE(bp.relations.size() == 2);
  CHECK(bp.params.t == 2);
  CHECK(bp.params.pencil_a == canonical_pencil(2, 2).A());
  CHECK(bp.params.pencil_b == canonical_pencil(2, 2).B());
  CHECK(code_of([] { make_type5(2, 2, 2, std::make_pair(canonical_pencil(2, 2).A(), canonical_pencil(2, 2).A())); }) ==
        ErrorCode::IrregularPencil);
}

TEST_CASE("the F-star relation is alpha_i^(d-1)") {
  const BundlePresentation bp = make_section_fstar(3, 2, 0);
  REQUIRE(bp.relations.size() == 1);
  const auto& rel = bp.relations[0];
  CHECK(rel.twist == -2);
  const MultiPoly a0 = MultiPoly::variable(alpha_block(2), 0, 0);
  CHECK(rel.entries[1] == a0 * a0);
}

TEST_CASE("bad parameters are rejected") {
  CHECK(code_of([] { make_type3(3, 2); }) == ErrorCode::BadParams);
  CHECK(code_of([] { make_section_fstar(1, 2, 0); }) == ErrorCode::BadParams);
  CHECK(code_of([] { catalog_bundle(CatalogRequest{"type4a", 2, 3, -1, 2, ""}); }) == ErrorCode::BadParams);
  CHECK(code_of([] { catalog_bundle(CatalogRequest{"nonsense", 2, 3, -1, 2, ""}); }) == ErrorCode::UnknownTag);
  BundlePresentation bp = make_type6(2, 2);
  bp.rank = 3;
  CHECK(code_of([&] { validate(bp); }) == ErrorCode::BadParams);
}

TEST_CASE("presentations round trip through JSON") {
  for (const auto& bp : standard_catalog()) {
    const BundlePresentation back = presentation_from_json(to_json(bp));
    CHECK(to_json(back) == to_json(bp));
  }
}

TEST_CASE("incidence model of F-star at d = 2") {
  const IncidenceModel m = incidence_model(make_section_fstar(2, 2, 0));
  REQUIRE(m.relation_constraints.size() == 1);
  const auto blocks = incidence_blocks(2, 6);
  auto a = [&](std::size_t i) { return MultiPoly::variable(blocks, 0, i); };
  auto x = [&](std::size_t i) { return MultiPoly::variable(blocks, 1, i); };
  CHECK(m.relation_constraints[0] == a(0) * x(1) + a(1) * x(3) + a(2) * x(5));
  REQUIRE(m.proportional_blocks.size() == 1);
  CHECK(m.proportional_blocks[0] == std::vector<std::size_t>{0, 2, 4});
  CHECK(m.proportionality_minors.size() == 3);
}

TEST_CASE("incidence models of type 5 and type 6") {
  const IncidenceModel m5 = incidence_model(make_type5(2, 2));
  CHECK(m5.relation_constraints.size() == 2);
  CHECK(m5.proportional_blocks.empty());
  for (const auto& c : m5.constraints()) {
    CHECK(c.degree_in_block(0) == 1);
    CHECK(c.degree_in_block(1) == 1);
  }
  const IncidenceModel m6 = incidence_model(make_type6(2, 2));
  REQUIRE(m6.constraints().size() == 1);
  CHECK(m6.constraints()[0].degree_in_block(0) == 2);
  CHECK(m6.constraints()[0].degree_in_block(1) == 1);
}

TEST_CASE("fibres of type 5 with t = 2") {
  const BundlePresentation bp = make_type5(2, 2);
  CHECK(fiber_over(bp, pt({1, 0, 0, 0})).str() == "LinearPk(1)");
  // on the twisted cubic (s = u = 1), so a line again
  CHECK(fiber_over(bp, pt({1, 1, 1, 1})).str() == "LinearPk(1)");
  CHECK(fiber_over(bp, pt({1, 0, 0, 1})).str() == "Point");
}

TEST_CASE("fibres of F-star models") {
  const BundlePresentation bp = make_section_fstar(2, 2, 0);
  const FiberClass f = fiber_over(bp, pt({0, 1, 0, 0, 0, 0}));
  CHECK(f.kind == FiberKind::LinearPk);
  CHECK(f.dimension == 1);
  CHECK(fiber_over(bp, pt({1, 1, 0, 0, 0, 0})).kind == FiberKind::Empty);
  CHECK(fiber_over(bp, pt({1, 0, 0, 0, 0, 0})).kind == FiberKind::Point);
}

TEST_CASE("fibres of type 6 are conics in the base") {
  const BundlePresentation bp = make_type6(2, 2);
  // x = [1:1:-1]: alpha0^2 + alpha1^2 - alpha2^2 = 0
  const FiberClass f = fiber_over(bp, pt({1, 1, -1}));
  CHECK(f.kind == FiberKind::HypersurfaceInPn);
  CHECK(f.dimension == 1);
}

TEST_CASE("image membership") {
  const BundlePresentation q = make_section_fstar(2, 2, 0);
  CHECK(image_membership(q, pt({0, 1, 0, 0, 0, 0})));
  CHECK_FALSE(image_membership(q, pt({1, 1, 0, 0, 0, 0})));
  const BundlePresentation c = make_section_fstar(3, 2, 1);
  CHECK(image_membership(c, pt({1, -1, 1, 1, 0, 5, 3})));
  CHECK(code_of([] { image_membership(make_type6(2, 2), pt({1, 0, 0})); }) == ErrorCode::NoImageEquation);
}

TEST_CASE("image equations agree with fibres on a scan of type 3") {
  const BundlePresentation bp = make_type3(2, 2);
  long nonempty = 0;
  for_each_grid_point(bp.target_size, 1, [&](const ProjPoint& x) {
    const bool f = fiber_over(bp, x).kind != FiberKind::Empty;
    CHECK(f == image_membership(bp, x));
    nonempty += f;
  });
  CHECK(nonempty > 0);
}

TEST_CASE("nowhere vanishing sections") {
  CHECK(nowhere_vanishing_section(2, 2, vec({1, 1, 0, 0, 0, 0})));
  CHECK_FALSE(nowhere_vanishing_section(2, 2, vec({1, 0, 0, 1, 0, 0})));
  CHECK(nowhere_vanishing_section(3, 2, vec({1, 1, 0, 0, 0, 1})));
  // y0 = +-1, y2 = +-1: x0 y0 + x4 y2 vanishes for y0 = -y2
  CHECK_FALSE(nowhere_vanishing_section(3, 2, vec({1, 1, 0, 0, 1, 1})));
}

TEST_CASE("nowhere vanishing resultant matches the closed form for d = 2") {
  Rng rng(41);
  for (int k = 0; k < 50; ++k) {
    RatVector x(6);
    for (auto& v : x) v = Rational(rng.uniform(-3, 3));
    if (is_zero(x)) continue;
    const Rational s = x[0] * x[1] + x[2] * x[3] + x[4] * x[5];
    CHECK(nowhere_vanishing_section(2, 2, x) == !s.is_zero());
  }
}

TEST_CASE("line bundle cohomology") {
  CHECK(h0_line(2, 2) == 6);
  CHECK(h0_line(3, 0) == 1);
  CHECK(h0_line(2, -1) == 0);
  CHECK(bott_h(3, 1, 0, 2) == 6);
  CHECK(bott_h(3, 1, 0, 1) == 0);
  CHECK(bott_h(2, 1, 1, 0) == 1);
  CHECK(h0_tangent_twist(2, -1) == 3);
  CHECK(h0_tangent_twist(2, -2) == 0);
  CHECK(h0_tangent_twist(2, 0) == 8);
}

TEST_CASE("Bott formula properties") {
  for (int n = 1; n <= 4; ++n)
    for (int k = -3; k <= 4; ++k) CHECK(bott_h(n, 0, 0, k) == h0_line(n, k));
  // Serre duality
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q)
        for (int k = -4; k <= 4; ++k) CHECK(bott_h(n, p, q, k) == bott_h(n, n - p, n - q, -k));
  for (int n = 2; n <= 4; ++n) CHECK(h0_tangent_twist(n, -1) == n + 1);
  // T = Omega^(n-1)(n+1)
  for (int n = 2; n <= 4; ++n)
    for (int i = -3; i <= 2; ++i) CHECK(h0_tangent_twist(n, i) == bott_h(n, n - 1, 0, n + 1 + i));
}

TEST_CASE("cone reports") {
  const ConeReport t1 = cone_report(make_type1(2, 3));
  CHECK(t1.c == Rational(2));
  CHECK(t1.nef[0] == DivisorClass{0, 1});
  CHECK(t1.nef[1] == DivisorClass{1, 0});
  CHECK(t1.eff[1] == DivisorClass{1, -2});
  CHECK(t1.xi_big);
  const ConeReport t3 = cone_report(make_type3(2, 2));
  CHECK(t3.c == Rational(1));
  CHECK(t3.verdict.find("smooth quadric in P^4") != std::string::npos);
  const ConeReport tan = cone_report(make_drum_bundle("ptangent", 2));
  CHECK(tan.verdict.find("smooth quadric in P^5") != std::string::npos);
  const ConeReport t4 = cone_report(make_type4a(3));
  CHECK(t4.c == Rational(0));
  CHECK(t4.verdict == "no birational contraction");
  CHECK_FALSE(t4.xi_big);
  const ConeReport t5 = cone_report(make_type5(2, 2));
  CHECK(t5.c == Rational(1, 2));
  CHECK(t5.eff[1] == DivisorClass{2, -1});
  CHECK(t5.center == "twisted cubic in P^3");
  const ConeReport t6 = cone_report(make_type6(2, 2));
  CHECK(t6.verdict.find("smooth quadric") != std::string::npos);
  CHECK(t6.slope_agrees);
  BundlePresentation custom = make_type6(2, 2);
  custom.tag = BundleTag::Custom;
  CHECK(code_of([&] { cone_report(custom); }) == ErrorCode::UnknownTag);
}

TEST_CASE("anticanonical class") {
  const FanoCheck t1 = fano_check(make_type1(2, 2));
  CHECK(t1.h_coefficient == 1);
  CHECK(t1.xi_coefficient == 2);
  CHECK(t1.fano);
  BundlePresentation split;
  split.n = 2;
  split.twists = {3, 0};
  split.rank = 2;
  const FanoCheck s = fano_check(split);
  CHECK(s.h_coefficient == 0);
  CHECK_FALSE(s.fano);
  const FanoCheck t6 = fano_check(make_type6(3, 3));
  CHECK(t6.h_coefficient == 2);
  CHECK(t6.xi_coefficient == 3);
  CHECK(t6.fano);
}
