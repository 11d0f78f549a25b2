#include "doctest.h"

#include "pbl/binary_form.hpp"
#include "pbl/json_io.hpp"
#include "pbl/matrix.hpp"
#include "pbl/poly.hpp"
#include "pbl/random.hpp"
#include "pbl/rational.hpp"
#include "pbl/resultant.hpp"
#include "pbl/sparse.hpp"

using namespace pbl;

namespace {

// Cofactor expansion, kept naive on purpose.
Rational laplace(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational det(0);
  for (std::size_t j = 0; j < n; ++j) {
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Rational term = m(0, j) * laplace(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

SparseVec to_sparse(const RatVector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

}  // namespace

TEST_CASE("rationals stay reduced") {
  Rational r(6, -4);
  CHECK(r == Rational(-3, 2));
  CHECK(r.str() == "-3/2");
  CHECK(Rational(4, 2).pretty() == "2");
  CHECK(Rational(4, 2).str() == "2/1");
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS(Rational(1, 0));
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("rational JSON accepts strings and integers") {
  CHECK(rational_from_json(Json("5/10")) == Rational(1, 2));
  CHECK(rational_from_json(Json(3)) == Rational(3));
  CHECK(to_json(Rational(-1, 3)) == Json("-1/3"));
}

TEST_CASE("determinant agrees with cofactor expansion") {
  Rng rng(11);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational(6, 4);
    CHECK(determinant(m) == laplace(m));
  }
}

TEST_CASE("inverse, rank and kernel are consistent") {
  Rng rng(12);
  for (int k = 0; k < 30; ++k) {
    RatMatrix a = rng.invertible_matrix(4, 5);
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a * *inv == RatMatrix::identity(4));
    RatMatrix m = rng.integer_matrix(3, 5, 3);
    const auto ker = kernel_basis(m);
    CHECK(ker.size() == 5 - mat_rank(m));
    for (const auto& v : ker) CHECK(is_zero(m * v));
  }
  RatMatrix singular{{1, 2}, {2, 4}};
  CHECK_FALSE(inverse(singular).has_value());
  CHECK(mat_rank(singular) == 1);
}

TEST_CASE("basis extension uses the lowest standard vector") {
  const auto basis = extend_to_basis({RatVector{Rational(1), Rational(1), Rational(0)}}, 3);
  REQUIRE(basis.size() == 3);
  CHECK(basis[1] == unit_vector(3, 0));
  CHECK(basis[2] == unit_vector(3, 2));
}

TEST_CASE("column span intersection") {
  RatMatrix a{{1, 0}, {0, 1}, {0, 0}};
  RatMatrix b{{0, 0}, {1, 0}, {0, 1}};
  const auto common = column_span_intersection(a, b);
  REQUIRE(common.size() == 1);
  CHECK(common[0][0].is_zero());
  CHECK(common[0][2].is_zero());
  CHECK_FALSE(common[0][1].is_zero());
}

TEST_CASE("polynomial evaluation is a ring map") {
  const std::vector<Block> blocks{{"a", 2}, {"x", 3}};
  Rng rng(13);
  auto random_poly = [&]() {
    MultiPoly p(blocks);
    for (int t = 0; t < 4; ++t) {
      Exponent e(5);
      for (auto& v : e) v = static_cast<unsigned>(rng.uniform(0, 2));
      p.add_term(e, Rational(rng.uniform(-4, 4)));
    }
    return p;
  };
  for (int k = 0; k < 25; ++k) {
    MultiPoly f = random_poly(), g = random_poly();
    RatVector x(5);
    for (auto& v : x) v = rng.rational(5, 3);
    CHECK((f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x));
    CHECK((f + g).evaluate(x) == f.evaluate(x) + g.evaluate(x));
    CHECK(f * g == g * f);
  }
}

TEST_CASE("multihomogeneity and degrees") {
  const std::vector<Block> blocks{{"a", 2}, {"x", 2}};
  MultiPoly a0 = MultiPoly::variable(blocks, 0, 0), x1 = MultiPoly::variable(blocks, 1, 1);
  MultiPoly f = a0 * a0 * x1 + a0 * MultiPoly::variable(blocks, 0, 1) * x1;
  CHECK(f.is_multihomogeneous());
  CHECK(f.degree_in_block(0) == 2);
  CHECK(f.degree_in_block(1) == 1);
  CHECK_FALSE((f + a0).is_multihomogeneous());
  CHECK(poly_from_json(to_json(f)) == f);
}

TEST_CASE("graded lex order puts the first block first") {
  const std::vector<Block> blocks{{"x", 2}, {"a", 2}};
  CHECK(monomial_precedes(blocks, {1, 0, 0, 1}, {0, 1, 1, 0}));
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(2, 0).size() == 1);
}

TEST_CASE("resultant of a monic product is the product of values") {
  const std::vector<Block> blocks{{"x", 1}};
  const MultiPoly x = MultiPoly::variable(blocks, 0, 0);
  auto c = [&](long v) { return MultiPoly::constant(blocks, Rational(v)); };
  Rng rng(14);
  for (int k = 0; k < 20; ++k) {
    const long r1 = rng.uniform(-4, 4), r2 = rng.uniform(-4, 4);
    MultiPoly f = (x - c(r1)) * (x - c(r2));
    MultiPoly g = x * x * c(rng.uniform(-3, 3)) + x * c(rng.uniform(-3, 3)) + c(rng.uniform(-3, 3));
    const Rational want = g.evaluate({Rational(r1)}) * g.evaluate({Rational(r2)});
    const MultiPoly res = resultant(f, g, 0);
    CHECK(res.is_constant());
    CHECK(res.evaluate({Rational(0)}) == want);
  }
  CHECK(resultant(x - c(2), x - c(5), 0).evaluate({Rational(0)}) == Rational(-3));
}

TEST_CASE("iterated resultant needs monic constraints") {
  const std::vector<Block> blocks{{"y", 1}};
  const MultiPoly y = MultiPoly::variable(blocks, 0, 0);
  const MultiPoly two = MultiPoly::constant(blocks, Rational(2));
  CHECK_THROWS(iterated_resultant(y, {RootConstraint{0, two * y * y}}));
  // prod over y^2 = 4 of (y + 1) = (2+1)(-2+1)
  const MultiPoly r = iterated_resultant(y + MultiPoly::constant(blocks, 1),
                                         {RootConstraint{0, y * y - MultiPoly::constant(blocks, 4)}});
  CHECK(r.evaluate({Rational(0)}) == Rational(-3));
}

TEST_CASE("binary forms share a root") {
  auto lin = [](long a, long b) { return BinaryForm::linear(Rational(a), Rational(b)); };
  CHECK(binary_forms_common_root({lin(1, -1) * lin(1, 2), lin(1, -1) * lin(0, 1)}));
  CHECK(binary_forms_common_root({lin(0, 1) * lin(1, 1), lin(0, 1)}));
  CHECK_FALSE(binary_forms_common_root({lin(1, 0) * lin(1, 0) + lin(0, 1) * lin(0, 1), lin(1, 0) * lin(0, 1)}));
  CHECK_THROWS(binary_forms_common_root({BinaryForm::zero(2)}));
}

TEST_CASE("sparse echelon rank matches dense rank") {
  Rng rng(15);
  for (int k = 0; k < 30; ++k) {
    RatMatrix m(6, 8);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 8; ++j)
        if (rng.uniform(0, 2) == 0) m(i, j) = Rational(rng.uniform(-3, 3));
    if (k % 3 == 0)
      for (std::size_t j = 0; j < 8; ++j) m(5, j) = m(0, j) + m(1, j);
    SparseEchelon ech;
    std::vector<SparseVec> rows;
    for (std::size_t i = 0; i < 6; ++i) {
      rows.push_back(to_sparse(m.row(i)));
      ech.add(rows.back());
    }
    CHECK(ech.rank() == mat_rank(m));
    const auto ker = left_kernel(rows);
    CHECK(ker.size() == 6 - mat_rank(m));
    for (const auto& comb : ker) {
      RatVector sum(8);
      for (const auto& [i, c] : comb)
        for (std::size_t j = 0; j < 8; ++j) sum[j] += c * m(i, j);
      CHECK(is_zero(sum));
    }
  }
}
