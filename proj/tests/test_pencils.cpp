#include "doctest.h"

#include "pbl/error.hpp"
#include "pbl/pencil.hpp"
#include "pbl/random.hpp"

using namespace pbl;

namespace {

RatMatrix columns(std::size_t rows, std::initializer_list<std::size_t> idx) {
  std::vector<RatVector> cols;
  for (auto i : idx) cols.push_back(unit_vector(rows, i));
  return RatMatrix::from_columns(cols, rows);
}

// rank(uA + vB) < 3 for some small integer [u:v]
bool drop_found(const RatMatrix& a, const RatMatrix& b, long bound) {
  for (long u = -bound; u <= bound; ++u)
    for (long v = -bound; v <= bound; ++v) {
      if (u == 0 && v == 0) continue;
      if (mat_rank(Rational(u) * a + Rational(v) * b) < 3) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("regularity examples") {
  CHECK(pencil_is_regular(PencilPair(columns(6, {0, 1, 2}), columns(6, {3, 4, 5}))));
  CHECK_FALSE(pencil_is_regular(PencilPair(columns(4, {0, 1, 2}), columns(4, {0, 1, 2}))));
  CHECK(pencil_is_regular(PencilPair(columns(4, {0, 1, 2}), columns(4, {1, 2, 3}))));
}

TEST_CASE("t from the rank of [A:B]") {
  CHECK(pencil_t(PencilPair(columns(6, {0, 1, 2}), columns(6, {3, 4, 5}))) == 4);
  CHECK(pencil_t(PencilPair(columns(4, {0, 1, 2}), columns(4, {1, 2, 3}))) == 2);
  CHECK(pencil_t(PencilPair(columns(5, {0, 1, 2}), columns(5, {2, 3, 4}))) == 3);
  PencilPair same(columns(4, {0, 1, 2}), columns(4, {0, 1, 2}));
  try {
    pencil_t(same);
    FAIL("expected IrregularPencil");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IrregularPencil);
  }
}

TEST_CASE("canonical pencils") {
  const PencilPair p22 = canonical_pencil(2, 2);
  CHECK(p22.A().rows() == 4);
  CHECK(p22.B() == columns(4, {1, 2, 3}));
  CHECK(canonical_pencil(4, 4).B() == columns(6, {3, 4, 5}));
  CHECK_THROWS_AS(canonical_pencil(5, 5), Error);
  try {
    canonical_pencil(3, 2);
    FAIL("expected TooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooSmall);
  }
}

TEST_CASE("shape is checked") {
  CHECK_THROWS(PencilPair(RatMatrix(2, 3), RatMatrix(2, 3)));
  CHECK_THROWS(PencilPair(RatMatrix(4, 3), RatMatrix(5, 3)));
  CHECK_THROWS(PencilPair(RatMatrix(4, 2), RatMatrix(4, 2)));
}

TEST_CASE("canonical pencil is its own normal form") {
  for (int t = 2; t <= 4; ++t) {
    const PencilPair p = canonical_pencil(t, t);
    const PencilNormalForm nf = pencil_normal_form(p);
    CHECK(nf.t == t);
    CHECK(verify_normal_form(p, nf));
  }
}

TEST_CASE("t is a conjugation invariant and the normal form round trips") {
  Rng rng(21);
  for (int t = 2; t <= 4; ++t)
    for (int s = t; s <= 6; ++s) {
      const PencilPair c = canonical_pencil(t, s);
      for (int k = 0; k < 10; ++k) {
        RatMatrix p0 = rng.invertible_matrix(static_cast<std::size_t>(s) + 2, 5);
        RatMatrix q0 = rng.invertible_matrix(3, 5);
        PencilPair conj(p0 * c.A() * q0, p0 * c.B() * q0);
        CHECK(pencil_t(conj) == t);
        const PencilNormalForm nf = pencil_normal_form(conj);
        CHECK(nf.P * conj.A() * nf.Q == c.A());
        CHECK(nf.P * conj.B() * nf.Q == c.B());
      }
    }
}

TEST_CASE("rank of [A:B] stays in 4..6 for regular pencils") {
  Rng rng(22);
  for (int k = 0; k < 60; ++k) {
    RatMatrix a = rng.integer_matrix(static_cast<std::size_t>(rng.uniform(4, 7)), 3, 2);
    RatMatrix b = rng.integer_matrix(a.rows(), 3, 2);
    if (!pencil_regular(a, b)) continue;
    const auto r = mat_rank(a.hconcat(b));
    CHECK(r >= 4);
    CHECK(r <= 6);
  }
}

TEST_CASE("irregularity detector agrees with evaluation at small [u:v]") {
  Rng rng(23);
  for (int k = 0; k < 30; ++k) {
    RatMatrix b = rng.integer_matrix(5, 3, 4);
    if (mat_rank(b) < 3) continue;
    RatMatrix d(3, 3);
    for (std::size_t i = 0; i < 3; ++i) d(i, i) = Rational(rng.uniform(1, 3) * (rng.uniform(0, 1) ? 1 : -1));
    const RatMatrix a = b * d;
    // degenerate at [u:v] = [1:-d_i]
    CHECK_FALSE(pencil_regular(a, b));
    CHECK(drop_found(a, b, 3));
  }
  for (int k = 0; k < 30; ++k) {
    const int t = static_cast<int>(rng.uniform(2, 4));
    const PencilPair c = canonical_pencil(t, t);
    RatMatrix p0 = rng.invertible_matrix(static_cast<std::size_t>(t) + 2, 3);
    RatMatrix q0 = rng.invertible_matrix(3, 3);
    const RatMatrix a = p0 * c.A() * q0, b = p0 * c.B() * q0;
    CHECK(pencil_regular(a, b));
    CHECK_FALSE(drop_found(a, b, 4));
  }
}

TEST_CASE("pencil JSON round trip") {
  const PencilPair p = canonical_pencil(3, 4);
  const PencilPair q = pencil_from_json(to_json(p));
  CHECK(q.A() == p.A());
  CHECK(q.B() == p.B());
  CHECK_THROWS(pencil_from_json(Json{{"A", 1}}));
}
