#include "pbl/resultant.hpp"

#include <stdexcept>

#include "pbl/error.hpp"

namespace pbl {

namespace {

// Characteristic polynomial coefficients [1, c1, ..., cn] of m.
std::vector<MultiPoly> berkowitz_vector(const PolyMatrix& m, const std::vector<Block>& blocks) {
  const std::size_t n = m.size();
  MultiPoly one = MultiPoly::constant(blocks, 1);
  if (n == 0) return {one};
  if (n == 1) return {one, -m[0][0]};
  const MultiPoly& a = m[0][0];
  std::vector<MultiPoly> r(m[0].begin() + 1, m[0].end());
  std::vector<MultiPoly> c;
  PolyMatrix sub(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    c.push_back(m[i][0]);
    sub[i - 1].assign(m[i].begin() + 1, m[i].end());
  }
  // diagonals of the Toeplitz matrix: 1, -a, -R C, -R A C, ...
  std::vector<MultiPoly> diag{one, -a};
  std::vector<MultiPoly> cur = c;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    MultiPoly dot(blocks);
    for (std::size_t i = 0; i < n - 1; ++i) dot += r[i] * cur[i];
    diag.push_back(-dot);
    if (k + 2 < n) {
      std::vector<MultiPoly> next(n - 1, MultiPoly(blocks));
      for (std::size_t i = 0; i < n - 1; ++i)
        for (std::size_t j = 0; j < n - 1; ++j)
          if (!sub[i][j].is_zero() && !cur[j].is_zero()) next[i] += sub[i][j] * cur[j];
      cur = std::move(next);
    }
  }
  std::vector<MultiPoly> v = berkowitz_vector(sub, blocks);  // length n
  std::vector<MultiPoly> out(n + 1, MultiPoly(blocks));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j < n && j <= i; ++j)
      if (!diag[i - j].is_zero() && !v[j].is_zero()) out[i] += diag[i - j] * v[j];
  return out;
}

}  // namespace

MultiPoly poly_determinant(const PolyMatrix& m, const std::vector<Block>& blocks) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("determinant of non-square matrix");
  auto v = berkowitz_vector(m, blocks);
  MultiPoly d = v.back();
  if (m.size() % 2 == 1) d = -d;
  return d;
}

PolyMatrix sylvester_matrix(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  auto fc = f.coefficients_in(var);
  auto gc = g.coefficients_in(var);
  const std::size_t m = fc.size() - 1, k = gc.size() - 1;
  const std::size_t n = m + k;
  PolyMatrix s(n, std::vector<MultiPoly>(n, MultiPoly(f.blocks())));
  // Row i of the f-part holds f's coefficients from the leading one down, shifted by i.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = fc[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= k; ++j) s[k + i][i + j] = gc[k - j];
  return s;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  if (f.is_zero() || g.is_zero()) return MultiPoly(f.blocks());
  return poly_determinant(sylvester_matrix(f, g, var), f.blocks());
}

MultiPoly iterated_resultant(const MultiPoly& poly, const std::vector<RootConstraint>& constraints) {
  MultiPoly p = poly;
  for (const auto& rc : constraints) {
    auto cs = rc.monic.coefficients_in(rc.var);
    if (cs.size() < 2 || !(cs.back() == MultiPoly::constant(rc.monic.blocks(), 1)))
      throw Error(ErrorCode::BadParams, "root constraint is not monic of positive degree");
    p = resultant(rc.monic, p, rc.var);
  }
  return p;
}

}  // namespace pbl
