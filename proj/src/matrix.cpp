#include "pbl/matrix.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace pbl {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) a_.emplace_back(v);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols, std::size_t rows) {
  RatMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  return RatVector(a_.begin() + static_cast<long>(i * cols_),
                   a_.begin() + static_cast<long>((i + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t j) const {
  RatVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::hconcat(const RatMatrix& o) const {
  if (o.rows_ != rows_) throw std::invalid_argument("hconcat row mismatch");
  RatMatrix m(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) m(i, cols_ + j) = o(i, j);
  }
  return m;
}

RatMatrix RatMatrix::vconcat(const RatMatrix& o) const {
  if (o.cols_ != cols_) throw std::invalid_argument("vconcat column mismatch");
  RatMatrix m(rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(rows_ + i, j) = o(i, j);
  return m;
}

RatMatrix RatMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  RatMatrix m(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("product shape mismatch");
  RatMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  RatVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (!v[j].is_zero()) out[i] += a(i, j) * v[j];
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("sum shape mismatch");
  RatMatrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
  return m;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix m = a;
  for (auto& x : m.a_) x *= s;
  return m;
}

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

IntRows integer_rows(const RatMatrix& m) {
  IntRows out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).num() * (l / m(i, j).den());
  }
  return out;
}

struct IntEchelon {
  IntRows rows;
  std::vector<std::size_t> pivots;
  int swap_sign = 1;
};

IntEchelon bareiss_int(IntRows a, std::size_t cols) {
  IntEchelon e;
  const std::size_t nr = a.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      e.swap_sign = -e.swap_sign;
    }
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  e.rows = std::move(a);
  return e;
}

// Back substitution on an echelon form; free variables are taken from `free_values`.
RatVector back_substitute(const Echelon& e, std::size_t ncols, const RatVector& rhs,
                          const RatVector& free_values) {
  RatVector x = free_values;
  x.resize(ncols);
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    std::size_t pc = e.pivots[k];
    Rational acc = rhs.empty() ? Rational(0) : rhs[k];
    for (std::size_t j = pc + 1; j < ncols; ++j)
      if (!x[j].is_zero()) acc -= e.form(k, j) * x[j];
    x[pc] = acc / e.form(k, pc);
  }
  return x;
}

}  // namespace

Echelon bareiss(const RatMatrix& m) {
  IntEchelon ie = bareiss_int(integer_rows(m), m.cols());
  Echelon e;
  e.form = RatMatrix(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e.form(i, j) = Rational(ie.rows[i][j]);
  e.pivots = std::move(ie.pivots);
  return e;
}

std::size_t mat_rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_int(integer_rows(m), m.cols()).pivots.size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  Echelon e = bareiss(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector free(m.cols());
    free[f] = 1;
    out.push_back(back_substitute(e, m.cols(), {}, free));
  }
  return out;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rational scale = 1;
  IntRows rows(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j).num() * (l / m(i, j).den());
    scale *= Rational(l);
  }
  IntEchelon e = bareiss_int(std::move(rows), n);
  if (e.pivots.size() < n) return 0;
  return Rational(mpz_class(e.rows[n - 1][n - 1] * e.swap_sign)) / scale;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  RatMatrix aug = m.hconcat(RatMatrix::identity(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug(p, c).is_zero()) ++p;
    if (p == n) return std::nullopt;
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(p, j), aug(c, j));
    Rational inv = Rational(1) / aug(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug(i, c).is_zero()) continue;
      Rational f = aug(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(c, j);
    }
  }
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
  RatMatrix aug = m.hconcat(RatMatrix::from_columns({b}, m.rows()));
  Echelon e = bareiss(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  RatVector rhs(e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) rhs[k] = e.form(k, m.cols());
  return back_substitute(e, m.cols(), rhs, RatVector(m.cols()));
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v(n);
  v[i] = 1;
  return v;
}

std::vector<std::size_t> independent_columns(const RatMatrix& m) {
  return bareiss(m).pivots;
}

std::vector<RatVector> column_span_intersection(const RatMatrix& a, const RatMatrix& b) {
  // (x, y) in ker [a : -b]  gives a x = b y in the intersection.
  RatMatrix ab = a.hconcat(Rational(-1) * b);
  std::vector<RatVector> out;
  RatMatrix collected(a.rows(), 0);
  for (const auto& k : kernel_basis(ab)) {
    RatVector x(k.begin(), k.begin() + static_cast<long>(a.cols()));
    RatVector w = a * x;
    if (is_zero(w)) continue;
    RatMatrix trial = collected.hconcat(RatMatrix::from_columns({w}, a.rows()));
    if (mat_rank(trial) == collected.cols() + 1) {
      collected = trial;
      out.push_back(w);
    }
  }
  return out;
}

std::vector<RatVector> extend_to_basis(const std::vector<RatVector>& vs, std::size_t n) {
  std::vector<RatVector> out = vs;
  for (std::size_t i = 0; i < n && out.size() < n; ++i) {
    std::vector<RatVector> trial = out;
    trial.push_back(unit_vector(n, i));
    if (mat_rank(RatMatrix::from_columns(trial, n)) == trial.size()) out = std::move(trial);
  }
  assert(out.size() == n);
  return out;
}

}  // namespace pbl
