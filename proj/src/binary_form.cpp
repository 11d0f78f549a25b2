#include "pbl/binary_form.hpp"

#include <stdexcept>

#include "pbl/error.hpp"

namespace pbl {

UniPoly::UniPoly(std::vector<Rational> c) : c_(std::move(c)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  std::vector<Rational> c = c_;
  Rational lc = c.back();
  for (auto& x : c) x /= lc;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::mod(const UniPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> r = c_;
  const int dd = d.degree();
  const Rational& lc = d.c_.back();
  for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
    if (r[k].is_zero()) continue;
    Rational f = r[k] / lc;
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= f * d.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs) : degree_(degree), c_(std::move(coeffs)) {
  if (degree < 0 || c_.size() != static_cast<std::size_t>(degree) + 1)
    throw std::invalid_argument("binary form needs degree+1 coefficients");
}

BinaryForm BinaryForm::linear(const Rational& cu, const Rational& cv) { return BinaryForm(1, {cv, cu}); }

bool BinaryForm::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

Rational BinaryForm::operator()(const Rational& u, const Rational& v) const {
  Rational acc = 0;
  for (int i = 0; i <= degree_; ++i) acc += c_[i] * pow(u, i) * pow(v, degree_ - i);
  return acc;
}

UniPoly BinaryForm::dehomogenize() const { return UniPoly(c_); }

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree_ != b.degree_) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    throw std::invalid_argument("adding binary forms of different degree");
  }
  BinaryForm r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm nb = b;
  for (auto& x : nb.c_) x = -x;
  return a + nb;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm r = BinaryForm::zero(a.degree_ + b.degree_);
  for (int i = 0; i <= a.degree_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j <= b.degree_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

bool binary_forms_common_root(const std::vector<BinaryForm>& forms) {
  std::vector<const BinaryForm*> nz;
  for (const auto& f : forms)
    if (!f.is_zero()) nz.push_back(&f);
  if (nz.empty()) throw Error(ErrorCode::AllFormsZero, "every form is identically zero");
  // Root [1:0]: the u^degree coefficient vanishes in every form.
  bool at_infinity = true;
  for (const auto* f : nz)
    if (!f->coeffs().back().is_zero()) at_infinity = false;
  if (at_infinity) return true;
  UniPoly g = nz.front()->dehomogenize();
  for (std::size_t i = 1; i < nz.size() && g.degree() > 0; ++i) g = gcd(g, nz[i]->dehomogenize());
  return g.degree() > 0;
}

FormMatrix pencil_forms(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("pencil shape mismatch");
  FormMatrix m(a.rows(), std::vector<BinaryForm>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = BinaryForm::linear(a(i, j), b(i, j));
  return m;
}

BinaryForm form_determinant(const FormMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return BinaryForm(0, {Rational(1)});
  if (n == 1) return m[0][0];
  int deg = 0;
  for (std::size_t i = 0; i < n; ++i) deg += m[i][0].degree();
  BinaryForm acc = BinaryForm::zero(deg);
  for (std::size_t j = 0; j < n; ++j) {
    FormMatrix sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BinaryForm> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    BinaryForm term = m[0][j] * form_determinant(sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

namespace {

void choose_rows(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose_rows(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<BinaryForm> maximal_minors(const FormMatrix& m) {
  if (m.empty()) return {};
  const std::size_t k = m[0].size();
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> cur;
  choose_rows(m.size(), k, 0, cur, subsets);
  std::vector<BinaryForm> out;
  for (const auto& rows : subsets) {
    FormMatrix sub;
    for (auto r : rows) sub.push_back(m[r]);
    out.push_back(form_determinant(sub));
  }
  return out;
}

}  // namespace pbl
