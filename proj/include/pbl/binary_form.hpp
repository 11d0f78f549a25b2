#pragma once

#include <vector>

#include "pbl/matrix.hpp"
#include "pbl/rational.hpp"

namespace pbl {

// Univariate polynomial, coefficients in increasing degree, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator()(const Rational& x) const;

  UniPoly monic() const;
  // Remainder of *this modulo d (d nonzero).
  UniPoly mod(const UniPoly& d) const;

 private:
  std::vector<Rational> c_;
};

UniPoly gcd(UniPoly a, UniPoly b);

// Homogeneous form sum_i c_i u^i v^(degree-i).
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(int degree, std::vector<Rational> coeffs);
  static BinaryForm zero(int degree) { return BinaryForm(degree, std::vector<Rational>(degree + 1)); }
  static BinaryForm linear(const Rational& cu, const Rational& cv);

  int degree() const { return degree_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  Rational operator()(const Rational& u, const Rational& v) const;
  // f(u, 1)
  UniPoly dehomogenize() const;

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  int degree_ = 0;
  std::vector<Rational> c_{Rational(0)};
};

// True iff the nonzero forms share a root [u:v] over an algebraically closed field.
// Throws AllFormsZero when every form vanishes identically.
bool binary_forms_common_root(const std::vector<BinaryForm>& forms);

using FormMatrix = std::vector<std::vector<BinaryForm>>;

// u*A + v*B with entries as linear binary forms.
FormMatrix pencil_forms(const RatMatrix& a, const RatMatrix& b);
BinaryForm form_determinant(const FormMatrix& m);
// All k x k minors (rows chosen in lexicographic order), k = number of columns.
std::vector<BinaryForm> maximal_minors(const FormMatrix& m);

}  // namespace pbl
