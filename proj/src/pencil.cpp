#include "pbl/pencil.hpp"

#include "pbl/binary_form.hpp"
#include "pbl/error.hpp"

namespace pbl {

PencilPair::PencilPair(RatMatrix a, RatMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols())
    throw Error(ErrorCode::BadInput, "A and B must have the same shape");
  if (a_.cols() != 3 || a_.rows() < 3) throw Error(ErrorCode::BadInput, "pencil matrices must be (s+2) x 3 with s >= 1");
}

bool pencil_regular(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() < a.cols()) return false;
  auto minors = maximal_minors(pencil_forms(a, b));
  bool all_zero = true;
  for (const auto& m : minors)
    if (!m.is_zero()) all_zero = false;
  if (all_zero) return false;
  return !binary_forms_common_root(minors);
}

bool pencil_is_regular(const PencilPair& p) { return pencil_regular(p.A(), p.B()); }

int pencil_t(const PencilPair& p) {
  if (!pencil_is_regular(p)) throw Error(ErrorCode::IrregularPencil, "uA+vB drops rank for some [u:v]");
  return static_cast<int>(mat_rank(p.A().hconcat(p.B()))) - 2;
}

namespace {

RatVector head(const RatVector& v, std::size_t k) { return RatVector(v.begin(), v.begin() + static_cast<long>(k)); }
RatVector tail(const RatVector& v, std::size_t k) { return RatVector(v.begin() + static_cast<long>(k), v.end()); }

void require_basis(const std::vector<RatVector>& vs, std::size_t n, const char* what) {
  if (vs.size() != n || mat_rank(RatMatrix::from_columns(vs, n)) != n)
    throw Error(ErrorCode::InternalRankContradiction, what);
}

}  // namespace

PencilNormalForm pencil_normal_form(const PencilPair& p) {
  const int t = pencil_t(p);
  const RatMatrix& A = p.A();
  const RatMatrix& B = p.B();
  const std::size_t m = A.rows();
  std::vector<RatVector> v(3), w;

  if (t == 4) {
    for (std::size_t i = 0; i < 3; ++i) v[i] = unit_vector(3, i);
    for (std::size_t i = 0; i < 3; ++i) w.push_back(A.column(i));
    for (std::size_t i = 0; i < 3; ++i) w.push_back(B.column(i));
  } else if (t == 3) {
    // A a = B b spans the line Im A ∩ Im B; v2 = a, v0 = b.
    auto ker = kernel_basis(A.hconcat(Rational(-1) * B));
    if (ker.size() != 1) throw Error(ErrorCode::InternalRankContradiction, "expected a one-dimensional intersection");
    v[2] = head(ker[0], 3);
    v[0] = tail(ker[0], 3);
    auto ext = extend_to_basis({v[0], v[2]}, 3);
    v[1] = ext[2];
    w = {A * v[0], A * v[1], A * v[2], B * v[1], B * v[2]};
  } else if (t == 2) {
    // W = Im A ∩ Im B is two-dimensional; v1 spans A^{-1}W ∩ B^{-1}W.
    auto ker = kernel_basis(A.hconcat(Rational(-1) * B));
    if (ker.size() != 2) throw Error(ErrorCode::InternalRankContradiction, "expected a two-dimensional intersection");
    RatMatrix pre_a = RatMatrix::from_columns({head(ker[0], 3), head(ker[1], 3)}, 3);
    RatMatrix pre_b = RatMatrix::from_columns({tail(ker[0], 3), tail(ker[1], 3)}, 3);
    auto common = column_span_intersection(pre_a, pre_b);
    if (common.size() != 1) throw Error(ErrorCode::InternalRankContradiction, "A^{-1}W and B^{-1}W coincide");
    v[1] = common[0];
    RatVector w1 = A * v[1], w2 = B * v[1];
    auto v2 = solve(A, w2);
    auto v0 = solve(B, w1);
    if (!v2 || !v0) throw Error(ErrorCode::InternalRankContradiction, "intersection vector not in the image");
    v[2] = *v2;
    v[0] = *v0;
    w = {A * v[0], w1, w2, B * v[2]};
  } else {
    throw Error(ErrorCode::InternalRankContradiction, "t outside {2,3,4} for a regular pencil");
  }

  require_basis(v, 3, "v-vectors are dependent");
  if (mat_rank(RatMatrix::from_columns(w, m)) != w.size())
    throw Error(ErrorCode::InternalRankContradiction, "w-vectors are dependent");
  w = extend_to_basis(w, m);

  PencilNormalForm nf;
  nf.t = t;
  auto pinv = inverse(RatMatrix::from_columns(w, m));
  if (!pinv) throw Error(ErrorCode::InternalRankContradiction, "w-basis not invertible");
  nf.P = *pinv;
  nf.Q = RatMatrix::from_columns(v, 3);
  nf.v_basis = std::move(v);
  nf.w_basis = std::move(w);
  if (!verify_normal_form(p, nf)) throw Error(ErrorCode::InternalRankContradiction, "normal form identities fail");
  return nf;
}

PencilPair canonical_pencil(int t, int s) {
  if (t < 2 || t > 4) throw Error(ErrorCode::BadT, "t must be 2, 3 or 4");
  if (s < t) throw Error(ErrorCode::TooSmall, "need s >= t");
  const std::size_t m = static_cast<std::size_t>(s) + 2;
  RatMatrix a(m, 3), b(m, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    a(i, i) = 1;
    b(static_cast<std::size_t>(t) - 1 + i, i) = 1;
  }
  return PencilPair(a, b);
}

bool verify_normal_form(const PencilPair& p, const PencilNormalForm& nf) {
  if (nf.t < 2 || nf.t > 4 || static_cast<std::size_t>(nf.t) > p.s()) return false;
  PencilPair c = canonical_pencil(nf.t, static_cast<int>(p.s()));
  return nf.P * p.A() * nf.Q == c.A() && nf.P * p.B() * nf.Q == c.B();
}

Json to_json(const PencilPair& p) { return {{"A", to_json(p.A())}, {"B", to_json(p.B())}}; }

PencilPair pencil_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B"))
    throw Error(ErrorCode::BadInput, "pencil file needs keys \"A\" and \"B\"");
  return PencilPair(matrix_from_json(j.at("A")), matrix_from_json(j.at("B")));
}

Json to_json(const PencilNormalForm& nf) {
  Json v = Json::array(), w = Json::array();
  for (const auto& x : nf.v_basis) v.push_back(to_json(x));
  for (const auto& x : nf.w_basis) w.push_back(to_json(x));
  return {{"t", nf.t}, {"P", to_json(nf.P)}, {"Q", to_json(nf.Q)}, {"v_basis", v}, {"w_basis", w}};
}

}  // namespace pbl
