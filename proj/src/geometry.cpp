#include "pbl/geometry.hpp"

#include <numeric>
#include <stdexcept>

#include "pbl/error.hpp"

namespace pbl {

ProjPoint::ProjPoint(RatVector coords) : c_(std::move(coords)) {
  if (is_zero(c_)) throw Error(ErrorCode::BadInput, "projective point with all coordinates zero");
}

ProjPoint ProjPoint::normalized() const {
  RatVector v = c_;
  Rational lead;
  for (const auto& x : v)
    if (!x.is_zero()) {
      lead = x;
      break;
    }
  for (auto& x : v) x /= lead;
  return ProjPoint(std::move(v));
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
  return a.size() == b.size() && a.normalized().c_ == b.normalized().c_;
}

std::vector<Block> x_block(std::size_t nvars) { return {Block{"x", nvars}}; }

Hypersurface make_hypersurface(std::size_t ambient, MultiPoly f) {
  if (f.is_zero() || !f.is_multihomogeneous() || f.nvars() != ambient + 1)
    throw Error(ErrorCode::BadParams, "hypersurface needs a nonzero homogeneous polynomial in ambient+1 variables");
  return Hypersurface{ambient, std::move(f)};
}

bool on_hypersurface(const Hypersurface& h, const ProjPoint& p) {
  if (p.size() != h.ambient + 1) throw Error(ErrorCode::BadInput, "point has the wrong number of coordinates");
  return h.f.evaluate(p.coords()).is_zero();
}

LinearSubspace make_linear_subspace(std::size_t ambient, RatMatrix equations) {
  if (equations.cols() != ambient + 1 || mat_rank(equations) != equations.rows())
    throw Error(ErrorCode::BadParams, "equations must be independent linear forms on the ambient space");
  return LinearSubspace{ambient, std::move(equations)};
}

LinearSubspace even_coordinate_subspace(int n, std::size_t extra) {
  const std::size_t nv = 2 * static_cast<std::size_t>(n) + 2 + extra;
  RatMatrix eq(static_cast<std::size_t>(n) + 1, nv);
  for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) eq(i, 2 * i) = 1;
  return make_linear_subspace(nv - 1, eq);
}

bool subspace_contains(const LinearSubspace& l, const ProjPoint& p) { return is_zero(l.equations * p.coords()); }

Hypersurface vnd_hypersurface(int n, int d) {
  if (n < 2 || d < 2) throw Error(ErrorCode::BadParams, "need n >= 2 and d >= 2");
  const std::size_t nv = 2 * static_cast<std::size_t>(n) + 2;
  auto blocks = x_block(nv);
  MultiPoly f(blocks);
  for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
    Exponent e(nv, 0);
    e[2 * i] = static_cast<unsigned>(d - 1);
    e[2 * i + 1] = 1;
    f.add_term(e, 1);
  }
  return make_hypersurface(nv - 1, f);
}

Hypersurface cone_over(const Hypersurface& h, std::size_t extra) {
  if (extra == 0) return h;
  const std::size_t nv = h.ambient + 1 + extra;
  MultiPoly f(x_block(nv));
  for (const auto& [e, c] : h.f.terms()) {
    Exponent g = e;
    g.resize(nv, 0);
    f.add_term(g, c);
  }
  return Hypersurface{h.ambient + extra, f};
}

bool smooth_at(const Hypersurface& h, const ProjPoint& p) {
  if (!on_hypersurface(h, p)) throw Error(ErrorCode::NotOnHypersurface, "point does not lie on the hypersurface");
  for (std::size_t i = 0; i < h.f.nvars(); ++i)
    if (!h.f.derivative(i).evaluate(p.coords()).is_zero()) return true;
  return false;
}

DeterminantalLocus determinantal_locus(int t) {
  if (t < 2 || t > 4) throw Error(ErrorCode::BadT, "t must be 2, 3 or 4");
  const std::size_t nv = static_cast<std::size_t>(t) + 2;
  auto blocks = x_block(nv);
  auto X = [&](int i) { return MultiPoly::variable(blocks, 0, static_cast<std::size_t>(i)); };
  DeterminantalLocus loc;
  loc.t = t;
  loc.ambient = nv - 1;
  loc.quadrics[0] = X(1) * X(t + 1) - X(2) * X(t);
  loc.quadrics[1] = X(2) * X(t - 1) - X(0) * X(t + 1);
  loc.quadrics[2] = X(0) * X(t) - X(1) * X(t - 1);
  return loc;
}

bool DeterminantalLocus::contains(const ProjPoint& p) const {
  if (p.size() != ambient + 1) throw Error(ErrorCode::BadInput, "point has the wrong number of coordinates");
  for (const auto& q : quadrics)
    if (!q.evaluate(p.coords()).is_zero()) return false;
  return true;
}

bool DeterminantalLocus::smooth_at(const ProjPoint& p) const {
  if (!contains(p)) throw Error(ErrorCode::NotOnHypersurface, "point does not lie on the locus");
  RatMatrix jac(3, ambient + 1);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j <= ambient; ++j) jac(i, j) = quadrics[i].derivative(j).evaluate(p.coords());
  return mat_rank(jac) == expected_codim;
}

bool hyperplane_contains(const RatVector& form, const LinearSubspace& sub) {
  if (form.size() != sub.ambient + 1) throw Error(ErrorCode::BadInput, "linear form has the wrong length");
  RatMatrix stacked = sub.equations.vconcat(RatMatrix::from_rows({form}, form.size()));
  return mat_rank(stacked) == sub.equations.rows();
}

void for_each_grid_point(std::size_t nvars, long radius, const std::function<void(const ProjPoint&)>& fn) {
  if (nvars == 0) return;
  std::vector<long> x(nvars, -radius);
  for (;;) {
    long first = 0, g = 0;
    for (long v : x) {
      if (first == 0) first = v;
      g = std::gcd(g, v);
    }
    if (first > 0 && g == 1) {
      RatVector c(nvars);
      for (std::size_t i = 0; i < nvars; ++i) c[i] = x[i];
      fn(ProjPoint(std::move(c)));
    }
    std::size_t k = nvars;
    while (k > 0) {
      --k;
      if (x[k] < radius) {
        ++x[k];
        break;
      }
      x[k] = -radius;
      if (k == 0) return;
    }
  }
}

std::vector<ProjPoint> grid_points(std::size_t nvars, long radius) {
  std::vector<ProjPoint> out;
  for_each_grid_point(nvars, radius, [&](const ProjPoint& p) { out.push_back(p); });
  return out;
}

std::size_t locus_parameter_count(int t) {
  switch (t) {
    case 2: return 2;
    case 3: return 3;
    case 4: return 5;
    default: throw Error(ErrorCode::BadT, "t must be 2, 3 or 4");
  }
}

ProjPoint locus_sample(int t, const std::vector<Rational>& q) {
  if (q.size() != locus_parameter_count(t)) throw Error(ErrorCode::BadParams, "wrong parameter count");
  switch (t) {
    case 2:  // [s^3 : s^2 u : s u^2 : u^3]
      return ProjPoint({q[0] * q[0] * q[0], q[0] * q[0] * q[1], q[0] * q[1] * q[1], q[1] * q[1] * q[1]});
    case 3:  // rows (X0,X1,X2) and (X2,X3,X4) proportional
      return ProjPoint({q[0], q[1], q[2] * q[0], q[2] * q[1], q[2] * q[2] * q[0]});
    default:  // Segre image of ([a0:a1], [b0:b1:b2])
      return ProjPoint({q[0] * q[2], q[0] * q[3], q[0] * q[4], q[1] * q[2], q[1] * q[3], q[1] * q[4]});
  }
}

}  // namespace pbl
