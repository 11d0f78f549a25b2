#include "pbl/incidence.hpp"

#include <algorithm>

#include "pbl/binary_form.hpp"
#include "pbl/error.hpp"
#include "pbl/resultant.hpp"

namespace pbl {

std::vector<Block> incidence_blocks(int n, std::size_t target_size) {
  return {Block{"a", static_cast<std::size_t>(n) + 1}, Block{"x", target_size}};
}

std::vector<MultiPoly> IncidenceModel::constraints() const {
  std::vector<MultiPoly> all = relation_constraints;
  all.insert(all.end(), proportionality_minors.begin(), proportionality_minors.end());
  return all;
}

namespace {

// c * alpha^g * x_idx in the incidence ring.
MultiPoly incidence_term(const std::vector<Block>& blocks, const Exponent& g, std::size_t idx, const Rational& c) {
  Exponent e(blocks[0].arity + blocks[1].arity, 0);
  std::copy(g.begin(), g.end(), e.begin());
  e[blocks[0].arity + idx] += 1;
  return MultiPoly::monomial(blocks, e, c);
}

MultiPoly relation_constraint(const BundlePresentation& bp, const Relation& rel, const std::vector<Block>& blocks) {
  MultiPoly rho(blocks);
  for (std::size_t j = 0; j < bp.twists.size(); ++j) {
    const MultiPoly& f = rel.entries[j];
    if (f.is_zero()) continue;
    if (bp.twists[j] == 0) {
      for (const auto& [g, c] : f.terms()) rho += incidence_term(blocks, g, bp.layout[j][0], c);
    } else if (bp.twists[j] == 1) {
      // f(alpha) y with u = y alpha: peel the lowest-index alpha variable into u.
      for (const auto& [g, c] : f.terms()) {
        auto it = std::find_if(g.begin(), g.end(), [](unsigned k) { return k > 0; });
        if (it == g.end()) throw Error(ErrorCode::UnsupportedModel, "constant relation entry on an O(1) slot");
        const std::size_t i = static_cast<std::size_t>(it - g.begin());
        Exponent h = g;
        --h[i];
        rho += incidence_term(blocks, h, bp.layout[j][i], c);
      }
    } else {
      throw Error(ErrorCode::UnsupportedModel, "relations touching twist >= 2 slots");
    }
  }
  return rho;
}

std::vector<Exponent> quadratic_monomials(int n) { return monomials_of_degree(static_cast<std::size_t>(n) + 1, 2); }

}  // namespace

IncidenceModel incidence_model(const BundlePresentation& bp) {
  const auto blocks = incidence_blocks(bp.n, bp.target_size);
  const std::size_t n1 = static_cast<std::size_t>(bp.n) + 1;
  IncidenceModel m;
  m.alpha_arity = n1;
  m.x_arity = bp.target_size;
  for (const auto& rel : bp.relations) m.relation_constraints.push_back(relation_constraint(bp, rel, blocks));
  for (std::size_t j = 0; j < bp.twists.size(); ++j) {
    const int d = bp.twists[j];
    if (d == 0) continue;
    std::vector<Exponent> mons = monomials_of_degree(n1, static_cast<unsigned>(d));
    if (d == 1) m.proportional_blocks.push_back(bp.layout[j]);
    for (std::size_t p = 0; p < mons.size(); ++p)
      for (std::size_t q = p + 1; q < mons.size(); ++q)
        m.proportionality_minors.push_back(incidence_term(blocks, mons[q], bp.layout[j][p], 1) -
                                           incidence_term(blocks, mons[p], bp.layout[j][q], 1));
  }
  return m;
}

std::string FiberClass::str() const {
  switch (kind) {
    case FiberKind::Empty: return "Empty";
    case FiberKind::Point: return "Point";
    case FiberKind::LinearPk: return "LinearPk(" + std::to_string(ambient) + ")";
    case FiberKind::HypersurfaceInLine: return "HypersurfaceInLine";
    case FiberKind::HypersurfaceInPn: return "HypersurfaceInPn(" + std::to_string(ambient) + ")";
  }
  return "?";
}

namespace {

FiberClass empty_fiber() { return {FiberKind::Empty, -1, 0}; }
FiberClass point_fiber() { return {FiberKind::Point, 0, 0}; }
FiberClass linear_fiber(int k) { return k == 0 ? point_fiber() : FiberClass{FiberKind::LinearPk, k, k}; }

RatVector gather(const ProjPoint& x, const std::vector<std::size_t>& idx) {
  RatVector v;
  for (auto i : idx) v.push_back(x[i]);
  return v;
}

FiberClass solve_alpha_system(const std::vector<MultiPoly>& polys, std::size_t n1, std::size_t x_arity) {
  std::vector<RatVector> linear_rows;
  std::vector<const MultiPoly*> nonlinear;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    const int deg = p.degree_in_block(0);
    if (deg == 0) return empty_fiber();
    if (deg == 1) {
      RatVector row(n1);
      for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < n1; ++i)
          if (e[i]) row[i] += c;
      linear_rows.push_back(row);
    } else {
      nonlinear.push_back(&p);
    }
  }
  std::vector<RatVector> basis;
  if (linear_rows.empty()) {
    for (std::size_t i = 0; i < n1; ++i) basis.push_back(unit_vector(n1, i));
  } else {
    basis = kernel_basis(RatMatrix::from_rows(linear_rows, n1));
  }
  if (basis.empty()) return empty_fiber();
  const int k = static_cast<int>(basis.size()) - 1;

  // alpha = sum_j t_j basis_j
  const std::vector<Block> tb{Block{"t", basis.size()}};
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < n1; ++i) {
    MultiPoly img(tb);
    for (std::size_t j = 0; j < basis.size(); ++j) img += MultiPoly::variable(tb, 0, j) * basis[j][i];
    images.push_back(img);
  }
  for (std::size_t i = 0; i < x_arity; ++i) images.emplace_back(tb);
  std::vector<MultiPoly> restricted;
  for (const auto* p : nonlinear) {
    MultiPoly r = p->compose(images);
    if (!r.is_zero()) restricted.push_back(std::move(r));
  }
  if (restricted.empty()) return linear_fiber(k);
  if (k == 0) return empty_fiber();
  if (k == 1) {
    std::vector<BinaryForm> forms;
    for (const auto& r : restricted) {
      const int deg = r.degree_in_block(0);
      std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
      for (const auto& [e, v] : r.terms()) c[e[0]] = v;  // u = t0, v = t1
      forms.emplace_back(deg, c);
    }
    if (binary_forms_common_root(forms)) return {FiberKind::HypersurfaceInLine, 0, 1};
    return empty_fiber();
  }
  if (restricted.size() == 1) return {FiberKind::HypersurfaceInPn, k - 1, k};
  throw Error(ErrorCode::UnsupportedModel, "several nonlinear alpha-constraints on a subspace of dimension >= 2");
}

}  // namespace

FiberClass fiber_over(const BundlePresentation& bp, const ProjPoint& x) {
  if (x.size() != bp.target_size) throw Error(ErrorCode::BadInput, "point has the wrong number of coordinates");
  const std::size_t n1 = static_cast<std::size_t>(bp.n) + 1;

  std::vector<std::size_t> nonzero_blocks;
  for (std::size_t j = 0; j < bp.twists.size(); ++j)
    if (bp.twists[j] > 0 && !is_zero(gather(x, bp.layout[j]))) nonzero_blocks.push_back(j);

  for (std::size_t j : nonzero_blocks) {
    if (bp.twists[j] > 2) throw Error(ErrorCode::UnsupportedModel, "twist above 2");
    if (bp.twists[j] == 2) {
      if (nonzero_blocks.size() > 1 || !bp.is_split())
        throw Error(ErrorCode::UnsupportedModel, "twist-2 slot combined with other constraints");
      // The block must be alpha alpha^T: a symmetric matrix of rank one.
      auto mons = quadratic_monomials(bp.n);
      RatMatrix sym(n1, n1);
      for (std::size_t p = 0; p < mons.size(); ++p) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n1; ++i)
          for (unsigned k = 0; k < mons[p][i]; ++k) idx.push_back(i);
        sym(idx[0], idx[1]) = x[bp.layout[j][p]];
        sym(idx[1], idx[0]) = x[bp.layout[j][p]];
      }
      return mat_rank(sym) <= 1 ? point_fiber() : empty_fiber();
    }
  }

  IncidenceModel m = incidence_model(bp);
  if (!nonzero_blocks.empty()) {
    // alpha is fixed by the first nonzero O(1) block.
    RatVector alpha = gather(x, bp.layout[nonzero_blocks.front()]);
    for (std::size_t j : nonzero_blocks) {
      RatMatrix two = RatMatrix::from_rows({alpha, gather(x, bp.layout[j])}, n1);
      if (mat_rank(two) > 1) return empty_fiber();
    }
    RatVector values = alpha;
    values.insert(values.end(), x.coords().begin(), x.coords().end());
    for (const auto& c : m.relation_constraints)
      if (!c.evaluate(values).is_zero()) return empty_fiber();
    return point_fiber();
  }

  std::vector<MultiPoly> polys;
  for (const auto& c : m.relation_constraints) polys.push_back(c.substitute_block(1, x.coords()));
  try {
    return solve_alpha_system(polys, n1, bp.target_size);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnsupportedModel && bp.tag != BundleTag::Custom)
      throw Error(ErrorCode::InternalRankContradiction, std::string("catalog model escaped the solvers: ") + e.what());
    throw;
  }
}

std::vector<MultiPoly> image_equations(const BundlePresentation& bp) {
  const auto blocks = x_block(bp.target_size);
  auto X = [&](std::size_t i) { return MultiPoly::variable(blocks, 0, i); };
  const std::size_t n1 = static_cast<std::size_t>(bp.n) + 1;
  std::vector<MultiPoly> eqs;
  switch (bp.tag) {
    case BundleTag::SectionFstar: {
      MultiPoly f(blocks);
      for (std::size_t i = 0; i < n1; ++i)
        f += X(bp.layout[0][i]).pow(static_cast<unsigned>(bp.params.d - 1)) * X(bp.layout[1 + i][0]);
      eqs.push_back(f);
      break;
    }
    case BundleTag::Type3: {
      MultiPoly q(blocks), h(blocks);
      const auto& s = bp.params.section;
      for (std::size_t i = 0; i < n1; ++i) {
        q += X(bp.layout[0][i]) * X(bp.layout[1 + i][0]);
        h += X(bp.layout[0][i]) * s[i] + X(bp.layout[1 + i][0]) * s[n1 + i];
      }
      for (std::size_t k = 0; k + 2 * n1 < s.size(); ++k) h += X(bp.layout[1 + n1 + k][0]) * s[2 * n1 + k];
      eqs.push_back(q);
      if (!h.is_zero()) eqs.push_back(h);
      break;
    }
    case BundleTag::DrumBundle: {
      if (bp.params.drum_id != "ptangent") throw Error(ErrorCode::NoImageEquation, "no image equation registered");
      MultiPoly q(blocks);
      for (std::size_t i = 0; i < n1; ++i) q += X(bp.layout[0][i]) * X(bp.layout[1 + i][0]);
      eqs.push_back(q);
      break;
    }
    case BundleTag::Type1: {
      // 2x2 minors of the symmetric matrix of the O(2) block.
      auto mons = quadratic_monomials(bp.n);
      std::vector<std::vector<std::size_t>> at(n1, std::vector<std::size_t>(n1));
      for (std::size_t p = 0; p < mons.size(); ++p) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n1; ++i)
          for (unsigned k = 0; k < mons[p][i]; ++k) idx.push_back(i);
        at[idx[0]][idx[1]] = at[idx[1]][idx[0]] = bp.layout[0][p];
      }
      for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t i2 = i + 1; i2 < n1; ++i2)
          for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t j2 = j + 1; j2 < n1; ++j2) {
              MultiPoly mnr = X(at[i][j]) * X(at[i2][j2]) - X(at[i][j2]) * X(at[i2][j]);
              if (!mnr.is_zero() && std::find(eqs.begin(), eqs.end(), mnr) == eqs.end()) eqs.push_back(mnr);
            }
      break;
    }
    case BundleTag::Type2: {
      for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = i + 1; j < n1; ++j)
          eqs.push_back(X(bp.layout[0][i]) * X(bp.layout[1][j]) - X(bp.layout[0][j]) * X(bp.layout[1][i]));
      break;
    }
    default:
      throw Error(ErrorCode::NoImageEquation, "no image equation registered for " + tag_name(bp.tag));
  }
  return eqs;
}

bool image_membership(const BundlePresentation& bp, const ProjPoint& x) {
  if (x.size() != bp.target_size) throw Error(ErrorCode::BadInput, "point has the wrong number of coordinates");
  for (const auto& f : image_equations(bp))
    if (!f.evaluate(x.coords()).is_zero()) return false;
  return true;
}

Rational nowhere_vanishing_resultant(int d, int n, const RatVector& x) {
  if (d < 2 || n < 1) throw Error(ErrorCode::BadParams, "need d >= 2 and n >= 1");
  const std::size_t n1 = static_cast<std::size_t>(n) + 1;
  if (x.size() != 2 * n1) throw Error(ErrorCode::BadParams, "x must have length 2n+2");
  if (is_zero(x)) throw Error(ErrorCode::BadParams, "x must be nonzero");
  const std::vector<Block> yb{Block{"y", n1}};
  MultiPoly f(yb);
  std::vector<RootConstraint> cons;
  for (std::size_t i = 0; i < n1; ++i) {
    MultiPoly y = MultiPoly::variable(yb, 0, i);
    f += y * x[2 * i];
    cons.push_back({i, y.pow(static_cast<unsigned>(d - 1)) - MultiPoly::constant(yb, x[2 * i + 1])});
  }
  MultiPoly r = iterated_resultant(f, cons);
  return r.evaluate(RatVector(n1));
}

bool nowhere_vanishing_section(int d, int n, const RatVector& x) {
  return !nowhere_vanishing_resultant(d, n, x).is_zero();
}

}  // namespace pbl
