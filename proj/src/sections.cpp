#include "pbl/sections.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "pbl/error.hpp"
#include "pbl/sparse.hpp"

namespace pbl {

std::vector<Block> section_blocks(const BundlePresentation& bp) {
  return {Block{"x", bp.twists.size()}, Block{"a", static_cast<std::size_t>(bp.n) + 1}};
}

namespace {

int weight(const Exponent& xm, const std::vector<int>& twists) {
  int w = 0;
  for (std::size_t j = 0; j < xm.size(); ++j) w += static_cast<int>(xm[j]) * twists[j];
  return w;
}

std::string key_of(const Exponent& xm, const Exponent& am) {
  std::string k;
  k.reserve(xm.size() + am.size());
  for (auto v : xm) k.push_back(static_cast<char>(v));
  for (auto v : am) k.push_back(static_cast<char>(v));
  return k;
}

// Monomials x^m alpha^beta with |m| = a and |beta| = weight(m) + p.
struct Level {
  std::vector<std::pair<Exponent, Exponent>> elems;
  std::unordered_map<std::string, std::size_t> index;

  Level(const BundlePresentation& bp, int p, int a) {
    const std::size_t n1 = static_cast<std::size_t>(bp.n) + 1;
    for (const auto& xm : monomials_of_degree(bp.twists.size(), static_cast<unsigned>(a))) {
      int deg = weight(xm, bp.twists) + p;
      if (deg < 0) continue;
      for (const auto& am : monomials_of_degree(n1, static_cast<unsigned>(deg))) {
        index.emplace(key_of(xm, am), elems.size());
        elems.emplace_back(xm, am);
      }
    }
  }
  std::size_t size() const { return elems.size(); }
  std::size_t at(const Exponent& xm, const Exponent& am) const { return index.at(key_of(xm, am)); }
};

// Span of rho_k * x^m' * alpha^beta landing in level p.
SparseEchelon ideal_piece(const BundlePresentation& bp, const Level& lvl, int p, int a) {
  SparseEchelon ech;
  if (a == 0) return ech;
  const std::size_t n1 = static_cast<std::size_t>(bp.n) + 1;
  for (const auto& rel : bp.relations) {
    for (const auto& xm : monomials_of_degree(bp.twists.size(), static_cast<unsigned>(a - 1))) {
      int deg = weight(xm, bp.twists) + p + rel.twist;
      if (deg < 0) continue;
      for (const auto& am : monomials_of_degree(n1, static_cast<unsigned>(deg))) {
        std::map<std::size_t, Rational> row;
        for (std::size_t j = 0; j < bp.twists.size(); ++j) {
          Exponent x2 = xm;
          ++x2[j];
          for (const auto& [g, c] : rel.entries[j].terms()) {
            Exponent a2 = am;
            for (std::size_t i = 0; i < n1; ++i) a2[i] += g[i];
            row[lvl.at(x2, a2)] += c;
          }
        }
        SparseVec v;
        for (auto& [col, c] : row)
          if (!c.is_zero()) v.emplace_back(col, c);
        if (!v.empty()) ech.add(v);
      }
    }
  }
  return ech;
}

class Glued {
 public:
  Glued(const BundlePresentation& bp, int a, int b)
      : bp_(bp), a_(a), b_(b), n1_(static_cast<std::size_t>(bp.n) + 1), e_(std::max(b, 1)),
        s0_(bp, 0, a), se_(bp, e_, a), ideal_(ideal_piece(bp, se_, e_, a)) {
    // Normal forms of alpha_j^e * s for every monomial s of level 0.
    nf_.resize(s0_.size());
    for (std::size_t idx = 0; idx < s0_.size(); ++idx) {
      const auto& [xm, am] = s0_.elems[idx];
      for (std::size_t j = 0; j < n1_; ++j) {
        Exponent a2 = am;
        a2[j] += static_cast<unsigned>(e_);
        nf_[idx].push_back(ideal_.reduce({{se_.at(xm, a2), Rational(1)}}));
      }
    }
  }

  // Row of the torsion test for monomial idx.
  SparseVec torsion_row(std::size_t idx) const {
    SparseVec row;
    for (std::size_t j = 0; j < n1_; ++j)
      for (const auto& [c, v] : nf_[idx][j]) row.emplace_back(j * se_.size() + c, v);
    return row;
  }

  // Row of the gluing map for unknown (chart i, monomial idx).
  SparseVec gluing_row(std::size_t i, std::size_t idx) const {
    std::map<std::size_t, Rational> row;
    std::size_t pi = 0;
    for (std::size_t p = 0; p < n1_; ++p)
      for (std::size_t q = p + 1; q < n1_; ++q, ++pi) {
        // pair (p,q): alpha_q^b s_p - alpha_p^b s_q
        if (p == i)
          for (const auto& [c, v] : nf_[idx][q]) row[pi * se_.size() + c] += v;
        if (q == i)
          for (const auto& [c, v] : nf_[idx][p]) row[pi * se_.size() + c] -= v;
      }
    SparseVec out;
    for (auto& [c, v] : row)
      if (!v.is_zero()) out.emplace_back(c, v);
    return out;
  }

  std::size_t torsion_rank() const {
    SparseEchelon z;
    for (std::size_t idx = 0; idx < s0_.size(); ++idx) z.add(torsion_row(idx));
    return z.rank();
  }

  Count dimension() const {
    const Count s0 = static_cast<Count>(s0_.size());
    const Count z0 = s0 - static_cast<Count>(torsion_rank());
    if (b_ == 0) return s0 - z0;
    SparseEchelon m;
    for (std::size_t i = 0; i < n1_; ++i)
      for (std::size_t idx = 0; idx < s0_.size(); ++idx) m.add(gluing_row(i, idx));
    const Count sol = static_cast<Count>(n1_) * s0 - static_cast<Count>(m.rank());
    return sol - static_cast<Count>(n1_) * z0;
  }

  std::vector<std::vector<MultiPoly>> basis() const {
    std::vector<SparseVec> trows;
    for (std::size_t idx = 0; idx < s0_.size(); ++idx) trows.push_back(torsion_row(idx));
    std::vector<SparseVec> torsion = left_kernel(trows);
    std::vector<std::vector<MultiPoly>> out;
    if (b_ == 0) {
      SparseEchelon z;
      for (const auto& v : torsion) z.add(v);
      for (std::size_t idx = 0; idx < s0_.size(); ++idx)
        if (!z.is_pivot(idx)) out.push_back({to_poly({{idx, Rational(1)}}, 0)});
      return out;
    }
    std::vector<SparseVec> grows;
    for (std::size_t i = 0; i < n1_; ++i)
      for (std::size_t idx = 0; idx < s0_.size(); ++idx) grows.push_back(gluing_row(i, idx));
    SparseEchelon q;
    for (std::size_t i = 0; i < n1_; ++i)
      for (const auto& v : torsion) {
        SparseVec shifted;
        for (const auto& [c, val] : v) shifted.emplace_back(i * s0_.size() + c, val);
        q.add(shifted);
      }
    for (const auto& k : left_kernel(grows)) {
      if (!q.add(k)) continue;
      std::vector<MultiPoly> tuple;
      for (std::size_t i = 0; i < n1_; ++i) tuple.push_back(to_poly(k, i * s0_.size()));
      out.push_back(std::move(tuple));
    }
    return out;
  }

 private:
  MultiPoly to_poly(const SparseVec& v, std::size_t offset) const {
    const auto blocks = section_blocks(bp_);
    MultiPoly p(blocks);
    for (const auto& [c, val] : v) {
      if (c < offset || c >= offset + s0_.size()) continue;
      const auto& [xm, am] = s0_.elems[c - offset];
      Exponent e = xm;
      e.insert(e.end(), am.begin(), am.end());
      p.add_term(e, val);
    }
    return p;
  }

  const BundlePresentation& bp_;
  int a_, b_;
  std::size_t n1_;
  int e_;
  Level s0_, se_;
  SparseEchelon ideal_;
  std::vector<std::vector<SparseVec>> nf_;
};

Count split_dimension(const BundlePresentation& bp, int a, int b) {
  Count total = 0;
  for (const auto& xm : monomials_of_degree(bp.twists.size(), static_cast<unsigned>(a)))
    total += h0_line(bp.n, weight(xm, bp.twists) - b);
  return total;
}

void check_args(int a, int b) {
  if (a < 0 || b < 0) throw Error(ErrorCode::BadParams, "need a >= 0 and b >= 0");
}

}  // namespace

SectionCount glued_section_dimension(const BundlePresentation& bp, int a, int b) {
  check_args(a, b);
  return {Glued(bp, a, b).dimension(), false};
}

SectionCount section_dimension(const BundlePresentation& bp, int a, int b) {
  check_args(a, b);
  if (bp.is_split()) return {split_dimension(bp, a, b), true};
  return glued_section_dimension(bp, a, b);
}

SectionSpace section_space(const BundlePresentation& bp, int a, int b) {
  check_args(a, b);
  SectionSpace s;
  s.a = a;
  s.b = b;
  if (bp.is_split()) {
    s.method = "split-closed-form";
    s.exact = true;
    const auto blocks = section_blocks(bp);
    for (const auto& xm : monomials_of_degree(bp.twists.size(), static_cast<unsigned>(a))) {
      int deg = weight(xm, bp.twists) - b;
      if (deg < 0) continue;
      for (const auto& am : monomials_of_degree(static_cast<std::size_t>(bp.n) + 1, static_cast<unsigned>(deg))) {
        Exponent e = xm;
        e.insert(e.end(), am.begin(), am.end());
        s.basis.push_back({MultiPoly::monomial(blocks, e)});
      }
    }
  } else {
    s.method = "glued-charts";
    s.exact = false;
    s.basis = Glued(bp, a, b).basis();
  }
  s.dimension = static_cast<Count>(s.basis.size());
  return s;
}

SlopeResult slope_trace(const BundlePresentation& bp, int a_max) {
  if (a_max < 1) throw Error(ErrorCode::BadParams, "a_max must be positive");
  const int c1 = std::max(bp.first_chern(), 0);
  SlopeResult res{Rational(0), {}};
  for (int a = 1; a <= a_max; ++a) {
    int b = 0;
    while (b + 1 <= a * c1 && section_dimension(bp, a, b + 1).dimension > 0) ++b;
    res.last_positive_b.push_back(b);
    Rational q(b, a);
    if (q > res.c) res.c = q;
  }
  return res;
}

Rational cone_slope(const BundlePresentation& bp, int a_max) {
  if (a_max < 2) throw Error(ErrorCode::BadParams, "a_max must be at least 2");
  return slope_trace(bp, a_max).c;
}

}  // namespace pbl
