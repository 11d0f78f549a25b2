#include "pbl/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pbl {

MultiPoly::MultiPoly(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) nvars_ += b.arity;
}

MultiPoly MultiPoly::constant(const std::vector<Block>& blocks, const Rational& c) {
  MultiPoly p(blocks);
  p.add_term(Exponent(p.nvars_, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const std::vector<Block>& blocks, std::size_t block, std::size_t i) {
  MultiPoly p(blocks);
  Exponent e(p.nvars_, 0);
  e[p.var_index(block, i)] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(const std::vector<Block>& blocks, Exponent e, const Rational& c) {
  MultiPoly p(blocks);
  if (e.size() != p.nvars_) throw std::invalid_argument("exponent length mismatch");
  p.add_term(e, c);
  return p;
}

std::size_t MultiPoly::block_offset(std::size_t block) const {
  if (block >= blocks_.size()) throw std::out_of_range("no such block");
  std::size_t off = 0;
  for (std::size_t b = 0; b < block; ++b) off += blocks_[b].arity;
  return off;
}

std::size_t MultiPoly::var_index(std::size_t block, std::size_t i) const {
  if (block >= blocks_.size() || i >= blocks_[block].arity) throw std::out_of_range("no such variable");
  return block_offset(block) + i;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (blocks_.empty() && nvars_ == 0 && terms_.empty()) *this = MultiPoly(o.blocks_);
  if (!(o.blocks_ == blocks_) && !o.terms_.empty()) throw std::invalid_argument("block layout mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (blocks_.empty() && nvars_ == 0 && terms_.empty()) *this = MultiPoly(o.blocks_);
  if (!(o.blocks_ == blocks_) && !o.terms_.empty()) throw std::invalid_argument("block layout mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.blocks_ == b.blocks_)) throw std::invalid_argument("block layout mismatch");
  MultiPoly p(a.blocks_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(blocks_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Rational MultiPoly::evaluate(const RatVector& values) const {
  if (values.size() != nvars_) throw std::invalid_argument("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_ && !t.is_zero(); ++i)
      if (e[i]) t *= pbl::pow(values[i], e[i]);
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute_block(std::size_t block, const RatVector& values) const {
  std::size_t off = block_offset(block);
  if (values.size() != blocks_[block].arity) throw std::invalid_argument("block value length mismatch");
  MultiPoly p(blocks_);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    Exponent f = e;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (e[off + i]) t *= pbl::pow(values[i], e[off + i]);
      f[off + i] = 0;
    }
    p.add_term(f, t);
  }
  return p;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
  if (images.size() != nvars_) throw std::invalid_argument("compose needs one image per variable");
  if (images.empty()) return *this;
  const auto& tb = images.front().blocks();
  MultiPoly out(tb);
  // Cache powers of images per variable.
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(tb, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(tb, 1));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[e[i]];
    }
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly p(blocks_);
  for (const auto& [e, c] : terms_) {
    if (!e[var]) continue;
    Exponent f = e;
    --f[var];
    p.add_term(f, c * Rational(static_cast<long>(e[var])));
  }
  return p;
}

int MultiPoly::degree_in_block(std::size_t block) const {
  std::size_t off = block_offset(block);
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < blocks_[block].arity; ++i) d += static_cast<int>(e[off + i]);
    best = std::max(best, d);
  }
  return best;
}

int MultiPoly::degree_in_var(std::size_t var) const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e[var]));
  return best;
}

bool MultiPoly::is_homogeneous_in_block(std::size_t block) const {
  std::size_t off = block_offset(block);
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < blocks_[block].arity; ++i) d += static_cast<int>(e[off + i]);
    if (deg >= 0 && d != deg) return false;
    deg = d;
  }
  return true;
}

bool MultiPoly::is_multihomogeneous() const {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (!is_homogeneous_in_block(b)) return false;
  return true;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  int d = degree_in_var(var);
  std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(d + 1, 0)), MultiPoly(blocks_));
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    out[e[var]].add_term(f, c);
  }
  return out;
}

bool monomial_precedes(const std::vector<Block>& blocks, const Exponent& a, const Exponent& b) {
  std::size_t off = 0;
  for (const auto& blk : blocks) {
    unsigned da = 0, db = 0;
    for (std::size_t i = 0; i < blk.arity; ++i) {
      da += a[off + i];
      db += b[off + i];
    }
    if (da != db) return da > db;
    for (std::size_t i = 0; i < blk.arity; ++i)
      if (a[off + i] != b[off + i]) return a[off + i] > b[off + i];
    off += blk.arity;
  }
  return false;
}

std::vector<std::pair<Exponent, Rational>> MultiPoly::sorted_terms() const {
  std::vector<std::pair<Exponent, Rational>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [this](const auto& x, const auto& y) {
    return monomial_precedes(blocks_, x.first, y.first);
  });
  return v;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted_terms()) {
    Rational a = c;
    if (a.sign() < 0) {
      os << (first ? "-" : " - ");
      a = -a;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    std::vector<std::string> factors;
    std::size_t off = 0;
    for (const auto& blk : blocks_) {
      for (std::size_t i = 0; i < blk.arity; ++i) {
        unsigned k = e[off + i];
        if (!k) continue;
        std::string f = blk.name + std::to_string(i);
        if (k > 1) f += "^" + std::to_string(k);
        factors.push_back(f);
      }
      off += blk.arity;
    }
    if (factors.empty() || a != Rational(1)) factors.insert(factors.begin(), a.pretty());
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

}  // namespace pbl

namespace pbl {

namespace {

void fill_monomials(std::size_t pos, unsigned left, Exponent& cur, std::vector<Exponent>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (unsigned k = left + 1; k-- > 0;) {
    cur[pos] = k;
    fill_monomials(pos + 1, left - k, cur, out);
  }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t nv, unsigned deg) {
  std::vector<Exponent> out;
  if (nv == 0) {
    if (deg == 0) out.emplace_back();
    return out;
  }
  Exponent cur(nv, 0);
  fill_monomials(0, deg, cur, out);
  return out;
}

}  // namespace pbl
