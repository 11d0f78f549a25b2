#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pbl/matrix.hpp"
#include "pbl/rational.hpp"

namespace pbl {

struct Block {
  std::string name;
  std::size_t arity = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

// Flattened exponent vector: block 0 variables first, then block 1, ...
using Exponent = std::vector<unsigned>;

// Sparse polynomial over Q in several named blocks of variables.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<Block> blocks);

  static MultiPoly constant(const std::vector<Block>& blocks, const Rational& c);
  static MultiPoly variable(const std::vector<Block>& blocks, std::size_t block, std::size_t i);
  static MultiPoly monomial(const std::vector<Block>& blocks, Exponent e, const Rational& c = 1);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t var_index(std::size_t block, std::size_t i) const;
  std::size_t block_offset(std::size_t block) const;
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  void add_term(const Exponent& e, const Rational& c);
  Rational coefficient(const Exponent& e) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  MultiPoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.blocks_ == b.blocks_ && a.terms_ == b.terms_;
  }
  MultiPoly pow(unsigned k) const;

  // Values for all variables, flattened in block order.
  Rational evaluate(const RatVector& values) const;
  // Substitute numbers for one block; the block keeps its arity but no longer occurs.
  MultiPoly substitute_block(std::size_t block, const RatVector& values) const;
  // Replace every variable by a polynomial; all images share one block layout.
  MultiPoly compose(const std::vector<MultiPoly>& images) const;
  MultiPoly derivative(std::size_t var) const;

  // Total degree within a block (max over terms); -1 for the zero polynomial.
  int degree_in_block(std::size_t block) const;
  int degree_in_var(std::size_t var) const;
  bool is_homogeneous_in_block(std::size_t block) const;
  bool is_multihomogeneous() const;
  // Coefficients c_k with p = sum_k c_k * var^k; c_k no longer involve var.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;

  // Terms in graded lexicographic order within each block, blocks compared in declared order.
  std::vector<std::pair<Exponent, Rational>> sorted_terms() const;
  std::string str() const;

 private:
  std::vector<Block> blocks_;
  std::size_t nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

// Comparator realizing the order of sorted_terms(): true if a comes first.
bool monomial_precedes(const std::vector<Block>& blocks, const Exponent& a, const Exponent& b);

}  // namespace pbl

namespace pbl {

// Exponent vectors of total degree deg in nv variables, lexicographically decreasing.
std::vector<Exponent> monomials_of_degree(std::size_t nv, unsigned deg);

}  // namespace pbl
