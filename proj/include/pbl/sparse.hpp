#pragma once

#include <cstddef>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pbl/rational.hpp"

namespace pbl {

// Sparse vector: (column, value) pairs with strictly increasing columns and nonzero values.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

// Incremental row echelon basis of a subspace of Q^N for sparse vectors.
// Each stored row has leading coefficient 1 at its pivot column.
class SparseEchelon {
 public:
  // Normal form of v modulo the span: no entry remains in a pivot column.
  SparseVec reduce(const SparseVec& v) const;
  // Adds v to the span; returns true if it was independent.
  bool add(const SparseVec& v);

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }
  std::vector<std::size_t> pivot_columns() const;
  const SparseVec& row(std::size_t pivot) const { return rows_.at(pivot); }

 private:
  std::map<std::size_t, Rational> reduce_map(const SparseVec& v) const;
  std::unordered_map<std::size_t, SparseVec> rows_;
};

// Left kernel of a list of sparse rows: combinations (as sparse vectors over row indices)
// that vanish. Row indices are returned in increasing pivot order.
std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows);

}  // namespace pbl
