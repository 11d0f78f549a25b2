#include "pbl/sparse.hpp"

#include <algorithm>
#include <limits>

namespace pbl {

std::map<std::size_t, Rational> SparseEchelon::reduce_map(const SparseVec& v) const {
  std::map<std::size_t, Rational> w(v.begin(), v.end());
  auto it = w.begin();
  while (it != w.end()) {
    auto p = rows_.find(it->first);
    if (p == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const Rational f = it->second;
    for (const auto& [c, val] : p->second) {
      auto [jt, inserted] = w.try_emplace(c, 0);
      jt->second -= f * val;
      if (jt->second.is_zero()) w.erase(jt);
    }
    it = w.upper_bound(col);
  }
  return w;
}

SparseVec SparseEchelon::reduce(const SparseVec& v) const {
  auto w = reduce_map(v);
  return SparseVec(w.begin(), w.end());
}

bool SparseEchelon::add(const SparseVec& v) {
  auto w = reduce_map(v);
  if (w.empty()) return false;
  Rational lead = w.begin()->second;
  SparseVec row;
  row.reserve(w.size());
  for (auto& [c, val] : w) row.emplace_back(c, val / lead);
  std::size_t pc = row.front().first;
  rows_.emplace(pc, std::move(row));
  return true;
}

std::vector<std::size_t> SparseEchelon::pivot_columns() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& [c, r] : rows_) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows)
    if (!r.empty()) width = std::max(width, r.back().first + 1);
  // Augment each row with a unit tag; rows whose data part cancels leave a kernel vector.
  SparseEchelon ech;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVec v = rows[i];
    v.emplace_back(width + i, 1);
    ech.add(v);
  }
  std::vector<SparseVec> out;
  for (auto pc : ech.pivot_columns()) {
    if (pc < width) continue;
    SparseVec k;
    for (const auto& [c, val] : ech.row(pc)) k.emplace_back(c - width, val);
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace pbl
