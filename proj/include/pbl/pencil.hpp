#pragma once

#include <cstddef>
#include <vector>

#include "pbl/json_io.hpp"
#include "pbl/matrix.hpp"

namespace pbl {

// Pair of (s+2) x 3 matrices defining the pencil uA + vB.
class PencilPair {
 public:
  PencilPair(RatMatrix a, RatMatrix b);
  const RatMatrix& A() const { return a_; }
  const RatMatrix& B() const { return b_; }
  std::size_t s() const { return a_.rows() - 2; }

 private:
  RatMatrix a_, b_;
};

struct PencilNormalForm {
  int t = 0;  // the same integer is written r in some statements
  RatMatrix P;
  RatMatrix Q;
  std::vector<RatVector> v_basis;
  std::vector<RatVector> w_basis;
};

// Regularity for any column count: rank uA+vB is full for every [u:v].
bool pencil_regular(const RatMatrix& a, const RatMatrix& b);
bool pencil_is_regular(const PencilPair& p);
int pencil_t(const PencilPair& p);
PencilNormalForm pencil_normal_form(const PencilPair& p);
PencilPair canonical_pencil(int t, int s);

// True iff P A Q and P B Q are the canonical shapes for nf.t.
bool verify_normal_form(const PencilPair& p, const PencilNormalForm& nf);

Json to_json(const PencilPair& p);
PencilPair pencil_from_json(const Json& j);
Json to_json(const PencilNormalForm& nf);

}  // namespace pbl
