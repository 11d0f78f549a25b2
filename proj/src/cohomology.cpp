#include "pbl/cohomology.hpp"

#include "pbl/error.hpp"

namespace pbl {

Count binomial(Count n, Count k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count r = 1;
  for (Count i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Count h0_line(int n, int k) {
  if (n < 1) throw Error(ErrorCode::BadParams, "n must be at least 1");
  return k >= 0 ? binomial(n + k, n) : 0;
}

Count bott_h(int n, int p, int q, int k) {
  if (p < 0 || p > n || q < 0 || q > n) throw Error(ErrorCode::BadParams, "need 0 <= p, q <= n");
  if (q == 0) {
    if (p == 0 && k == 0) return 1;
    if (k > p) return binomial(k + n - p, k) * binomial(k - 1, p);
    return 0;
  }
  if (q == n) {
    if (p == n && k == 0) return 1;
    if (k < p - n) return binomial(-k + p, -k) * binomial(-k - 1, n - p);
    return 0;
  }
  return (k == 0 && p == q) ? 1 : 0;
}

Count h0_tangent_twist(int n, int i) {
  if (n < 1) throw Error(ErrorCode::BadParams, "n must be at least 1");
  if (i < -1) return 0;
  return (n + 1) * h0_line(n, i + 1) - h0_line(n, i);
}

}  // namespace pbl
