#pragma once

#include <cstdint>

namespace pbl {

using Count = std::int64_t;

// C(n, k), zero outside 0 <= k <= n.
Count binomial(Count n, Count k);

// h^0(P^n, O(k))
Count h0_line(int n, int k);
// h^q(P^n, Omega^p(k))
Count bott_h(int n, int p, int q, int k);
// h^0(P^n, T(i)) from the Euler sequence
Count h0_tangent_twist(int n, int i);

}  // namespace pbl
