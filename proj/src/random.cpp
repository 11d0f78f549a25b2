#include "pbl/random.hpp"

#include <limits>

namespace pbl {

long Rng::uniform(long lo, long hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = eng_();
  } while (x >= limit);
  return lo + static_cast<long>(x % range);
}

Rational Rng::rational(long num_bound, long den_bound) {
  long n = uniform(-num_bound, num_bound);
  long d = uniform(1, den_bound);
  return Rational(n, d);
}

RatMatrix Rng::integer_matrix(std::size_t rows, std::size_t cols, long bound) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(-bound, bound);
  return m;
}

RatMatrix Rng::invertible_matrix(std::size_t n, long bound) {
  for (;;) {
    RatMatrix m = integer_matrix(n, n, bound);
    if (mat_rank(m) == n) return m;
  }
}

}  // namespace pbl
