#pragma once

#include <cstdint>
#include <random>

#include "pbl/matrix.hpp"

namespace pbl {

// Seeded generator with platform-independent bounded draws
// (std distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  Rational rational(long num_bound, long den_bound);
  RatMatrix integer_matrix(std::size_t rows, std::size_t cols, long bound);
  RatMatrix invertible_matrix(std::size_t n, long bound);

 private:
  std::mt19937_64 eng_;
};

}  // namespace pbl
