#pragma once

/* Shared test helpers: a deterministic small-value generator and a few
 * brute-force oracles that the main library must agree with. */

#include <cstdint>
#include <random>
#include <vector>

#include "burnside/field.hpp"
#include "burnside/matrix.hpp"

namespace burnside::testing {

class SmallRng {
 public:
  explicit SmallRng(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng_);
  }

  /* small rational with numerator in [-4, 4] and denominator in [1, 3] */
  template <Field K>
  K scalar() {
    long num = integer(-4, 4);
    long den = integer(1, 3);
    return k_int<K>(num) / k_int<K>(den);
  }

  template <Field K>
  Matrix<K> matrix(std::size_t rows, std::size_t cols, int sparsity_pct = 60) {
    Matrix<K> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (integer(0, 99) >= sparsity_pct) m.at(r, c) = scalar<K>();
    return m;
  }

  template <Field K>
  Vec<K> vector(std::size_t n) {
    Vec<K> v(n, k_zero<K>());
    for (auto& x : v) x = scalar<K>();
    return v;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace burnside::testing
