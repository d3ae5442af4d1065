#pragma once

#include <random>

#include "symsurg/lattice.hpp"

namespace testutil {

using symsurg::Rational;
using symsurg::lattice::RatMatrix;

inline Rational random_rational(std::mt19937& rng, long max_abs = 9) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long> den(1, max_abs);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng, long max_abs = 9) {
  for (;;) {
    Rational r = random_rational(rng, max_abs);
    if (!r.is_zero()) return r;
  }
}

inline RatMatrix random_matrix(std::mt19937& rng, int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = random_rational(rng, 4);
  return m;
}

inline RatMatrix random_symmetric(std::mt19937& rng, int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      m.at(i, j) = random_rational(rng, 4);
      m.at(j, i) = m.at(i, j);
    }
  return m;
}

// invertible integer matrix built from elementary row operations
inline RatMatrix random_unimodular(std::mt19937& rng, int n, int ops = 8) {
  RatMatrix s = RatMatrix::identity(n);
  std::uniform_int_distribution<int> row(0, n - 1);
  std::uniform_int_distribution<long> coef(-2, 2);
  for (int k = 0; k < ops; ++k) {
    int i = row(rng), j = row(rng);
    if (i == j) continue;
    const Rational c(coef(rng));
    for (int col = 0; col < n; ++col) s.at(i, col) += c * s.at(j, col);
  }
  return s;
}

inline RatMatrix transpose(const RatMatrix& m) {
  RatMatrix t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

}  // namespace testutil
