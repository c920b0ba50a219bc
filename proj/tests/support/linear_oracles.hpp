#pragma once

// Textbook exact linear algebra used to build test inputs and to cross-check
// the library's elimination.

#include <cstddef>
#include <random>

#include "stacky/cyclotomic.hpp"
#include "stacky/rational_matrix.hpp"

namespace oracle {

using stacky::corr::Rational;
using stacky::corr::QMatrix;

inline QMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = stacky::cyclo::make_rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 4));
  return m;
}

// Rank by plain Gaussian elimination over Q (no fraction-free tricks).
inline std::size_t plain_rank(QMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

// Inverse of a square matrix by Gauss-Jordan; returns false when singular.
inline bool invert(QMatrix m, QMatrix& inv) {
  const std::size_t n = m.rows();
  inv = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return false;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(p, j), m(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    const Rational d = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= d;
      inv(c, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return true;
}

// A (B A)^-1 B is idempotent of rank k for A n x k and B k x n with BA
// invertible.
inline QMatrix random_idempotent(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  while (true) {
    const QMatrix a = random_matrix(rng, n, k);
    const QMatrix b = random_matrix(rng, k, n);
    QMatrix inv;
    if (!invert(b * a, inv)) continue;
    return a * inv * b;
  }
}

}  // namespace oracle
