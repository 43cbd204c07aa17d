// Test-only oracles, kept independent of the library code paths they check.
#pragma once

#include <random>
#include <vector>

#include "specden/rational.hpp"
#include "specden/tridiagonal.hpp"

namespace specden::testing {

// Fraction-free (Bareiss) determinant of a dense rational matrix.
inline Rational bareiss_determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  Rational sign(1);
  Rational prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline std::vector<std::vector<Rational>> dense_from_tridiagonal(const spectra::TridiagonalQ& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = t.diag[i];
  for (std::size_t i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = t.off[i];
  return m;
}

}  // namespace specden::testing
