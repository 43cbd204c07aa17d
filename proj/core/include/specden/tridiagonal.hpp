#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "specden/rational.hpp"

namespace specden::spectra {

// Symmetric tridiagonal matrix; the entry type tags the arithmetic kind
// (exact rational for certificates, binary64 for the bisection eigensolver).
template <typename T>
struct Tridiagonal {
  std::vector<T> diag;
  std::vector<T> off;  // size() - 1 entries

  std::size_t size() const { return diag.size(); }
};

using TridiagonalQ = Tridiagonal<Rational>;
using TridiagonalD = Tridiagonal<double>;

TridiagonalD to_double(const TridiagonalQ& t);

// Adjacency operator of a computational chain of length m: loops 5 except 1
// on the marked initial node, edges 2 both ways -> diag (1,5,...,5), off 2.
TridiagonalQ chain_adjacency(std::size_t m);

// Same chain with the marked loop raised to 5 (rank-one perturbation +4 e1).
TridiagonalQ chain_adjacency_uniform(std::size_t m);

// det(chain_adjacency(m)) by the last-row cofactor recurrence
// det_m = 5 det_{m-1} - 4 det_{m-2}, det_1 = det_2 = 1. Equals 1 for every m.
Int chain_determinant(std::size_t m);

// det(chain_adjacency_uniform(m)) = (4^{m+1} - 1) / 3 by the same recurrence
// with seeds 1, 5.
Int uniform_chain_determinant(std::size_t m);

// Exact eigenvalue counts of an exact tridiagonal at a rational shift, by the
// LDL^T pivot recurrence d_i = (a_i - lambda) - b_{i-1}^2 / d_{i-1} run
// fraction-free (pivots are consecutive leading-minor ratios). A zero pivot
// is treated as the negative side of an infinitesimal perturbation, so the
// negative-pivot count at lambda+0 equals #{eig <= lambda}; `at` recovers the
// boundary hits exactly (one per unreduced block whose determinant vanishes).
struct SturmCount {
  std::int64_t below = 0;  // #{eigenvalues <  lambda}
  std::int64_t at = 0;     // #{eigenvalues == lambda}
};

SturmCount sturm_count(const TridiagonalQ& t, const Rational& lambda);

// #{a < eigenvalue < b}; requires a < b.
std::int64_t count_in_open(const TridiagonalQ& t, const Rational& a, const Rational& b);

// Certified enclosure lower < lambda_k <= upper with
// #{eig <= lower} = k-1 and #{eig <= upper} >= k, bisected until
// upper - lower <= 2^-rel_bits * |upper|.
struct EigenInterval {
  Rational lower;
  Rational upper;
  std::size_t index = 0;  // k, 1-based
};

EigenInterval eigenvalue_enclosure(const TridiagonalQ& t, std::size_t k, Rational lo, Rational hi,
                                   int rel_bits);

// Exact certificate that chain_adjacency(m) is positive definite with an
// eigenvalue in (0, 5^{-ceil(m/3)}]; the threshold is a rational below
// 5^{-m/3}, so passing is strictly stronger than the m-th-power decay claim.
// With enclosure_bits > 0 the first eigenvalue is bisected to that relative
// width.
struct SmallEigCert {
  std::size_t m = 0;
  bool pass = false;
  bool positive_definite = false;
  Rational threshold;  // 5^{-ceil(m/3)}
  std::int64_t count_below_threshold = 0;
  std::optional<EigenInterval> lambda1;
};

SmallEigCert small_eigenvalue_certificate(std::size_t m, int enclosure_bits = 0);

// binary64 path -----------------------------------------------------------

// #{eigenvalues < x} with LAPACK-style pivot safeguarding.
std::int64_t count_below(const TridiagonalD& t, double x);

// All eigenvalues, ascending, by bisection on the counting kernel.
std::vector<double> eigenvalues(const TridiagonalD& t);

// Rank-one-perturbation checks at tolerance tol = 1e-9 m, comparing the
// chain spectrum (lambda) with the uniform-loop spectrum (kappa):
//   lambda2_ge_1        lambda_2 >= 1 - tol
//   kappa_in_1_9        every kappa in [1-tol, 9+tol]
//   kappa_half_ge_5     #{kappa >= 5-tol} >= ceil(m/2)
//   lambda_half_ge_5    #{lambda >= 5-tol} >= ceil(m/2) - 1
//   interlacing_ok      kappa_k <= lambda_{k+1} + tol for all k
//   half_index_ge_5     observation only: 5 <= lambda_{floor(m/2)+1}
struct WeylReport {
  std::size_t m = 0;
  double tol = 0;
  bool lambda2_ge_1 = false;
  bool kappa_in_1_9 = false;
  bool kappa_half_ge_5 = false;
  bool lambda_half_ge_5 = false;
  bool interlacing_ok = false;
  bool half_index_ge_5 = false;
  bool ok() const {
    return lambda2_ge_1 && kappa_in_1_9 && kappa_half_ge_5 && lambda_half_ge_5 && interlacing_ok;
  }
};

WeylReport weyl_checks(std::size_t m);

// Exact determinant-gap table: det(chain) = 1 while the uniform-loop
// determinant has m-th root >= 5^{1/3}, certified by the integer comparison
// ((4^{m+1}-1)/3)^3 >= 5^m.
struct DetGapRow {
  std::size_t m = 0;
  Int det_chain;
  Int det_uniform;
  bool root_ge_cbrt5 = false;
};

std::vector<DetGapRow> determinant_gap_table(std::size_t mmax);

}  // namespace specden::spectra
