#include "specden/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace specden::spectra {

TridiagonalD to_double(const TridiagonalQ& t) {
  TridiagonalD d;
  d.diag.reserve(t.diag.size());
  d.off.reserve(t.off.size());
  for (const auto& a : t.diag) d.diag.push_back(specden::to_double(a));
  for (const auto& b : t.off) d.off.push_back(specden::to_double(b));
  return d;
}

TridiagonalQ chain_adjacency(std::size_t m) {
  if (m < 1) throw std::invalid_argument("chain_adjacency: m >= 1");
  TridiagonalQ t;
  t.diag.assign(m, Rational(5));
  t.diag[0] = 1;
  t.off.assign(m - 1, Rational(2));
  return t;
}

TridiagonalQ chain_adjacency_uniform(std::size_t m) {
  TridiagonalQ t = chain_adjacency(m);
  t.diag[0] = 5;
  return t;
}

Int chain_determinant(std::size_t m) {
  if (m < 1) throw std::invalid_argument("chain_determinant: m >= 1");
  Int prev = 1, cur = 1;  // det_1 = det_2 = 1
  for (std::size_t i = 3; i <= m; ++i) {
    Int next = 5 * cur - 4 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Int uniform_chain_determinant(std::size_t m) {
  if (m < 1) throw std::invalid_argument("uniform_chain_determinant: m >= 1");
  Int prev = 1, cur = 5;  // seeds d_0 = 1, d_1 = 5
  for (std::size_t i = 2; i <= m; ++i) {
    Int next = 5 * cur - 4 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

SturmCount sturm_count(const TridiagonalQ& t, const Rational& lambda) {
  const std::size_t m = t.size();
  if (m == 0) return {};
  if (t.off.size() + 1 != m) throw std::invalid_argument("sturm_count: off size mismatch");

  // clear denominators: count eigenvalues of c(T - lambda) for c = lcm of all
  // denominators, via the scaled leading-minor recurrence
  //   E_i = (A_i - u) E_{i-1} - B_{i-1}^2 E_{i-2}
  Int c = denominator(lambda);
  for (const auto& a : t.diag) c = lcm(c, denominator(a));
  for (const auto& b : t.off) c = lcm(c, denominator(b));
  const Int u = numerator(lambda) * (c / denominator(lambda));
  std::vector<Int> A(m), B(m > 0 ? m - 1 : 0);
  for (std::size_t i = 0; i < m; ++i) A[i] = numerator(t.diag[i]) * (c / denominator(t.diag[i]));
  for (std::size_t i = 0; i + 1 < m; ++i) B[i] = numerator(t.off[i]) * (c / denominator(t.off[i]));

  SturmCount out;
  std::int64_t leq = 0;
  std::size_t block_start = 0;
  while (block_start < m) {
    std::size_t block_end = block_start;  // inclusive; unreduced block
    while (block_end + 1 < m && B[block_end] != 0) ++block_end;

    Int prev = 1;                      // E_{-1}
    Int cur = A[block_start] - u;      // E_0 of the block
    int sign_prev = 1;
    int sign_cur = cur > 0 ? 1 : cur < 0 ? -1 : -sign_prev;
    if (sign_cur != sign_prev) ++leq;
    for (std::size_t i = block_start + 1; i <= block_end; ++i) {
      Int next = (A[i] - u) * cur - B[i - 1] * B[i - 1] * prev;
      prev = std::move(cur);
      cur = std::move(next);
      const int s = cur > 0 ? 1 : cur < 0 ? -1 : -sign_cur;
      if (s != sign_cur) ++leq;
      sign_cur = s;
    }
    if (cur == 0) ++out.at;  // block determinant vanished: lambda is simple here
    block_start = block_end + 1;
  }
  out.below = leq - out.at;
  return out;
}

std::int64_t count_in_open(const TridiagonalQ& t, const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("count_in_open: need a < b");
  const SturmCount at_b = sturm_count(t, b);
  const SturmCount at_a = sturm_count(t, a);
  return at_b.below - (at_a.below + at_a.at);
}

EigenInterval eigenvalue_enclosure(const TridiagonalQ& t, std::size_t k, Rational lo, Rational hi,
                                   int rel_bits) {
  if (k < 1 || k > t.size()) throw std::invalid_argument("eigenvalue_enclosure: bad index");
  auto leq = [&](const Rational& x) {
    const SturmCount s = sturm_count(t, x);
    return s.below + s.at;
  };
  if (leq(lo) > static_cast<std::int64_t>(k - 1) || leq(hi) < static_cast<std::int64_t>(k))
    throw std::invalid_argument("eigenvalue_enclosure: [lo,hi] does not bracket lambda_k");
  const Rational width_goal = pow_rational(Rational(1, 2), rel_bits);
  while ((hi - lo) > width_goal * abs(hi)) {
    const Rational mid = (lo + hi) / 2;
    if (leq(mid) >= static_cast<std::int64_t>(k))
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi, k};
}

SmallEigCert small_eigenvalue_certificate(std::size_t m, int enclosure_bits) {
  if (m < 2) throw std::invalid_argument("small_eigenvalue_certificate: m >= 2");
  SmallEigCert cert;
  cert.m = m;
  cert.threshold = pow_rational(Rational(1, 5), static_cast<std::int64_t>((m + 2) / 3));
  const TridiagonalQ t = chain_adjacency(m);
  const SturmCount zero = sturm_count(t, Rational(0));
  cert.positive_definite = zero.below + zero.at == 0;
  const SturmCount s = sturm_count(t, cert.threshold);
  cert.count_below_threshold = s.below + s.at;
  cert.pass = cert.positive_definite && cert.count_below_threshold >= 1;
  if (cert.pass && enclosure_bits > 0)
    cert.lambda1 = eigenvalue_enclosure(t, 1, Rational(0), cert.threshold, enclosure_bits);
  return cert;
}

std::int64_t count_below(const TridiagonalD& t, double x) {
  const std::size_t m = t.size();
  double maxb2 = 1.0;
  for (double b : t.off) maxb2 = std::max(maxb2, b * b);
  const double pivmin = std::numeric_limits<double>::min() * maxb2;
  std::int64_t count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double b2 = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1];
    d = t.diag[i] - x - (i == 0 ? 0.0 : b2 / d);
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0) ++count;
  }
  return count;
}

std::vector<double> eigenvalues(const TridiagonalD& t) {
  const std::size_t m = t.size();
  std::vector<double> out(m);
  if (m == 0) return out;
  double lo = t.diag[0], hi = t.diag[0];
  for (std::size_t i = 0; i < m; ++i) {
    const double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) + (i + 1 < m ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  const double span = hi - lo;
  double floor_k = lo;
  for (std::size_t k = 1; k <= m; ++k) {
    double a = floor_k, b = hi;
    // bisection keeps count(a) < k <= "count at b" (Gershgorin right edge)
    while (b - a > 1e-14 * std::max(1.0, std::abs(a) + std::abs(b)) && b - a > 1e-300 * span) {
      const double mid = a + (b - a) / 2;
      if (count_below(t, mid) >= static_cast<std::int64_t>(k))
        b = mid;
      else
        a = mid;
    }
    out[k - 1] = a + (b - a) / 2;
    floor_k = a;  // lambda_{k+1} >= lambda_k
  }
  return out;
}

WeylReport weyl_checks(std::size_t m) {
  if (m < 2) throw std::invalid_argument("weyl_checks: m >= 2");
  WeylReport rep;
  rep.m = m;
  rep.tol = 1e-9 * static_cast<double>(m);
  const std::vector<double> lam = eigenvalues(to_double(chain_adjacency(m)));
  const std::vector<double> kap = eigenvalues(to_double(chain_adjacency_uniform(m)));
  const double tol = rep.tol;

  rep.lambda2_ge_1 = lam[1] >= 1.0 - tol;
  rep.kappa_in_1_9 =
      std::all_of(kap.begin(), kap.end(), [&](double k) { return k >= 1.0 - tol && k <= 9.0 + tol; });
  const auto count_ge = [&](const std::vector<double>& v, double thr) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [&](double x) { return x >= thr; }));
  };
  const std::size_t half_up = (m + 1) / 2;
  rep.kappa_half_ge_5 = count_ge(kap, 5.0 - tol) >= half_up;
  rep.lambda_half_ge_5 = count_ge(lam, 5.0 - tol) + 1 >= half_up;
  rep.interlacing_ok = true;
  for (std::size_t k = 0; k + 1 < m; ++k)
    rep.interlacing_ok = rep.interlacing_ok && kap[k] <= lam[k + 1] + tol;
  rep.half_index_ge_5 = lam[m / 2] >= 5.0 - tol;  // lambda_{floor(m/2)+1}, 1-based
  return rep;
}

std::vector<DetGapRow> determinant_gap_table(std::size_t mmax) {
  if (mmax < 1) throw std::invalid_argument("determinant_gap_table: mmax >= 1");
  std::vector<DetGapRow> rows;
  rows.reserve(mmax);
  Int prev_chain = 1, chain = 1;    // chain dets: 1, 1, ...
  Int prev_uni = 1, uni = 5;        // uniform dets: d_0 = 1, d_1 = 5
  for (std::size_t m = 1; m <= mmax; ++m) {
    if (m >= 2) {
      if (m >= 3) {
        Int next = 5 * chain - 4 * prev_chain;
        prev_chain = chain;
        chain = next;
      }
      Int next = 5 * uni - 4 * prev_uni;
      prev_uni = uni;
      uni = next;
    }
    DetGapRow row;
    row.m = m;
    row.det_chain = chain;
    row.det_uniform = uni;
    row.root_ge_cbrt5 = uni * uni * uni >= pow_int(Int(5), m);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace specden::spectra
