#include "specden/hopping.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "specden/parallel.hpp"
#include "specden/rng.hpp"

namespace specden::hopping {

CouplingLaw CouplingLaw::constant(double value) {
  CouplingLaw law;
  law.kind_ = Kind::kConstant;
  law.constant_ = value;
  return law;
}

CouplingLaw CouplingLaw::torus_trig(double c0, std::vector<double> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("CouplingLaw::torus_trig: need q >= 1");
  CouplingLaw law;
  law.kind_ = Kind::kTorusTrig;
  law.c0_ = c0;
  law.coeffs_ = std::move(coeffs);
  return law;
}

CouplingLaw CouplingLaw::empirical(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("CouplingLaw::empirical: no samples");
  CouplingLaw law;
  law.kind_ = Kind::kEmpirical;
  law.samples_ = std::move(samples);
  return law;
}

CouplingLaw CouplingLaw::empirical_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("CouplingLaw: cannot open " + path);
  std::vector<double> samples;
  double v = 0;
  while (in >> v) samples.push_back(v);
  if (samples.empty()) throw std::invalid_argument("CouplingLaw: no samples in " + path);
  return empirical(std::move(samples));
}

std::pair<double, double> CouplingLaw::range() const {
  switch (kind_) {
    case Kind::kConstant:
      return {constant_, constant_};
    case Kind::kTorusTrig: {
      double spread = 0;
      for (double c : coeffs_) spread += 2.0 * std::abs(c);
      return {c0_ - spread, c0_ + spread};
    }
    case Kind::kEmpirical: {
      const auto [lo, hi] = std::minmax_element(samples_.begin(), samples_.end());
      return {*lo, *hi};
    }
  }
  return {0, 0};
}

std::string CouplingLaw::describe() const {
  switch (kind_) {
    case Kind::kConstant:
      return "constant:" + std::to_string(constant_);
    case Kind::kTorusTrig: {
      std::string s = "torus-trig c0=" + std::to_string(c0_) + " c=(";
      for (std::size_t i = 0; i < coeffs_.size(); ++i)
        s += (i ? "," : "") + std::to_string(coeffs_[i]);
      return s + ")";
    }
    case Kind::kEmpirical:
      return "empirical[" + std::to_string(samples_.size()) + " samples]";
  }
  return "?";
}

double CouplingLaw::draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t k) const {
  const rng::CounterStream cs(seed, stream);
  switch (kind_) {
    case Kind::kConstant:
      return constant_;
    case Kind::kTorusTrig: {
      double w = c0_;
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const double theta = 2.0 * std::numbers::pi * cs.uniform(k, i);
        w += 2.0 * coeffs_[i] * std::cos(theta);
      }
      return w;
    }
    case Kind::kEmpirical: {
      const std::uint64_t idx = cs.word(k) % samples_.size();
      return samples_[idx];
    }
  }
  return 0;
}

std::vector<double> sample_couplings(const CouplingLaw& law, std::size_t n, std::uint64_t seed,
                                     std::uint64_t stream) {
  if (n < 1) throw std::invalid_argument("sample_couplings: n >= 1");
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = law.draw(seed, stream, k);
  return out;
}

std::int64_t count_below(std::span<const double> couplings, double energy) {
  // leading minors of (H - E): D_i = -E D_{i-1} - W_{i-1}^2 D_{i-2};
  // a sign change is a negative pivot, a zero minor takes the sign forced by
  // an infinitesimal increase of E (counts the boundary as "below")
  const std::size_t n = couplings.size() + 1;
  double prev = 1.0;            // D_{i-1}
  double cur = -energy;         // D_1
  int sign_prev = 1;
  int sign_cur = cur > 0 ? 1 : cur < 0 ? -1 : -sign_prev;
  std::int64_t count = sign_cur != sign_prev ? 1 : 0;
  for (std::size_t i = 1; i < n; ++i) {
    const double w = couplings[i - 1];
    const double next = -energy * cur - w * w * prev;
    prev = cur;
    cur = next;
    const double mag = std::abs(cur);
    if (mag > 0x1p600) {
      prev *= 0x1p-600;
      cur *= 0x1p-600;
    } else if (mag > 0 && mag < 0x1p-600) {
      prev *= 0x1p600;
      cur *= 0x1p600;
    }
    const int s = cur > 0 ? 1 : cur < 0 ? -1 : -sign_cur;
    if (s != sign_cur) ++count;
    sign_cur = s;
  }
  return count;
}

DosEstimate dos_window(const CouplingLaw& law, std::size_t n, std::size_t samples,
                       std::vector<double> eps_grid, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument(
        "dos_window: n must be even (counts split exactly at zero only for even chains)");
  if (samples < 1) throw std::invalid_argument("dos_window: samples >= 1");
  if (eps_grid.empty()) throw std::invalid_argument("dos_window: empty grid");
  std::sort(eps_grid.begin(), eps_grid.end(), std::greater<>());
  eps_grid.erase(std::unique(eps_grid.begin(), eps_grid.end()), eps_grid.end());

  const std::size_t ne = eps_grid.size();
  std::vector<std::vector<std::int64_t>> excess(samples, std::vector<std::int64_t>(ne, 0));
  parallel_for(samples, [&](std::size_t s) {
    const std::vector<double> w = sample_couplings(law, n - 1, seed, s);
    for (std::size_t e = 0; e < ne; ++e)
      excess[s][e] = count_below(w, eps_grid[e]) - static_cast<std::int64_t>(n / 2);
  });

  DosEstimate est;
  est.eps = std::move(eps_grid);
  est.n = n;
  est.samples = samples;
  est.seed = seed;
  est.mu.resize(ne);
  est.sem.resize(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    std::int64_t sum = 0, sumsq = 0;  // integer accumulation: order-independent
    for (std::size_t s = 0; s < samples; ++s) {
      sum += excess[s][e];
      sumsq += excess[s][e] * excess[s][e];
    }
    const double nn = static_cast<double>(n);
    const double ss = static_cast<double>(samples);
    est.mu[e] = static_cast<double>(sum) / (ss * nn);
    if (samples > 1) {
      const double var_counts =
          (static_cast<double>(sumsq) - static_cast<double>(sum) * static_cast<double>(sum) / ss) /
          (ss - 1.0);
      est.sem[e] = std::sqrt(std::max(0.0, var_counts) / ss) / nn;
    } else {
      est.sem[e] = 0.0;
    }
  }
  return est;
}

LogFit fit_log_exponent(const DosEstimate& est) {
  LogFit fit;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < est.eps.size(); ++i) {
    if (est.mu[i] <= 0) continue;
    if (est.samples > 1 && est.mu[i] <= 3.0 * est.sem[i]) continue;
    xs.push_back(std::log(std::abs(std::log(est.eps[i]))));
    ys.push_back(std::log(est.mu[i]));
  }
  fit.points_used = xs.size();
  if (xs.size() < 4)
    throw std::runtime_error("fit_log_exponent: need at least 4 significant grid points, have " +
                             std::to_string(xs.size()));
  const double np = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (np * sxy - sx * sy) / (np * sxx - sx * sx);
  fit.intercept = (sy - slope * sx) / np;
  fit.alpha = -slope;
  double rss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + slope * xs[i]);
    fit.residuals.push_back(r);
    rss += r * r;
  }
  fit.rms_residual = std::sqrt(rss / np);
  fit.poor_fit = fit.rms_residual > 0.1;

  for (const double eta : {0.5, 0.25, 0.1}) {
    PowerLawDiagnostic d;
    d.eta = eta;
    for (std::size_t i = 0; i < est.eps.size(); ++i)
      d.ratios.push_back(est.mu[i] / std::pow(est.eps[i], eta));
    d.strictly_increasing = d.ratios.size() > 1;
    for (std::size_t i = 0; i + 1 < d.ratios.size(); ++i)
      d.strictly_increasing = d.strictly_increasing && d.ratios[i + 1] > d.ratios[i];
    fit.diagnostics.push_back(std::move(d));
  }
  return fit;
}

Histogram pushforward_histogram(const CouplingLaw& law, std::size_t samples, std::size_t bins,
                                std::uint64_t seed) {
  if (law.kind() == CouplingLaw::Kind::kConstant)
    throw std::invalid_argument("pushforward_histogram: constant law has a one-point histogram");
  if (samples < 1 || bins < 1) throw std::invalid_argument("pushforward_histogram: bad sizes");
  Histogram h;
  const auto [lo, hi] = law.range();
  h.lo = lo;
  h.hi = hi;
  h.samples = samples;
  h.density.assign(bins, 0.0);
  const double width = (hi - lo) / static_cast<double>(bins);
  std::size_t outside = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double w = law.draw(seed, 0, k);
    if (w < lo || w > hi) {
      ++outside;
      continue;
    }
    std::size_t b = static_cast<std::size_t>((w - lo) / width);
    if (b >= bins) b = bins - 1;  // w == hi
    h.density[b] += 1.0;
  }
  const double norm = static_cast<double>(samples) * width;
  for (double& d : h.density) d /= norm;
  h.outside_mass = static_cast<double>(outside) / static_cast<double>(samples);
  return h;
}

}  // namespace specden::hopping
