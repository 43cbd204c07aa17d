#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace specden::hopping {

// Distribution of the random couplings W(k). TorusTrig draws angles uniformly
// on [0,2pi)^q and evaluates c0 + sum_i 2 c_i cos(theta_i); its range is
// [c0 - 2 sum|c_i|, c0 + 2 sum|c_i|]. The default coupling for the
// log-singularity experiment is q=3, c0=7, c=(1,1,1) with range [1,13].
class CouplingLaw {
 public:
  enum class Kind { kConstant, kTorusTrig, kEmpirical };

  static CouplingLaw constant(double value);
  static CouplingLaw torus_trig(double c0, std::vector<double> coeffs);
  static CouplingLaw corollary() { return torus_trig(7.0, {1.0, 1.0, 1.0}); }
  static CouplingLaw empirical(std::vector<double> samples);  // throws when empty
  static CouplingLaw empirical_from_file(const std::string& path);

  Kind kind() const { return kind_; }
  std::pair<double, double> range() const;
  std::string describe() const;

  // k-th coupling of substream `stream` under `seed`; pure in all arguments.
  double draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t k) const;

 private:
  CouplingLaw() = default;
  Kind kind_ = Kind::kConstant;
  double constant_ = 1.0;
  double c0_ = 0.0;
  std::vector<double> coeffs_;
  std::vector<double> samples_;
};

// n i.i.d. draws for substream `stream`; order- and thread-independent.
std::vector<double> sample_couplings(const CouplingLaw& law, std::size_t n, std::uint64_t seed,
                                     std::uint64_t stream = 0);

// #{eigenvalues < energy} of the (W.size()+1)-dimensional hopping matrix
// H zeta_k = W(k) zeta_{k+1} + W(k-1) zeta_{k-1}  (zero diagonal, open ends).
// Runs the leading-minor recurrence with power-of-two rescaling, so pivot
// signs survive |energy| down to 1e-300. O(n) time, O(1) space.
std::int64_t count_below(std::span<const double> couplings, double energy);

struct DosEstimate {
  std::vector<double> eps;      // descending
  std::vector<double> mu;       // estimated mu((0, eps))
  std::vector<double> sem;      // standard error of the mean
  std::size_t n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo estimate of mu((0,eps)) = E[ (count_below(eps) - n/2) / n ] for
// even n (chiral symmetry puts exactly n/2 eigenvalues below zero when no
// coupling vanishes, which holds almost surely for atomless laws). Odd n is
// refused. Deterministic for fixed (seed, n, samples, grid).
DosEstimate dos_window(const CouplingLaw& law, std::size_t n, std::size_t samples,
                       std::vector<double> eps_grid, std::uint64_t seed);

// Least squares of log mu against log|log eps| over the significant grid
// points (mu > 3 sem, at least 4 of them): mu ~ 1/|log eps|^alpha. Also the
// power-law diagnostics mu/eps^eta for eta in {0.5, 0.25, 0.1}: an increasing
// sequence as eps decreases is the trend that defeats any bound C eps^eta.
struct PowerLawDiagnostic {
  double eta = 0;
  std::vector<double> ratios;        // mu/eps^eta in grid order (eps descending)
  bool strictly_increasing = false;  // toward small eps
};

struct LogFit {
  double alpha = 0;
  double intercept = 0;
  std::vector<double> residuals;
  double rms_residual = 0;
  bool poor_fit = false;  // rms residual > 0.1 in log units
  std::size_t points_used = 0;
  std::vector<PowerLawDiagnostic> diagnostics;
};

LogFit fit_log_exponent(const DosEstimate& est);

struct Histogram {
  double lo = 0, hi = 0;          // analytic range of the law
  std::vector<double> density;    // normalized: sum(density) * bin_width = 1
  std::size_t samples = 0;
  double outside_mass = 0;        // mass observed outside [lo, hi]
};

Histogram pushforward_histogram(const CouplingLaw& law, std::size_t samples, std::size_t bins,
                                std::uint64_t seed);

}  // namespace specden::hopping
