#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "toeplitz/geometry.hpp"
#include "toeplitz/spectrum.hpp"
#include "toeplitz/symbol.hpp"

namespace toeplitz {

enum class RhoSampling {
  uniform,  ///< equally spaced on [rho_l, rho_h]
  inverse,  ///< reciprocals equally spaced below 1, equally spaced above 1
};

struct SweepConfig {
  int n = 100;      ///< total rho samples (n + 1 spectra are intersected)
  int m = 1000;     ///< v samples per spectrum polygon
  int l = 250;      ///< size of the fixed sweep grid
  int sweeps = 1;   ///< number of sampling rounds; 1 gives the basic algorithm
  std::uint64_t seed = 0;
  double threshold_divisor = 1e6;
  int ma_window = 5;  ///< odd
  RhoSampling rho_sampling = RhoSampling::uniform;
  CurvatureBound cbound = CurvatureBound::rigorous;
  int threads = 0;  ///< 0: hardware concurrency

  /// Throws ParameterError on an invalid combination.
  void validate() const;
};

struct Diagnostics {
  RhoInterval interval;
  std::uint64_t seed = 0;
  /// Vertex count of the approximating polygon after each intersection (index 0: first spectrum).
  std::vector<std::size_t> vertex_counts;
  /// Area of the approximating polygon and of the superset after each sampling round.
  std::vector<double> polygon_areas;
  std::vector<double> superset_areas;
  /// Sampled rhos in intersection order.
  std::vector<double> rhos;
  /// Per round after the first: the rho intervals the batch was drawn from.
  std::vector<std::vector<std::pair<double, double>>> intervals;
  /// Number of sweep-grid area evaluations actually performed.
  std::size_t sweep_evaluations = 0;
  std::vector<std::string> warnings;
  double wall_seconds = 0.0;
};

struct LimitSetResult {
  Region polygon;   ///< intersection of discretized spectra
  Region superset;  ///< intersection of expanded spectra; contains the limit set
  Diagnostics diagnostics;
};

/// `count` rhos in the interval. Inverse mode splits the count between [rho_l, 1) and
/// [1, rho_h] in proportion to 1/rho_l - 1 and rho_h - 1.
Partition sample_rhos(const RhoInterval& interval, int count, RhoSampling mode);

/// Fixed-point frame large enough for every spectrum and expanded spectrum of the run.
FixedPointFrame working_frame(const LaurentSymbol& b, const RhoInterval& interval, int m);

/// Intersection over n + 1 sampled rhos (sweeps is ignored).
LimitSetResult compute_basic(const LaurentSymbol& b, const SweepConfig& cfg);
LimitSetResult compute_basic(const LaurentSymbol& b, int n, int m);

/// Area-sweep sampler; with cfg.sweeps == 1 it coincides with compute_basic.
LimitSetResult compute_sweep(const LaurentSymbol& b, const SweepConfig& cfg);

/// Calls fn(i) for i in [0, count) on up to `threads` workers (0: hardware concurrency).
/// The first exception thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

/// Centered moving average with the window truncated at both ends.
std::vector<double> moving_average(const std::vector<double>& values, int window);

}  // namespace toeplitz
