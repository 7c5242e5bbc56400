#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mahh {

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  /// Unbiased sample standard deviation; 0 for a single sample.
  double sd = 0.0;
  /// sd / sqrt(count).
  double se = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// Sums are taken over the sorted samples, so the result does not depend on
/// input order. Throws std::invalid_argument on empty input.
Summary summarize(std::span<const double> samples);
Summary summarize(std::span<const std::uint64_t> samples);

struct ZResult {
  bool pass = false;
  double z = 0.0;
};

/// pass iff |mean - reference| / se <= z_max. With fewer than two samples
/// or se == 0 the comparison is exact equality (z is 0 or infinity).
ZResult z_compare(const Summary& summary, double reference, double z_max = 3.0);

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  /// Upper-tail probability; 1 when dof <= 0.
  double p_value = 1.0;
};

/// Pearson goodness of fit; dof = cells - 1 - estimated_params.
ChiSquareResult chi_square_gof(std::span<const double> observed,
                               std::span<const double> expected,
                               int estimated_params = 0);

struct GeometricFit {
  /// Maximum-likelihood success rate on support {1, 2, ...}: 1 / mean.
  double p_hat = 0.0;
  ChiSquareResult test;
  std::size_t cells = 0;
};

/// Geometric law on {1, 2, ...} (a phase count is at least one). Adjacent
/// values are pooled, and the tail above the last cell forms one cell, so
/// that every expected count is >= 5.
GeometricFit fit_geometric(std::span<const std::uint64_t> counts);

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// Residual sum of squares in log space.
  double residual = 0.0;
};

/// Least squares of ln t on ln n over (n, t) pairs, all positive.
LogLogFit loglog_slope(std::span<const std::pair<double, double>> points);

}  // namespace mahh
