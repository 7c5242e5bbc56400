#include "mahh/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace mahh {

Summary summarize(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("summarize: empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());

  Summary s;
  s.count = sorted.size();
  s.min = sorted.front();
  s.max = sorted.back();
  double total = 0.0;
  for (double v : sorted) total += v;
  s.mean = total / static_cast<double>(s.count);
  // Rounding may push the mean a hair outside [min, max] for constant input.
  s.mean = std::clamp(s.mean, s.min, s.max);
  if (s.count > 1) {
    double squares = 0.0;
    for (double v : sorted) squares += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(squares / static_cast<double>(s.count - 1));
    s.se = s.sd / std::sqrt(static_cast<double>(s.count));
  }
  return s;
}

Summary summarize(std::span<const std::uint64_t> samples) {
  std::vector<double> values(samples.begin(), samples.end());
  return summarize(std::span<const double>(values));
}

ZResult z_compare(const Summary& summary, double reference, double z_max) {
  const double diff = summary.mean - reference;
  if (summary.count < 2 || summary.se == 0.0) {
    const bool equal = diff == 0.0;
    return {equal, equal ? 0.0 : std::numeric_limits<double>::infinity()};
  }
  const double z = diff / summary.se;
  return {std::abs(z) <= z_max, z};
}

ChiSquareResult chi_square_gof(std::span<const double> observed,
                               std::span<const double> expected,
                               int estimated_params) {
  if (observed.size() != expected.size() || observed.empty()) {
    throw std::invalid_argument("chi_square_gof: observed/expected size mismatch");
  }
  ChiSquareResult result;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (!(expected[i] > 0.0)) throw std::invalid_argument("chi_square_gof: expected counts must be positive");
    const double diff = observed[i] - expected[i];
    result.statistic += diff * diff / expected[i];
  }
  result.dof = static_cast<int>(observed.size()) - 1 - estimated_params;
  if (result.dof > 0) {
    const boost::math::chi_squared_distribution<double> dist(result.dof);
    result.p_value = boost::math::cdf(boost::math::complement(dist, result.statistic));
  }
  return result;
}

GeometricFit fit_geometric(std::span<const std::uint64_t> counts) {
  if (counts.empty()) throw std::invalid_argument("fit_geometric: empty sample");
  double total = 0.0;
  std::uint64_t largest = 0;
  for (auto c : counts) {
    if (c < 1) throw std::invalid_argument("fit_geometric: values must be >= 1");
    total += static_cast<double>(c);
    largest = std::max(largest, c);
  }
  const double samples = static_cast<double>(counts.size());
  GeometricFit fit;
  fit.p_hat = samples / total;

  std::vector<std::uint64_t> histogram(largest + 1, 0);
  for (auto c : counts) ++histogram[c];

  const double q = 1.0 - fit.p_hat;
  std::vector<double> observed, expected;
  double cell_obs = 0.0, cell_exp = 0.0;
  double tail_prob = 1.0;  // P(X >= j)
  for (std::uint64_t j = 1;; ++j) {
    const double pj = tail_prob * fit.p_hat;
    cell_obs += j <= largest ? static_cast<double>(histogram[j]) : 0.0;
    cell_exp += samples * pj;
    tail_prob *= q;
    const double rest = samples * tail_prob;
    if (rest < 5.0) {
      // Fold the tail {j+1, ...} into the current cell.
      for (std::uint64_t v = j + 1; v <= largest; ++v) cell_obs += static_cast<double>(histogram[v]);
      cell_exp += rest;
      if (cell_exp < 5.0 && !expected.empty()) {
        observed.back() += cell_obs;
        expected.back() += cell_exp;
      } else {
        observed.push_back(cell_obs);
        expected.push_back(cell_exp);
      }
      break;
    }
    if (cell_exp >= 5.0) {
      observed.push_back(cell_obs);
      expected.push_back(cell_exp);
      cell_obs = cell_exp = 0.0;
    }
  }
  fit.cells = observed.size();
  fit.test = chi_square_gof(observed, expected, 1);
  return fit;
}

LogLogFit loglog_slope(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw std::invalid_argument("loglog_slope: need at least two points");
  const double count = static_cast<double>(points.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& [n, t] : points) {
    if (!(n > 0.0) || !(t > 0.0)) throw std::invalid_argument("loglog_slope: values must be positive");
    mean_x += std::log(n);
    mean_y += std::log(t);
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [n, t] : points) {
    const double dx = std::log(n) - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(t) - mean_y);
  }
  if (sxx == 0.0) throw std::invalid_argument("loglog_slope: all n are equal");
  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  for (const auto& [n, t] : points) {
    const double r = std::log(t) - (fit.intercept + fit.slope * std::log(n));
    fit.residual += r * r;
  }
  return fit;
}

}  // namespace mahh
