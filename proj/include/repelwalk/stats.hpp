#pragma once

#include <vector>

namespace repelwalk {

double standard_normal_cdf(double x);

/// Two-sided Kolmogorov-Smirnov distance between the empirical distribution
/// of the samples and the standard normal. The input need not be sorted.
double ks_distance_to_standard_normal(std::vector<double> samples);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

LineFit least_squares_line(const std::vector<double>& x,
                           const std::vector<double>& y);

/// Median (average of the two middle order statistics for even sizes).
double median(std::vector<double> values);

}  // namespace repelwalk
