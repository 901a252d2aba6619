#pragma once

#include <vector>

namespace srgcl {

double mean(const std::vector<double>& xs);

/// Sample standard deviation (ddof = 1); 0 for fewer than two values.
double sample_stddev(const std::vector<double>& xs);

/// Upper tail P(X > x) of the chi-square distribution with df degrees of
/// freedom, via the regularized incomplete gamma function.
double chi_square_sf(double x, int df);

/// Pearson goodness-of-fit statistic for observed counts vs expected
/// probabilities (probs must sum to 1; total = sum of counts).
double chi_square_statistic(const std::vector<long>& counts, const std::vector<double>& probs);

}  // namespace srgcl
