#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qdlab {

double mean(std::span<const double> values);

// Standard error of the mean (sample standard deviation / sqrt(n)).
double standard_error(std::span<const double> values);

// Pearson statistic against the given expected counts.
double chi_square_statistic(std::span<const std::uint64_t> counts,
                            std::span<const double> expected);

// Upper-tail p-value of the chi-square distribution with df degrees of
// freedom, via the regularized incomplete gamma function.
double chi_square_p_value(double statistic, double degrees_of_freedom);

// Regularized upper incomplete gamma Q(a, x) = Γ(a, x) / Γ(a).
double regularized_gamma_q(double a, double x);

// Least-squares slope of log(y) against log(x). Requires at least two
// strictly positive points.
double log_log_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace qdlab
