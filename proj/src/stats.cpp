#include "qdlab/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qdlab {
namespace {

// Series expansion of the regularized lower incomplete gamma P(a, x),
// convergent for x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for the regularized upper incomplete gamma Q(a, x),
// convergent for x >= a + 1 (modified Lentz).
double gamma_q_continued_fraction(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-15) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double mean(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("mean: empty input");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double standard_error(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  const double m = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
}

double chi_square_statistic(std::span<const std::uint64_t> counts,
                            std::span<const double> expected) {
  if (counts.size() != expected.size() || counts.empty())
    throw std::invalid_argument("chi_square_statistic: size mismatch");
  double stat = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (expected[i] <= 0.0)
      throw std::invalid_argument("chi_square_statistic: nonpositive expected count");
    const double diff = static_cast<double>(counts[i]) - expected[i];
    stat += diff * diff / expected[i];
  }
  return stat;
}

double regularized_gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0)
    throw std::invalid_argument("regularized_gamma_q: domain error");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_continued_fraction(a, x);
}

double chi_square_p_value(double statistic, double degrees_of_freedom) {
  if (degrees_of_freedom <= 0.0)
    throw std::invalid_argument("chi_square_p_value: df must be positive");
  if (statistic <= 0.0) return 1.0;
  return regularized_gamma_q(degrees_of_freedom / 2.0, statistic / 2.0);
}

double log_log_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("log_log_slope: need >= 2 paired points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const auto n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0.0 || ys[i] <= 0.0)
      throw std::invalid_argument("log_log_slope: points must be positive");
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-12 * std::max(1.0, sxx))
    throw std::invalid_argument("log_log_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

}  // namespace qdlab
