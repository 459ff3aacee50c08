#include "qdlab/distribution.hpp"

#include <cmath>

#include "qdlab/errors.hpp"

namespace qdlab {

Distribution Distribution::from_probabilities(Eigen::VectorXd probabilities,
                                              double tolerance) {
  if (probabilities.size() == 0)
    throw ValidationError("distribution: empty support");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < probabilities.size(); ++i) {
    if (probabilities(i) < -tolerance)
      throw ValidationError("distribution: negative probability");
    if (probabilities(i) < 0.0) probabilities(i) = 0.0;
    sum += probabilities(i);
  }
  if (std::abs(sum - 1.0) > std::max(tolerance, 1e-8))
    throw ValidationError("distribution: probabilities sum to " + std::to_string(sum));
  return Distribution(std::move(probabilities));
}

Eigen::Index Distribution::sample_index(double u) const {
  double cumulative = 0.0;
  for (Eigen::Index i = 0; i < probabilities_.size(); ++i) {
    cumulative += probabilities_(i);
    if (u < cumulative) return i;
  }
  return probabilities_.size() - 1;  // guards against rounding at u ~ 1
}

double tv_distance(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size())
    throw DimensionError("tv_distance: support sizes differ");
  double total = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) total += std::abs(p[i] - q[i]);
  return 0.5 * total;
}

Distribution empirical_distribution(std::span<const std::uint64_t> samples,
                                    Eigen::Index size) {
  if (samples.empty())
    throw ValidationError("empirical_distribution: no samples");
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(size);
  for (std::uint64_t s : samples) {
    if (s >= static_cast<std::uint64_t>(size))
      throw DimensionError("empirical_distribution: sample out of range");
    counts(static_cast<Eigen::Index>(s)) += 1.0;
  }
  counts /= static_cast<double>(samples.size());
  return Distribution::from_probabilities(std::move(counts));
}

}  // namespace qdlab
