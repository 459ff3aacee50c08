#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>

namespace qdlab {

// Probability vector over {0, ..., size-1}: entries nonnegative, sum 1 within
// 1e-9 (1e-8 for measurement outputs, which carry Born-rule rounding).
class Distribution {
 public:
  static Distribution from_probabilities(Eigen::VectorXd probabilities,
                                         double tolerance = 1e-9);

  Eigen::Index size() const { return probabilities_.size(); }
  double operator[](Eigen::Index i) const { return probabilities_(i); }
  const Eigen::VectorXd& probabilities() const { return probabilities_; }

  // Index of the interval containing u in the cumulative distribution;
  // u in [0, 1).
  Eigen::Index sample_index(double u) const;

 private:
  explicit Distribution(Eigen::VectorXd probabilities)
      : probabilities_(std::move(probabilities)) {}
  Eigen::VectorXd probabilities_;
};

// Total variation distance, 0.5 * sum |p_i - q_i|. Supports must match in size.
double tv_distance(const Distribution& p, const Distribution& q);

// Normalized histogram of samples over {0, ..., size-1}.
Distribution empirical_distribution(std::span<const std::uint64_t> samples,
                                    Eigen::Index size);

}  // namespace qdlab
