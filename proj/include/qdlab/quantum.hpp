#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "qdlab/distribution.hpp"
#include "qdlab/rng.hpp"

namespace qdlab {

struct CostLedger;

// Unit-norm complex amplitude vector of arbitrary dimension (dimension need
// not be a power of two; qubit accounting uses ceil(log2 dim)).
class StateVector {
 public:
  static StateVector from_amplitudes(Eigen::VectorXcd amplitudes,
                                     double tolerance = 1e-9);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

 private:
  explicit StateVector(Eigen::VectorXcd amplitudes)
      : amplitudes_(std::move(amplitudes)) {}
  Eigen::VectorXcd amplitudes_;
};

// v / ||v||2. Rejects (near-)zero vectors.
StateVector normalize(const Eigen::VectorXcd& v);

// Computational basis state |index> in the given dimension.
StateVector basis_state(Eigen::Index dim, Eigen::Index index);

// Positive-operator-valued measure: elements are PSD and sum to the identity.
// Two storage forms: dense Hermitian elements, or rank-one factors v_k with
// E_k = v_k v_k^dag (columns of a matrix), optionally completed by a residual
// element I - sum_k v_k v_k^dag. The rank-one form keeps measurement of the
// structured POVMs used by the protocols cheap.
class Povm {
 public:
  static Povm from_elements(std::vector<Eigen::MatrixXcd> elements,
                            double psd_tolerance = 1e-9,
                            double completeness_tolerance = 1e-8);

  // factors: dim x k matrix, one element per column. When validate is false
  // the completeness check is skipped; callers must guarantee it structurally
  // (the matching measurement does: its factors form an orthonormal basis).
  static Povm from_rank_one(Eigen::MatrixXcd factors, bool validate = true,
                            double completeness_tolerance = 1e-8);

  // Rank-one elements plus the trailing residual I - sum. The residual must be
  // PSD, which is validated here (spectral check).
  static Povm from_rank_one_with_residual(Eigen::MatrixXcd factors,
                                          double psd_tolerance = 1e-9);

  Eigen::Index dim() const { return dim_; }
  std::size_t size() const;

  // Dense form of element k (materialized on demand for rank-one storage).
  Eigen::MatrixXcd element(std::size_t k) const;

  // Max-norm of sum(E_k) - I.
  double completeness_defect() const;

  bool rank_one() const { return factors_.size() != 0; }

  // Outcome probabilities for a state (exposed for born_probabilities).
  Eigen::VectorXd outcome_probabilities(const StateVector& state) const;

 private:
  Povm() = default;
  Eigen::Index dim_ = 0;
  std::vector<Eigen::MatrixXcd> elements_;  // dense storage (may be empty)
  Eigen::MatrixXcd factors_;                // rank-one storage (may be 0x0)
  bool has_residual_ = false;
};

// Born probabilities q_k = <psi|E_k|psi>, clipped to [0, 1] and validated to
// sum to one within 1e-8.
Distribution born_probabilities(const StateVector& state, const Povm& povm);

// dim x dim matrix with U^dag U = I within entrywise tolerance 1e-8.
class Unitary {
 public:
  static Unitary from_matrix(Eigen::MatrixXcd entries, double tolerance = 1e-8);

  Eigen::Index dim() const { return entries_.cols(); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

 private:
  explicit Unitary(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {}
  Eigen::MatrixXcd entries_;
};

// Haar-distributed unitary: complex Gaussian matrix, QR, phases of the
// triangular diagonal folded back into Q.
Unitary haar_unitary(Eigen::Index dim, SeededRng& rng);

// Hermitian idempotent matrix, validated at construction so repeated
// measurements do not re-pay the spectral check.
class Projector {
 public:
  explicit Projector(Eigen::MatrixXcd matrix, double tolerance = 1e-8);

  Eigen::Index dim() const { return matrix_.cols(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXcd matrix_;
};

// Single-use handle on a transmitted state. Registers are minted only by the
// protocol runtime (which charges the ledger), expose no amplitude read-back,
// cannot be copied, and are consumed by their first measurement.
class QuantumRegister {
 public:
  QuantumRegister(const QuantumRegister&) = delete;
  QuantumRegister& operator=(const QuantumRegister&) = delete;
  QuantumRegister(QuantumRegister&&) noexcept = default;
  QuantumRegister& operator=(QuantumRegister&&) noexcept = default;

  std::uint64_t id() const { return id_; }
  Eigen::Index dim() const { return state_.dim(); }
  bool consumed() const { return consumed_; }

 private:
  QuantumRegister(StateVector state, std::uint64_t id)
      : state_(std::move(state)), id_(id) {}

  friend QuantumRegister mint_register(const StateVector& state,
                                       CostLedger& ledger);
  friend Eigen::Index measure_povm(QuantumRegister& reg, const Povm& povm,
                                   SeededRng& rng);
  friend int measure_two_outcome(QuantumRegister& reg,
                                 const Projector& projector_plus,
                                 SeededRng& rng);

  StateVector state_;
  std::uint64_t id_;
  bool consumed_ = false;
};

// Samples an outcome index from the Born distribution and consumes the
// register. A consumed register throws RegisterConsumedError.
Eigen::Index measure_povm(QuantumRegister& reg, const Povm& povm,
                          SeededRng& rng);

// +1 with probability <psi|P+|psi>, else -1; consumes the register.
int measure_two_outcome(QuantumRegister& reg, const Projector& projector_plus,
                        SeededRng& rng);

}  // namespace qdlab
