#include "qdlab/quantum.hpp"

#include <atomic>
#include <cmath>

#include "qdlab/errors.hpp"
#include "qdlab/runtime.hpp"

namespace qdlab {
namespace {

std::atomic<std::uint64_t> next_register_id{1};

void require_hermitian(const Eigen::MatrixXcd& m, double tolerance,
                       const char* what) {
  if (m.rows() != m.cols()) throw ValidationError(std::string(what) + ": not square");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tolerance)
    throw ValidationError(std::string(what) + ": not Hermitian");
}

void require_psd(const Eigen::MatrixXcd& m, double tolerance, const char* what) {
  require_hermitian(m, 1e-8, what);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      m, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tolerance)
    throw ValidationError(std::string(what) + ": not positive semidefinite");
}

}  // namespace

StateVector StateVector::from_amplitudes(Eigen::VectorXcd amplitudes,
                                         double tolerance) {
  if (amplitudes.size() < 1)
    throw ValidationError("state: dimension must be >= 1");
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > tolerance)
    throw ValidationError("state: norm " + std::to_string(norm) + " is not 1");
  return StateVector(std::move(amplitudes));
}

StateVector normalize(const Eigen::VectorXcd& v) {
  const double norm = v.norm();
  if (norm < 1e-300 || !std::isfinite(norm))
    throw ValidationError("normalize: zero or non-finite vector");
  return StateVector::from_amplitudes(v / norm, 1e-6);
}

StateVector basis_state(Eigen::Index dim, Eigen::Index index) {
  if (index < 0 || index >= dim)
    throw DimensionError("basis_state: index out of range");
  Eigen::VectorXcd amplitudes = Eigen::VectorXcd::Zero(dim);
  amplitudes(index) = 1.0;
  return StateVector::from_amplitudes(std::move(amplitudes));
}

Povm Povm::from_elements(std::vector<Eigen::MatrixXcd> elements,
                         double psd_tolerance, double completeness_tolerance) {
  if (elements.empty()) throw ValidationError("povm: no elements");
  const Eigen::Index dim = elements.front().rows();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& element : elements) {
    if (element.rows() != dim || element.cols() != dim)
      throw DimensionError("povm: element dimensions differ");
    require_psd(element, psd_tolerance, "povm element");
    sum += element;
  }
  const double defect =
      (sum - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (defect > completeness_tolerance)
    throw ValidationError("povm: elements sum to identity with defect " +
                          std::to_string(defect));
  Povm povm;
  povm.dim_ = dim;
  povm.elements_ = std::move(elements);
  return povm;
}

Povm Povm::from_rank_one(Eigen::MatrixXcd factors, bool validate,
                         double completeness_tolerance) {
  if (factors.cols() == 0 || factors.rows() == 0)
    throw ValidationError("povm: no rank-one factors");
  Povm povm;
  povm.dim_ = factors.rows();
  povm.factors_ = std::move(factors);
  if (validate) {
    const double defect = povm.completeness_defect();
    if (defect > completeness_tolerance)
      throw ValidationError("povm: rank-one factors sum to identity with defect " +
                            std::to_string(defect));
  }
  return povm;
}

Povm Povm::from_rank_one_with_residual(Eigen::MatrixXcd factors,
                                       double psd_tolerance) {
  if (factors.cols() == 0 || factors.rows() == 0)
    throw ValidationError("povm: no rank-one factors");
  const Eigen::Index dim = factors.rows();
  const Eigen::MatrixXcd residual =
      Eigen::MatrixXcd::Identity(dim, dim) - factors * factors.adjoint();
  require_psd(residual, psd_tolerance, "povm residual");
  Povm povm;
  povm.dim_ = dim;
  povm.factors_ = std::move(factors);
  povm.has_residual_ = true;
  return povm;
}

std::size_t Povm::size() const {
  if (!elements_.empty()) return elements_.size();
  return static_cast<std::size_t>(factors_.cols()) + (has_residual_ ? 1 : 0);
}

Eigen::MatrixXcd Povm::element(std::size_t k) const {
  if (k >= size()) throw DimensionError("povm: element index out of range");
  if (!elements_.empty()) return elements_[k];
  if (has_residual_ && k == size() - 1)
    return Eigen::MatrixXcd::Identity(dim_, dim_) - factors_ * factors_.adjoint();
  return factors_.col(static_cast<Eigen::Index>(k)) *
         factors_.col(static_cast<Eigen::Index>(k)).adjoint();
}

double Povm::completeness_defect() const {
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (std::size_t k = 0; k < size(); ++k) sum += element(k);
  return (sum - Eigen::MatrixXcd::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
}

Eigen::VectorXd Povm::outcome_probabilities(const StateVector& state) const {
  if (state.dim() != dim_)
    throw DimensionError("povm: state dimension mismatch");
  const Eigen::VectorXcd& psi = state.amplitudes();
  if (!elements_.empty()) {
    Eigen::VectorXd probs(elements_.size());
    for (std::size_t k = 0; k < elements_.size(); ++k)
      probs(static_cast<Eigen::Index>(k)) =
          std::real(psi.dot(elements_[k] * psi));
    return probs;
  }
  Eigen::VectorXd rank_one = (factors_.adjoint() * psi).cwiseAbs2();
  if (!has_residual_) return rank_one;
  Eigen::VectorXd probs(rank_one.size() + 1);
  probs.head(rank_one.size()) = rank_one;
  probs(rank_one.size()) = 1.0 - rank_one.sum();
  return probs;
}

Distribution born_probabilities(const StateVector& state, const Povm& povm) {
  Eigen::VectorXd probs = povm.outcome_probabilities(state);
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    if (probs(i) < -1e-9)
      throw ValidationError("born_probabilities: negative probability");
    if (probs(i) < 0.0) probs(i) = 0.0;
  }
  const double sum = probs.sum();
  if (std::abs(sum - 1.0) > 1e-8)
    throw ValidationError("born_probabilities: incomplete POVM, mass " +
                          std::to_string(sum));
  return Distribution::from_probabilities(std::move(probs), 1e-8);
}

Unitary Unitary::from_matrix(Eigen::MatrixXcd entries, double tolerance) {
  if (entries.rows() != entries.cols() || entries.rows() < 1)
    throw ValidationError("unitary: not square");
  const Eigen::Index dim = entries.cols();
  const double defect = (entries.adjoint() * entries -
                         Eigen::MatrixXcd::Identity(dim, dim))
                            .cwiseAbs()
                            .maxCoeff();
  if (defect > tolerance)
    throw ValidationError("unitary: U^dag U deviates from identity by " +
                          std::to_string(defect));
  return Unitary(std::move(entries));
}

Unitary haar_unitary(Eigen::Index dim, SeededRng& rng) {
  if (dim < 1) throw ValidationError("haar_unitary: dim must be >= 1");
  Eigen::MatrixXcd gaussian(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i)
      gaussian(i, j) = std::complex<double>(rng.gaussian(), rng.gaussian());
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gaussian);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Normalizing the phases of diag(R) makes the factorization unique and the
  // resulting Q exactly Haar-distributed.
  for (Eigen::Index j = 0; j < dim; ++j) {
    const std::complex<double> d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? (d / mag) : 1.0;
  }
  return Unitary::from_matrix(std::move(q));
}

Projector::Projector(Eigen::MatrixXcd matrix, double tolerance)
    : matrix_(std::move(matrix)) {
  require_hermitian(matrix_, tolerance, "projector");
  const double defect =
      (matrix_ * matrix_ - matrix_).cwiseAbs().maxCoeff();
  if (defect > tolerance)
    throw ValidationError("projector: not idempotent, defect " +
                          std::to_string(defect));
}

QuantumRegister mint_register(const StateVector& state, CostLedger& ledger) {
  ledger.charge_qubits(qubit_cost(state.dim()));
  return QuantumRegister(state, next_register_id.fetch_add(1));
}

Eigen::Index measure_povm(QuantumRegister& reg, const Povm& povm,
                          SeededRng& rng) {
  if (reg.consumed_)
    throw RegisterConsumedError("measure_povm: register already consumed");
  const Distribution distribution = born_probabilities(reg.state_, povm);
  reg.consumed_ = true;
  return distribution.sample_index(rng.uniform());
}

int measure_two_outcome(QuantumRegister& reg, const Projector& projector_plus,
                        SeededRng& rng) {
  if (reg.consumed_)
    throw RegisterConsumedError("measure_two_outcome: register already consumed");
  if (projector_plus.dim() != reg.dim())
    throw DimensionError("measure_two_outcome: dimension mismatch");
  const Eigen::VectorXcd& psi = reg.state_.amplitudes();
  double p_plus = std::real(psi.dot(projector_plus.matrix() * psi));
  p_plus = std::clamp(p_plus, 0.0, 1.0);
  reg.consumed_ = true;
  return rng.uniform() < p_plus ? +1 : -1;
}

}  // namespace qdlab
