// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#include "semilab/ensemble.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

namespace semilab {

DiscreteEnsemble::DiscreteEnsemble(std::vector<std::pair<HermitianOperator, double>> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) {
    throw std::invalid_argument("DiscreteEnsemble: at least one atom required");
  }
  const Eigen::Index dim = atoms_.front().first.dim();
  double total = 0.0;
  for (const auto& [op, prob] : atoms_) {
    if (op.dim() != dim) {
      throw std::invalid_argument("DiscreteEnsemble: atoms must share one dimension");
    }
    if (prob < 0.0) {
      throw std::invalid_argument("DiscreteEnsemble: negative probability");
    }
    total += prob;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "DiscreteEnsemble: probabilities must sum to 1, got " << total;
    throw std::invalid_argument(os.str());
  }
}

GaussianHermitianEnsemble::GaussianHermitianEnsemble(HermitianOperator center, double scale)
    : center_(std::move(center)), scale_(scale) {
  if (!(scale_ > 0.0)) {
    throw std::invalid_argument("GaussianHermitianEnsemble: scale must be positive");
  }
}

const std::vector<std::pair<HermitianOperator, double>>* discrete_atoms(
    const HamiltonianEnsemble& e) {
  if (const auto* d = std::get_if<DiscreteEnsemble>(&e)) return &d->atoms();
  if (const auto* q = std::get_if<QuantizationEnsemble>(&e)) return &q->atoms();
  return nullptr;
}

std::size_t sample_atom_index(const std::vector<std::pair<HermitianOperator, double>>& atoms,
                              RngStream& rng) {
  const double u = rng.uniform01();
  double cumulative = 0.0;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    cumulative += atoms[k].second;
    if (u < cumulative) return k;
  }
  return atoms.size() - 1;
}

namespace {

HermitianOperator sample_gaussian(const GaussianHermitianEnsemble& g, RngStream& rng) {
  const Eigen::Index n = g.dim();
  ComplexMatrix raw(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      raw(i, j) = g.scale() * Complex(rng.normal(), rng.normal());
    }
  }
  ComplexMatrix m = g.center().matrix() + 0.5 * (raw + raw.adjoint());
  return HermitianOperator(std::move(m));
}

struct AtomPropagator {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;
  double weight;
};

// Propagator cache: one eigendecomposition per atom, reused for every t.
std::vector<AtomPropagator> decompose_weighted(
    const std::vector<std::pair<HermitianOperator, double>>& atoms) {
  std::vector<AtomPropagator> cache;
  cache.reserve(atoms.size());
  for (const auto& [op, weight] : atoms) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op.matrix());
    if (solver.info() != Eigen::Success) {
      std::ostringstream os;
      os << "averaged_propagator: eigendecomposition failed for dim " << op.dim() << " atom";
      throw eigensolver_error(os.str());
    }
    cache.push_back({solver.eigenvalues(), solver.eigenvectors(), weight});
  }
  return cache;
}

ComplexMatrix weighted_exponential_sum(const std::vector<AtomPropagator>& cache, double t,
                                       Eigen::Index dim) {
  ComplexMatrix accum = ComplexMatrix::Zero(dim, dim);
  Eigen::VectorXcd phases(dim);
  for (const AtomPropagator& atom : cache) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      phases[k] = atom.weight * std::exp(Complex(0.0, t * atom.eigenvalues[k]));
    }
    accum += (atom.eigenvectors * phases.asDiagonal()) * atom.eigenvectors.adjoint();
  }
  return accum;
}

}  // namespace

Eigen::Index ensemble_dim(const HamiltonianEnsemble& e) {
  return std::visit([](const auto& x) { return x.dim(); }, e);
}

bool ensemble_is_discrete(const HamiltonianEnsemble& e) {
  return discrete_atoms(e) != nullptr;
}

HermitianOperator sample_hamiltonian(const HamiltonianEnsemble& e, RngStream& rng) {
  if (const auto* atoms = discrete_atoms(e)) {
    return (*atoms)[sample_atom_index(*atoms, rng)].first;
  }
  return sample_gaussian(std::get<GaussianHermitianEnsemble>(e), rng);
}

HermitianOperator mean_hamiltonian(const HamiltonianEnsemble& e, int mc_samples,
                                   RngStream& rng) {
  if (const auto* atoms = discrete_atoms(e)) {
    const Eigen::Index dim = (*atoms)[0].first.dim();
    ComplexMatrix mean = ComplexMatrix::Zero(dim, dim);
    for (const auto& [op, prob] : *atoms) {
      mean += prob * op.matrix();
    }
    return HermitianOperator(std::move(mean));
  }
  if (mc_samples < 1) {
    throw std::invalid_argument("mean_hamiltonian: mc_samples must be >= 1 for continuous ensembles");
  }
  const auto& gauss = std::get<GaussianHermitianEnsemble>(e);
  const Eigen::Index dim = gauss.dim();
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < mc_samples; ++k) {
    sum += sample_gaussian(gauss, rng).matrix();
  }
  return HermitianOperator(sum / static_cast<double>(mc_samples));
}

OperatorFunction averaged_propagator(const HamiltonianEnsemble& e, int mc_samples,
                                     RngStream& rng) {
  const Eigen::Index dim = ensemble_dim(e);
  std::shared_ptr<const std::vector<AtomPropagator>> cache;

  if (const auto* atoms = discrete_atoms(e)) {
    cache = std::make_shared<const std::vector<AtomPropagator>>(decompose_weighted(*atoms));
  } else {
    if (mc_samples < 1) {
      throw std::invalid_argument(
          "averaged_propagator: mc_samples must be >= 1 for continuous ensembles");
    }
    const auto& gauss = std::get<GaussianHermitianEnsemble>(e);
    std::vector<std::pair<HermitianOperator, double>> frozen;
    frozen.reserve(mc_samples);
    const double weight = 1.0 / static_cast<double>(mc_samples);
    for (int k = 0; k < mc_samples; ++k) {
      frozen.emplace_back(sample_gaussian(gauss, rng), weight);
    }
    cache = std::make_shared<const std::vector<AtomPropagator>>(decompose_weighted(frozen));
  }

  return OperatorFunction(
      dim, std::numeric_limits<double>::infinity(),
      [cache, dim](double t) { return weighted_exponential_sum(*cache, t, dim); });
}

}  // namespace semilab
