// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "semilab/operator_core.hpp"
#include "semilab/quantizer.hpp"
#include "semilab/rng.hpp"

namespace semilab {

/// Finite probability law over Hermitian operators that all share one
/// dimension. Probabilities are nonnegative and sum to 1 within 1e-12.
class DiscreteEnsemble {
 public:
  explicit DiscreteEnsemble(std::vector<std::pair<HermitianOperator, double>> atoms);

  const std::vector<std::pair<HermitianOperator, double>>& atoms() const { return atoms_; }
  Eigen::Index dim() const { return atoms_.front().first.dim(); }

 private:
  std::vector<std::pair<HermitianOperator, double>> atoms_;
};

/// Continuous law: center + (A + A^dagger)/2 where A has iid complex
/// Gaussian entries of standard deviation `scale`. Samples are exactly
/// Hermitian by the symmetrized construction.
class GaussianHermitianEnsemble {
 public:
  GaussianHermitianEnsemble(HermitianOperator center, double scale);

  const HermitianOperator& center() const { return center_; }
  double scale() const { return scale_; }
  Eigen::Index dim() const { return center_.dim(); }

 private:
  HermitianOperator center_;
  double scale_;
};

using HamiltonianEnsemble =
    std::variant<DiscreteEnsemble, GaussianHermitianEnsemble, QuantizationEnsemble>;

Eigen::Index ensemble_dim(const HamiltonianEnsemble& e);
bool ensemble_is_discrete(const HamiltonianEnsemble& e);

/// Atom list of a discrete or quantization ensemble, nullptr otherwise.
const std::vector<std::pair<HermitianOperator, double>>* discrete_atoms(
    const HamiltonianEnsemble& e);

/// Inverse-CDF draw of an atom index; consumes exactly one uniform variate.
/// Every sampler of a discrete law routes through this so that different
/// call sites stay draw-for-draw compatible on a shared stream.
std::size_t sample_atom_index(const std::vector<std::pair<HermitianOperator, double>>& atoms,
                              RngStream& rng);

/// One draw from the ensemble's law; advances the stream.
HermitianOperator sample_hamiltonian(const HamiltonianEnsemble& e, RngStream& rng);

/// The mean Hamiltonian. Exact convex combination for discrete and
/// quantization ensembles (mc_samples and rng are ignored); a Monte Carlo
/// sample mean over mc_samples draws otherwise.
HermitianOperator mean_hamiltonian(const HamiltonianEnsemble& e, int mc_samples, RngStream& rng);

/// The averaged propagator t -> E[exp(i t H)]. Exact finite sum of
/// cached-eigendecomposition exponentials for discrete laws; for continuous
/// laws a Monte Carlo average over one frozen sample set, reused for every
/// t so the result is continuous in t. Defined for all t >= 0.
OperatorFunction averaged_propagator(const HamiltonianEnsemble& e, int mc_samples,
                                     RngStream& rng);

}  // namespace semilab
