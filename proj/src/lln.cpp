// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#include "semilab/lln.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "semilab/parallel.hpp"
#include "semilab/textio.hpp"

namespace semilab {

std::string LLNResult::to_csv_row() const {
  std::ostringstream out;
  out << n << ',' << format_double(t) << ',' << format_double(epsilon) << ',' << trials << ','
      << format_double(tail_probability) << ',' << format_double(mean_deviation);
  return out.str();
}

std::string lln_results_to_csv(const std::vector<LLNResult>& rows) {
  std::ostringstream out;
  out << "n,t,epsilon,trials,tail_probability,mean_deviation\n";
  for (const LLNResult& row : rows) {
    out << row.to_csv_row() << '\n';
  }
  return out.str();
}

namespace {

// One unitary step drawn from the law at time step dt. Discrete laws use a
// per-atom propagator cache and must consume exactly one uniform variate per
// draw, matching sample_hamiltonian's consumption on the same stream.
struct StepSampler {
  const std::vector<std::pair<HermitianOperator, double>>* atoms = nullptr;
  std::vector<ComplexMatrix> atom_steps;
  const HamiltonianEnsemble* ensemble = nullptr;
  double dt = 0.0;

  StepSampler(const HamiltonianEnsemble& e, double dt_in) : ensemble(&e), dt(dt_in) {
    atoms = discrete_atoms(e);
    if (atoms) {
      atom_steps.reserve(atoms->size());
      for (const auto& [op, prob] : *atoms) {
        atom_steps.push_back(expm_hermitian(op, dt).matrix());
      }
    }
  }

  ComplexMatrix draw(RngStream& rng) const {
    if (atoms) {
      return atom_steps[sample_atom_index(*atoms, rng)];
    }
    return expm_hermitian(sample_hamiltonian(*ensemble, rng), dt).matrix();
  }
};

ComplexMatrix compose(const StepSampler& sampler, int n, Eigen::Index dim, RngStream& rng) {
  ComplexMatrix prod = ComplexMatrix::Identity(dim, dim);
  for (int k = 0; k < n; ++k) {
    prod = sampler.draw(rng) * prod;
  }
  return prod;
}

void validate_probes(const std::vector<StateVector>& probes, Eigen::Index dim) {
  if (probes.empty()) {
    throw std::invalid_argument("lln_tail: probe set is empty");
  }
  for (const StateVector& x : probes) {
    if (x.size() != dim) {
      throw std::invalid_argument("lln_tail: probe dimension mismatch");
    }
    if (std::abs(x.norm() - 1.0) > 1e-9) {
      throw std::invalid_argument("lln_tail: probes must be unit-normalized");
    }
  }
}

// deviations(j, i) = || composition_j probe_i - reference probe_i ||.
// Trial j draws from stream j of the master seed regardless of worker count.
Eigen::MatrixXd trial_deviation_matrix(const HamiltonianEnsemble& e, int n, double t,
                                       int trials, const std::vector<StateVector>& probes,
                                       RngStream& rng, int ref_mc_samples, int workers) {
  const Eigen::Index dim = ensemble_dim(e);
  const double dt = t / static_cast<double>(n);

  RngStream ref_rng(rng.seed(), kStreamReferenceMc);
  const OperatorFunction mean_propagator = averaged_propagator(e, ref_mc_samples, ref_rng);
  const ComplexMatrix reference = operator_power(mean_propagator(dt), n);

  std::vector<StateVector> reference_images;
  reference_images.reserve(probes.size());
  for (const StateVector& x : probes) {
    reference_images.push_back(reference * x);
  }

  const StepSampler sampler(e, dt);
  Eigen::MatrixXd deviations(trials, static_cast<Eigen::Index>(probes.size()));

  parallel_for_indexed(static_cast<std::size_t>(trials), workers, [&](std::size_t j) {
    RngStream trial_rng(rng.seed(), static_cast<std::uint64_t>(j));
    const ComplexMatrix composition = compose(sampler, n, dim, trial_rng);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      deviations(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
          (composition * probes[i] - reference_images[i]).norm();
    }
  });
  return deviations;
}

LLNResult aggregate(const Eigen::VectorXd& per_trial, int n, double t, double epsilon,
                    int trials, const HamiltonianEnsemble& e, int ref_mc_samples) {
  LLNResult result;
  result.n = n;
  result.t = t;
  result.epsilon = epsilon;
  result.trials = trials;

  int exceed = 0;
  double sum = 0.0;
  for (Eigen::Index j = 0; j < per_trial.size(); ++j) {
    if (per_trial[j] > epsilon) ++exceed;
    sum += per_trial[j];
  }
  result.tail_probability = static_cast<double>(exceed) / static_cast<double>(trials);
  result.mean_deviation = sum / static_cast<double>(trials);

  if (!ensemble_is_discrete(e)) {
    result.ref_mc_samples = ref_mc_samples;
    result.ref_mc_error = 1.0 / std::sqrt(static_cast<double>(ref_mc_samples));
  }
  return result;
}

void validate_tail_args(int n, double t, double epsilon, int trials, int ref_mc_samples) {
  if (n < 1) throw std::invalid_argument("lln_tail: n must be >= 1");
  if (!(t > 0.0)) throw std::invalid_argument("lln_tail: t must be positive");
  if (!(epsilon > 0.0)) throw std::invalid_argument("lln_tail: epsilon must be positive");
  if (trials < 1) throw std::invalid_argument("lln_tail: trials must be >= 1");
  if (ref_mc_samples < 1) {
    throw std::invalid_argument("lln_tail: ref_mc_samples must be >= 1");
  }
}

}  // namespace

UnitaryOperator sample_composition(const HamiltonianEnsemble& e, int n, double t,
                                   RngStream& rng) {
  if (n < 1) {
    throw std::invalid_argument("sample_composition: n must be >= 1");
  }
  if (t < 0.0) {
    throw std::invalid_argument("sample_composition: t must be nonnegative");
  }
  const Eigen::Index dim = ensemble_dim(e);
  const StepSampler sampler(e, t / static_cast<double>(n));
  return UnitaryOperator(compose(sampler, n, dim, rng));
}

LLNResult lln_tail(const HamiltonianEnsemble& e, int n, double t, double epsilon,
                   int trials, const std::vector<StateVector>& probes, RngStream& rng,
                   int ref_mc_samples, int workers) {
  validate_tail_args(n, t, epsilon, trials, ref_mc_samples);
  validate_probes(probes, ensemble_dim(e));

  const Eigen::MatrixXd deviations =
      trial_deviation_matrix(e, n, t, trials, probes, rng, ref_mc_samples, workers);
  const Eigen::VectorXd per_trial = deviations.rowwise().maxCoeff();
  return aggregate(per_trial, n, t, epsilon, trials, e, ref_mc_samples);
}

std::vector<LLNResult> lln_tail_per_probe(const HamiltonianEnsemble& e, int n, double t,
                                          double epsilon, int trials,
                                          const std::vector<StateVector>& probes,
                                          RngStream& rng, int ref_mc_samples, int workers) {
  validate_tail_args(n, t, epsilon, trials, ref_mc_samples);
  validate_probes(probes, ensemble_dim(e));

  const Eigen::MatrixXd deviations =
      trial_deviation_matrix(e, n, t, trials, probes, rng, ref_mc_samples, workers);
  std::vector<LLNResult> results;
  results.reserve(probes.size());
  for (std::size_t i = 0; i < probes.size(); ++i) {
    results.push_back(aggregate(deviations.col(static_cast<Eigen::Index>(i)), n, t, epsilon,
                                trials, e, ref_mc_samples));
  }
  return results;
}

}  // namespace semilab
