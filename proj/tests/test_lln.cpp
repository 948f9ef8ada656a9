// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "semilab/ensemble.hpp"
#include "semilab/lln.hpp"
#include "semilab/operator_core.hpp"
#include "semilab/rng.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using semilab::Complex;
using semilab::ComplexMatrix;
using semilab::DiscreteEnsemble;
using semilab::HamiltonianEnsemble;
using semilab::HermitianOperator;
using semilab::RngStream;
using semilab::StateVector;

const Complex kI{0.0, 1.0};

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

HamiltonianEnsemble pauli_mixture() {
  return DiscreteEnsemble{{{HermitianOperator{pauli_x()}, 0.5},
                           {HermitianOperator{pauli_z()}, 0.5}}};
}

std::vector<StateVector> canonical_probes(Eigen::Index dim) {
  std::vector<StateVector> probes;
  for (Eigen::Index k = 0; k < dim; ++k) {
    StateVector e = StateVector::Zero(dim);
    e(k) = 1.0;
    probes.push_back(e);
  }
  return probes;
}

}  // namespace

TEST_CASE("composition of point-mass draws is the plain propagator") {
  const HamiltonianEnsemble e =
      DiscreteEnsemble{{{HermitianOperator{pauli_z()}, 1.0}}};
  RngStream rng(1, 0);
  for (int n : {1, 4, 16}) {
    const auto u = semilab::sample_composition(e, n, 2.0, rng);
    const auto direct = semilab::expm_hermitian(HermitianOperator{pauli_z()}, 2.0);
    CHECK(semilab::max_entry_norm(u.matrix() - direct.matrix()) < 1e-9);
  }
}

TEST_CASE("single-step composition is one sampled propagator") {
  const HamiltonianEnsemble e = pauli_mixture();
  RngStream draws(9, 2);
  RngStream mirror(9, 2);
  for (int rep = 0; rep < 16; ++rep) {
    const auto u = semilab::sample_composition(e, 1, 0.7, draws);
    const auto h = semilab::sample_hamiltonian(e, mirror);
    const auto direct = semilab::expm_hermitian(h, 0.7);
    CHECK(semilab::max_entry_norm(u.matrix() - direct.matrix()) < 1e-13);
  }
}

TEST_CASE("commuting diagonal draws reduce to a phase sum") {
  // Diagonal atoms commute, so the composition is exp(i (t/n) sum_j H_j)
  // and each diagonal entry is a pure phase determined by the draw counts.
  ComplexMatrix da(2, 2), db(2, 2);
  da << 1, 0, 0, -1;
  db << 2, 0, 0, 3;
  const HamiltonianEnsemble e = DiscreteEnsemble{
      {{HermitianOperator{da}, 0.5}, {HermitianOperator{db}, 0.5}}};

  const int n = 12;
  const double t = 0.9;
  RngStream draws(33, 4);
  RngStream mirror(33, 4);
  const auto u = semilab::sample_composition(e, n, t, draws);

  const auto* atoms = semilab::discrete_atoms(e);
  REQUIRE(atoms != nullptr);
  ComplexMatrix htotal = ComplexMatrix::Zero(2, 2);
  for (int j = 0; j < n; ++j) {
    htotal += (*atoms)[semilab::sample_atom_index(*atoms, mirror)].first.matrix();
  }
  ComplexMatrix expected(2, 2);
  expected << std::exp(kI * (t / n) * htotal(0, 0)), 0, 0,
      std::exp(kI * (t / n) * htotal(1, 1));
  CHECK(semilab::max_entry_norm(u.matrix() - expected) < 1e-12);
}

TEST_CASE("sampled compositions are unitary") {
  const HamiltonianEnsemble discrete = pauli_mixture();
  const HamiltonianEnsemble gaussian = semilab::GaussianHermitianEnsemble{
      HermitianOperator{pauli_z()}, 0.5};
  for (const auto* e : {&discrete, &gaussian}) {
    RngStream rng(17, 0);
    for (int rep = 0; rep < 8; ++rep) {
      const auto u = semilab::sample_composition(*e, 16, 1.3, rng).matrix();
      CHECK(semilab::max_entry_norm(u.adjoint() * u -
                                    ComplexMatrix::Identity(2, 2)) <= 1e-9);
    }
  }
}

TEST_CASE("sample_composition validates its arguments") {
  const HamiltonianEnsemble e = pauli_mixture();
  RngStream rng(1, 0);
  CHECK_THROWS_AS(semilab::sample_composition(e, 0, 1.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(semilab::sample_composition(e, 4, -1.0, rng), std::invalid_argument);
}

TEST_CASE("degenerate ensemble has zero tail at any positive epsilon") {
  const HamiltonianEnsemble e =
      DiscreteEnsemble{{{HermitianOperator{pauli_x()}, 1.0}}};
  RngStream rng(5, 0);
  const auto r = semilab::lln_tail(e, 8, 1.0, 1e-6, 50, canonical_probes(2), rng);
  CHECK(r.tail_probability == 0.0);
  CHECK(r.mean_deviation <= 1e-9);
  CHECK(r.ref_mc_samples == 0);
  CHECK(r.ref_mc_error == 0.0);
}

TEST_CASE("tail probability is monotone in epsilon") {
  const HamiltonianEnsemble e = pauli_mixture();
  const auto probes = canonical_probes(2);
  double prev = 1.1;
  for (double eps : {0.05, 0.15, 0.4, 1.0}) {
    RngStream rng(7, 0);
    const auto r = semilab::lln_tail(e, 8, 1.0, eps, 400, probes, rng);
    CHECK(r.tail_probability <= prev);
    prev = r.tail_probability;
  }
}

TEST_CASE("concentration improves with the number of factors") {
  // More independent factors concentrate the composition around the mean
  // evolution, so both statistics fall from n = 4 to n = 64.
  const HamiltonianEnsemble e = pauli_mixture();
  const auto probes = canonical_probes(2);
  RngStream rng_small(11, 0);
  RngStream rng_large(11, 0);
  const auto small = semilab::lln_tail(e, 4, 1.0, 0.1, 600, probes, rng_small);
  const auto large = semilab::lln_tail(e, 64, 1.0, 0.1, 600, probes, rng_large);
  CHECK(large.tail_probability < small.tail_probability);
  CHECK(large.mean_deviation < small.mean_deviation);
}

TEST_CASE("results are reproducible and worker-count independent") {
  const HamiltonianEnsemble e = pauli_mixture();
  const auto probes = canonical_probes(2);
  RngStream a(13, 0);
  RngStream b(13, 0);
  RngStream c(13, 0);
  const auto serial = semilab::lln_tail(e, 16, 1.0, 0.1, 300, probes, a, 4096, 1);
  const auto rerun = semilab::lln_tail(e, 16, 1.0, 0.1, 300, probes, b, 4096, 1);
  const auto parallel = semilab::lln_tail(e, 16, 1.0, 0.1, 300, probes, c, 4096, 8);
  CHECK(serial.tail_probability == rerun.tail_probability);
  CHECK(serial.mean_deviation == rerun.mean_deviation);
  CHECK(serial.tail_probability == parallel.tail_probability);
  CHECK(serial.mean_deviation == parallel.mean_deviation);
}

TEST_CASE("continuous ensembles record the reference sampling budget") {
  const HamiltonianEnsemble e = semilab::GaussianHermitianEnsemble{
      HermitianOperator{pauli_z()}, 0.3};
  const auto probes = canonical_probes(2);
  RngStream rng(19, 0);
  const auto r = semilab::lln_tail(e, 8, 1.0, 0.3, 100, probes, rng, 1024);
  CHECK(r.ref_mc_samples == 1024);
  CHECK(r.ref_mc_error == doctest::Approx(1.0 / std::sqrt(1024.0)));
}

TEST_CASE("per-probe variant returns one row per probe") {
  const HamiltonianEnsemble e = pauli_mixture();
  const auto probes = canonical_probes(2);
  RngStream per(23, 0);
  const auto rows =
      semilab::lln_tail_per_probe(e, 8, 1.0, 0.1, 200, probes, per);
  REQUIRE(rows.size() == 2);

  // The max-aggregated tail dominates every per-probe tail.
  RngStream agg(23, 0);
  const auto combined = semilab::lln_tail(e, 8, 1.0, 0.1, 200, probes, agg);
  for (const auto& row : rows) {
    CHECK(row.tail_probability <= combined.tail_probability);
    CHECK(row.mean_deviation <= combined.mean_deviation);
    CHECK(row.n == 8);
    CHECK(row.trials == 200);
  }
}

TEST_CASE("lln_tail validates its arguments") {
  const HamiltonianEnsemble e = pauli_mixture();
  const auto probes = canonical_probes(2);
  RngStream rng(1, 0);
  CHECK_THROWS_AS(semilab::lln_tail(e, 0, 1.0, 0.1, 10, probes, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(semilab::lln_tail(e, 4, 0.0, 0.1, 10, probes, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(semilab::lln_tail(e, 4, 1.0, -0.1, 10, probes, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(semilab::lln_tail(e, 4, 1.0, 0.1, 0, probes, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(semilab::lln_tail(e, 4, 1.0, 0.1, 10, {}, rng),
                  std::invalid_argument);

  // Probes must be unit vectors so deviations compare across probes.
  std::vector<StateVector> unnormalized{StateVector::Zero(2)};
  unnormalized[0](0) = 2.0;
  CHECK_THROWS_AS(semilab::lln_tail(e, 4, 1.0, 0.1, 10, unnormalized, rng),
                  std::invalid_argument);
}

TEST_CASE("csv serialization follows the documented schema") {
  semilab::LLNResult r;
  r.n = 8;
  r.t = 1.0;
  r.epsilon = 0.1;
  r.trials = 100;
  r.tail_probability = 0.25;
  r.mean_deviation = 0.0625;
  const std::string csv = semilab::lln_results_to_csv({r});
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,t,epsilon,trials,tail_probability,mean_deviation");
  std::getline(in, line);
  CHECK(line == "8,1,0.1,100,0.25,0.0625");
  CHECK_FALSE(std::getline(in, line));
}
