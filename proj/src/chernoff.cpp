// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#include "semilab/chernoff.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "semilab/parallel.hpp"
#include "semilab/rng.hpp"
#include "semilab/textio.hpp"

namespace semilab {

std::string ChernoffReport::to_csv() const {
  std::ostringstream out;
  out << "n,deviation,decay_ratio\n";
  for (std::size_t k = 0; k < n_schedule.size(); ++k) {
    out << n_schedule[k] << ',' << format_double(deviations[k]) << ',';
    if (k > 0) out << format_double(decay_ratios[k - 1]);
    out << '\n';
  }
  return out.str();
}

ComplexMatrix chernoff_power(const OperatorFunction& f, double t, int n) {
  if (n < 1) {
    throw std::invalid_argument("chernoff_power: n must be >= 1");
  }
  if (t < 0.0) {
    throw std::domain_error("chernoff_power: t must be nonnegative");
  }
  // operator() re-checks the domain; dividing first keeps t/n <= t_max
  // reachable even when t itself exceeds the horizon.
  const ComplexMatrix step = f(t / static_cast<double>(n));
  if (n == 1) return step;
  return operator_power(step, n);
}

double chernoff_deviation(const OperatorFunction& f, const OperatorFunction& reference,
                          double T, int n, const std::vector<StateVector>& probes,
                          int grid_points) {
  if (f.dim() != reference.dim()) {
    throw std::invalid_argument("chernoff_deviation: dimension mismatch");
  }
  if (probes.empty()) {
    throw std::invalid_argument("chernoff_deviation: probe set is empty");
  }
  if (!(T > 0.0)) {
    throw std::invalid_argument("chernoff_deviation: T must be positive");
  }
  if (grid_points < 2) {
    throw std::invalid_argument("chernoff_deviation: grid_points must be >= 2");
  }
  for (const StateVector& u : probes) {
    if (u.size() != f.dim()) {
      throw std::invalid_argument("chernoff_deviation: probe dimension mismatch");
    }
  }

  double worst = 0.0;
  for (int g = 0; g < grid_points; ++g) {
    const double t = T * static_cast<double>(g) / static_cast<double>(grid_points - 1);
    const ComplexMatrix power = chernoff_power(f, t, n);
    const ComplexMatrix target = reference(t);
    for (const StateVector& u : probes) {
      const double dev = (power * u - target * u).norm();
      if (dev > worst) worst = dev;
    }
  }
  return worst;
}

ComplexMatrix generator_fd(const OperatorFunction& f, double h) {
  if (!(h > 0.0)) {
    throw std::invalid_argument("generator_fd: h must be positive");
  }
  if (2.0 * h > f.t_max()) {
    std::ostringstream os;
    os << "generator_fd: stencil node 2h = " << 2.0 * h << " exceeds horizon " << f.t_max();
    throw std::domain_error(os.str());
  }
  return (-3.0 * f(0.0) + 4.0 * f(h) - f(2.0 * h)) / (2.0 * h);
}

std::vector<StateVector> default_probe_vectors(Eigen::Index dim, int n_random,
                                               std::uint64_t seed) {
  if (dim < 1) {
    throw std::invalid_argument("default_probe_vectors: dim must be >= 1");
  }
  if (n_random < 0) {
    throw std::invalid_argument("default_probe_vectors: n_random must be >= 0");
  }
  std::vector<StateVector> probes;
  probes.reserve(static_cast<std::size_t>(dim) + static_cast<std::size_t>(n_random));
  for (Eigen::Index k = 0; k < dim; ++k) {
    StateVector e = StateVector::Zero(dim);
    e[k] = Complex(1.0, 0.0);
    probes.push_back(std::move(e));
  }
  RngStream rng(seed, kStreamProbeVectors);
  for (int r = 0; r < n_random; ++r) {
    StateVector v(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
      v[k] = Complex(rng.normal(), rng.normal());
    }
    const double norm = v.norm();
    if (norm == 0.0) {
      // Astronomically unlikely; fall back to a canonical direction.
      v[0] = Complex(1.0, 0.0);
      probes.push_back(std::move(v));
      continue;
    }
    probes.push_back(v / norm);
  }
  return probes;
}

ChernoffReport equivalence_report(const OperatorFunction& f, const OperatorFunction& reference,
                                  double T, const std::vector<int>& n_schedule,
                                  const std::vector<StateVector>& probes, int grid_points,
                                  int workers) {
  if (n_schedule.empty()) {
    throw std::invalid_argument("equivalence_report: schedule is empty");
  }
  for (std::size_t k = 0; k < n_schedule.size(); ++k) {
    if (n_schedule[k] < 1) {
      throw std::invalid_argument("equivalence_report: schedule entries must be >= 1");
    }
    if (k > 0 && n_schedule[k] <= n_schedule[k - 1]) {
      throw std::invalid_argument("equivalence_report: schedule must be strictly increasing");
    }
  }

  ChernoffReport report;
  report.n_schedule = n_schedule;
  report.deviations.assign(n_schedule.size(), 0.0);
  report.test_vectors = static_cast<int>(probes.size());
  report.T = T;

  // Each schedule index owns its output slot, so worker count cannot
  // reorder or perturb the report.
  parallel_for_indexed(n_schedule.size(), workers, [&](std::size_t k) {
    report.deviations[k] =
        chernoff_deviation(f, reference, T, n_schedule[k], probes, grid_points);
  });

  report.decay_ratios.reserve(n_schedule.size() - 1);
  for (std::size_t k = 0; k + 1 < n_schedule.size(); ++k) {
    const double denom = report.deviations[k];
    report.decay_ratios.push_back(denom == 0.0 ? 0.0 : report.deviations[k + 1] / denom);
  }
  return report;
}

}  // namespace semilab
