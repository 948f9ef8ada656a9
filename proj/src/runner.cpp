// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#include "semilab/runner.hpp"

#include <chrono>
#include <filesystem>
#include <sstream>

#include "semilab/chernoff.hpp"
#include "semilab/lln.hpp"
#include "semilab/rng.hpp"
#include "semilab/shift_semigroup.hpp"
#include "semilab/textio.hpp"

namespace semilab {

namespace {

struct Emitted {
  std::string name;
  std::string content;
};

std::string plot_header() {
  return "set datafile separator ','\n"
         "set key left top\n"
         "set grid\n";
}

std::string chernoff_plot() {
  return plot_header() +
         "set logscale xy\n"
         "set xlabel 'n'\n"
         "set ylabel 'deviation'\n"
         "plot 'report.csv' every ::1 using 1:2 with linespoints title 'deviation'\n";
}

std::string lln_plot() {
  return plot_header() +
         "set logscale x\n"
         "set xlabel 'n'\n"
         "plot 'report.csv' every ::1 using 1:5 with linespoints title 'tail probability', \\\n"
         "     'report.csv' every ::1 using 1:6 with linespoints title 'mean deviation'\n";
}

std::string clt_plot() {
  return plot_header() +
         "set logscale xy\n"
         "set xlabel 'n'\n"
         "set ylabel 'sup-norm error'\n"
         "plot 'report.csv' every ::1 using 1:2 with linespoints title 'error'\n";
}

// The averaged propagator and the mean Hamiltonian must describe the same
// law, so for sampled (continuous) ensembles both consume a stream rebuilt
// from the same fixed index: identical draws, one frozen sample set.
OperatorFunction build_averaged(const HamiltonianEnsemble& ensemble, int mc_samples,
                                std::uint64_t seed) {
  RngStream stream(seed, kStreamEnsembleMc);
  return averaged_propagator(ensemble, mc_samples, stream);
}

HermitianOperator build_mean(const HamiltonianEnsemble& ensemble, int mc_samples,
                             std::uint64_t seed) {
  RngStream stream(seed, kStreamEnsembleMc);
  return mean_hamiltonian(ensemble, mc_samples, stream);
}

std::vector<StateVector> canonical_probes(Eigen::Index dim, Eigen::Index count) {
  std::vector<StateVector> probes;
  probes.reserve(static_cast<std::size_t>(count));
  for (Eigen::Index k = 0; k < count; ++k) {
    StateVector e = StateVector::Zero(dim);
    e[k] = Complex(1.0, 0.0);
    probes.push_back(std::move(e));
  }
  return probes;
}

std::vector<Emitted> run_chernoff(const ChernoffParams& p, std::uint64_t seed, int workers) {
  const OperatorFunction averaged = build_averaged(p.ensemble, p.mc_samples, seed);
  const OperatorFunction reference =
      hamiltonian_semigroup(build_mean(p.ensemble, p.mc_samples, seed));
  const std::vector<StateVector> probes =
      default_probe_vectors(ensemble_dim(p.ensemble), p.random_probes, seed);
  const ChernoffReport report = equivalence_report(averaged, reference, p.T, p.schedule,
                                                   probes, p.grid_points, workers);
  return {{"report.csv", report.to_csv()}, {"plot.gp", chernoff_plot()}};
}

std::vector<Emitted> run_lln(const LlnParams& p, std::uint64_t seed, int workers) {
  const Eigen::Index dim = ensemble_dim(p.ensemble);
  const std::vector<StateVector> probes = canonical_probes(dim, dim);
  RngStream master(seed, 0);

  std::vector<Emitted> outputs;
  if (p.per_probe) {
    std::vector<std::vector<LLNResult>> per_probe_rows(probes.size());
    for (int n : p.schedule) {
      const std::vector<LLNResult> rows = lln_tail_per_probe(
          p.ensemble, n, p.t, p.epsilon, p.trials, probes, master, p.ref_mc_samples, workers);
      for (std::size_t i = 0; i < rows.size(); ++i) per_probe_rows[i].push_back(rows[i]);
    }
    std::vector<LLNResult> aggregated;
    for (int n : p.schedule) {
      aggregated.push_back(lln_tail(p.ensemble, n, p.t, p.epsilon, p.trials, probes, master,
                                    p.ref_mc_samples, workers));
    }
    outputs.push_back({"report.csv", lln_results_to_csv(aggregated)});
    for (std::size_t i = 0; i < per_probe_rows.size(); ++i) {
      std::ostringstream name;
      name << "probe" << i << ".csv";
      outputs.push_back({name.str(), lln_results_to_csv(per_probe_rows[i])});
    }
  } else {
    std::vector<LLNResult> rows;
    for (int n : p.schedule) {
      rows.push_back(lln_tail(p.ensemble, n, p.t, p.epsilon, p.trials, probes, master,
                              p.ref_mc_samples, workers));
    }
    outputs.push_back({"report.csv", lln_results_to_csv(rows)});
  }
  outputs.push_back({"plot.gp", lln_plot()});
  return outputs;
}

std::vector<Emitted> run_clt(const CltParams& p) {
  const PeriodicGridFunction u = trig_polynomial(p.period, p.grid_size, p.modes);
  const std::vector<CltErrorRow> rows = clt_error(u, p.process, p.t, p.schedule);
  return {{"report.csv", clt_error_to_csv(rows)}, {"plot.gp", clt_plot()}};
}

std::vector<Emitted> run_quantize(const QuantizeParams& p, std::uint64_t seed, int workers) {
  const QuantizationEnsemble ensemble =
      quantization_ensemble(p.symbol, p.rules, OscillatorBasis{p.dimension, p.hbar});
  const HamiltonianEnsemble wrapped(ensemble);

  const OperatorFunction averaged = build_averaged(wrapped, 1, seed);
  const OperatorFunction reference = hamiltonian_semigroup(build_mean(wrapped, 1, seed));

  // Truncation pollutes the top of the basis, so probes span only the
  // low-lying half.
  const Eigen::Index dim = ensemble.dim();
  const std::vector<StateVector> probes = canonical_probes(dim, std::max<Eigen::Index>(1, dim / 2));

  const ChernoffReport report = equivalence_report(averaged, reference, p.T, p.schedule,
                                                   probes, p.grid_points, workers);
  return {{"report.csv", report.to_csv()}, {"plot.gp", chernoff_plot()}};
}

}  // namespace

std::string RunManifest::to_text() const {
  std::ostringstream os;
  os << "semilab " << version << '\n';
  os << "status: " << (ok ? "ok" : "failed: " + error) << '\n';
  os << "experiment: " << to_string(kind) << '\n';
  os << "seed: " << seed << '\n';
  if (workers > 0) {
    os << "workers: " << workers << '\n';
  } else {
    os << "workers: auto\n";
  }
  os << "wall_seconds: " << format_double(wall_seconds) << '\n';
  for (const auto& [file, digest] : checksums) {
    os << "output " << file << " fnv1a64 " << digest << '\n';
  }
  os << "config:\n" << config_echo;
  return os.str();
}

RunManifest run_experiment(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();

  RunManifest manifest;
  manifest.kind = cfg.kind;
  manifest.seed = cfg.seed;
  manifest.workers = cfg.workers;
  manifest.config_echo = cfg.to_json();

  const std::filesystem::path out_dir(cfg.output_dir);
  try {
    std::filesystem::create_directories(out_dir);

    std::vector<Emitted> outputs;
    switch (cfg.kind) {
      case ExperimentKind::Chernoff:
        outputs = run_chernoff(std::get<ChernoffParams>(cfg.params), cfg.seed, cfg.workers);
        break;
      case ExperimentKind::Lln:
        outputs = run_lln(std::get<LlnParams>(cfg.params), cfg.seed, cfg.workers);
        break;
      case ExperimentKind::Clt:
        outputs = run_clt(std::get<CltParams>(cfg.params));
        break;
      case ExperimentKind::Quantize:
        outputs = run_quantize(std::get<QuantizeParams>(cfg.params), cfg.seed, cfg.workers);
        break;
    }

    for (const Emitted& file : outputs) {
      write_text_file((out_dir / file.name).string(), file.content);
      manifest.checksums.emplace_back(file.name, to_hex64(fnv1a64(file.content)));
    }
    manifest.ok = true;
  } catch (const std::exception& e) {
    manifest.ok = false;
    manifest.error = e.what();
  }

  manifest.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  // The manifest must land even when the run failed; a manifest-write
  // failure is itself reported through the status.
  try {
    write_text_file((out_dir / "manifest.txt").string(), manifest.to_text());
  } catch (const std::exception& e) {
    manifest.ok = false;
    if (manifest.error.empty()) manifest.error = e.what();
  }
  return manifest;
}

}  // namespace semilab
