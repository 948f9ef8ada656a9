// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#include "semilab/config.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "semilab/textio.hpp"

namespace semilab {

namespace {

using json = nlohmann::ordered_json;

struct Collector {
  std::vector<ConfigError>& errors;

  void add(std::string where, std::string message) {
    errors.push_back({std::move(where), std::move(message), 0, 0});
  }
};

std::string join_path(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

std::string indexed(const std::string& base, std::size_t i) {
  std::ostringstream os;
  os << base << "[" << i << "]";
  return os.str();
}

const json* find_field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::optional<double> read_number(const json& j, const std::string& where, Collector& out) {
  if (!j.is_number()) {
    out.add(where, "must be a number");
    return std::nullopt;
  }
  return j.get<double>();
}

std::optional<double> read_positive(const json& j, const std::string& where, Collector& out) {
  auto value = read_number(j, where, out);
  if (value && !(*value > 0.0)) {
    out.add(where, "must be positive");
    return std::nullopt;
  }
  return value;
}

std::optional<int> read_positive_int(const json& j, const std::string& where, Collector& out) {
  if (!j.is_number_integer()) {
    out.add(where, "must be an integer");
    return std::nullopt;
  }
  const auto value = j.get<std::int64_t>();
  if (value < 1 || value > (std::int64_t{1} << 31)) {
    out.add(where, "must be a positive 32-bit integer");
    return std::nullopt;
  }
  return static_cast<int>(value);
}

std::optional<std::uint64_t> read_seed(const json& j, const std::string& where, Collector& out) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  out.add(where, "must be a nonnegative 64-bit integer");
  return std::nullopt;
}

std::optional<std::vector<int>> read_schedule(const json& j, const std::string& where,
                                              Collector& out) {
  if (!j.is_array() || j.empty()) {
    out.add(where, "must be a nonempty array of integers");
    return std::nullopt;
  }
  std::vector<int> schedule;
  bool bad = false;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto n = read_positive_int(j[i], indexed(where, i), out);
    if (!n) {
      bad = true;
      continue;
    }
    if (!schedule.empty() && *n <= schedule.back()) {
      out.add(indexed(where, i), "schedule must be strictly increasing");
      bad = true;
    }
    schedule.push_back(*n);
  }
  if (bad) return std::nullopt;
  return schedule;
}

std::optional<Complex> read_entry(const json& j, const std::string& where, Collector& out) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  out.add(where, "matrix entry must be a number or a [re, im] pair");
  return std::nullopt;
}

std::optional<ComplexMatrix> read_matrix(const json& j, const std::string& where,
                                         Collector& out) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    ComplexMatrix m(2, 2);
    if (name == "sigma_x") {
      m << 0, 1, 1, 0;
    } else if (name == "sigma_y") {
      m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    } else if (name == "sigma_z") {
      m << 1, 0, 0, -1;
    } else {
      out.add(where, "unknown matrix name '" + name +
                         "' (expected sigma_x, sigma_y, or sigma_z)");
      return std::nullopt;
    }
    return m;
  }
  if (!j.is_array() || j.empty()) {
    out.add(where, "must be a matrix: array of rows or a named matrix");
    return std::nullopt;
  }
  const std::size_t n = j.size();
  ComplexMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) {
      out.add(indexed(where, r), "matrix rows must all have length equal to the row count");
      return std::nullopt;
    }
    for (std::size_t c = 0; c < n; ++c) {
      auto entry = read_entry(j[r][c], indexed(indexed(where, r), c), out);
      if (!entry) return std::nullopt;
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = *entry;
    }
  }
  return m;
}

std::optional<HermitianOperator> read_hermitian(const json& j, const std::string& where,
                                                Collector& out) {
  auto m = read_matrix(j, where, out);
  if (!m) return std::nullopt;
  try {
    return HermitianOperator(std::move(*m));
  } catch (const std::exception& e) {
    out.add(where, e.what());
    return std::nullopt;
  }
}

std::optional<std::vector<std::pair<QuantizationRule, double>>> read_rules(
    const json& j, const std::string& where, Collector& out) {
  if (!j.is_array() || j.empty()) {
    out.add(where, "must be a nonempty array of {rule, probability}");
    return std::nullopt;
  }
  std::vector<std::pair<QuantizationRule, double>> rules;
  bool bad = false;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string item_path = indexed(where, i);
    if (!j[i].is_object()) {
      out.add(item_path, "must be an object {rule, probability}");
      bad = true;
      continue;
    }
    const json* rule = find_field(j[i], "rule");
    const json* prob = find_field(j[i], "probability");
    if (!rule || !rule->is_string()) {
      out.add(join_path(item_path, "rule"), "missing required field: rule");
      bad = true;
      continue;
    }
    const std::string name = rule->get<std::string>();
    QuantizationRule parsed;
    if (name == "weyl") {
      parsed = QuantizationRule::Weyl;
    } else if (name == "born_jordan") {
      parsed = QuantizationRule::BornJordan;
    } else {
      out.add(join_path(item_path, "rule"),
              "unknown rule '" + name + "' (expected weyl or born_jordan)");
      bad = true;
      continue;
    }
    if (!prob) {
      out.add(join_path(item_path, "probability"), "missing required field: probability");
      bad = true;
      continue;
    }
    auto p = read_number(*prob, join_path(item_path, "probability"), out);
    if (!p) {
      bad = true;
      continue;
    }
    rules.emplace_back(parsed, *p);
  }
  if (bad) return std::nullopt;
  return rules;
}

std::optional<HamiltonianEnsemble> read_ensemble(const json& j, const std::string& where,
                                                 Collector& out) {
  if (!j.is_object()) {
    out.add(where, "must be an object with a type field");
    return std::nullopt;
  }
  const json* type = find_field(j, "type");
  if (!type || !type->is_string()) {
    out.add(join_path(where, "type"), "missing required field: type");
    return std::nullopt;
  }
  const std::string kind = type->get<std::string>();

  if (kind == "discrete") {
    const json* atoms = find_field(j, "atoms");
    if (!atoms || !atoms->is_array() || atoms->empty()) {
      out.add(join_path(where, "atoms"), "missing required field: atoms (nonempty array)");
      return std::nullopt;
    }
    std::vector<std::pair<HermitianOperator, double>> parsed;
    bool bad = false;
    for (std::size_t i = 0; i < atoms->size(); ++i) {
      const std::string atom_path = indexed(join_path(where, "atoms"), i);
      if (!(*atoms)[i].is_object()) {
        out.add(atom_path, "must be an object {matrix, probability}");
        bad = true;
        continue;
      }
      const json* matrix = find_field((*atoms)[i], "matrix");
      const json* prob = find_field((*atoms)[i], "probability");
      if (!matrix) {
        out.add(join_path(atom_path, "matrix"), "missing required field: matrix");
        bad = true;
      }
      if (!prob) {
        out.add(join_path(atom_path, "probability"), "missing required field: probability");
        bad = true;
      }
      if (!matrix || !prob) continue;
      auto op = read_hermitian(*matrix, join_path(atom_path, "matrix"), out);
      auto p = read_number(*prob, join_path(atom_path, "probability"), out);
      if (!op || !p) {
        bad = true;
        continue;
      }
      parsed.emplace_back(std::move(*op), *p);
    }
    if (bad) return std::nullopt;
    try {
      return HamiltonianEnsemble(DiscreteEnsemble(std::move(parsed)));
    } catch (const std::exception& e) {
      out.add(where, e.what());
      return std::nullopt;
    }
  }

  if (kind == "gaussian") {
    const json* center = find_field(j, "center");
    const json* scale = find_field(j, "scale");
    if (!center) {
      out.add(join_path(where, "center"), "missing required field: center");
      return std::nullopt;
    }
    if (!scale) {
      out.add(join_path(where, "scale"), "missing required field: scale");
      return std::nullopt;
    }
    auto op = read_hermitian(*center, join_path(where, "center"), out);
    auto s = read_positive(*scale, join_path(where, "scale"), out);
    if (!op || !s) return std::nullopt;
    try {
      return HamiltonianEnsemble(GaussianHermitianEnsemble(std::move(*op), *s));
    } catch (const std::exception& e) {
      out.add(where, e.what());
      return std::nullopt;
    }
  }

  if (kind == "quantization") {
    const json* symbol = find_field(j, "symbol");
    const json* rules = find_field(j, "rules");
    if (!symbol || !symbol->is_string()) {
      out.add(join_path(where, "symbol"), "missing required field: symbol (string)");
      return std::nullopt;
    }
    if (!rules) {
      out.add(join_path(where, "rules"), "missing required field: rules");
      return std::nullopt;
    }
    auto parsed_rules = read_rules(*rules, join_path(where, "rules"), out);

    int dimension = 32;
    if (const json* dim = find_field(j, "dimension")) {
      auto d = read_positive_int(*dim, join_path(where, "dimension"), out);
      if (!d) return std::nullopt;
      dimension = *d;
    }
    double hbar = 1.0;
    if (const json* h = find_field(j, "hbar")) {
      auto v = read_positive(*h, join_path(where, "hbar"), out);
      if (!v) return std::nullopt;
      hbar = *v;
    }
    if (!parsed_rules) return std::nullopt;
    try {
      PolynomialSymbol sym = PolynomialSymbol::parse(symbol->get<std::string>());
      return HamiltonianEnsemble(
          QuantizationEnsemble(std::move(sym), std::move(*parsed_rules),
                               OscillatorBasis{dimension, hbar}));
    } catch (const std::exception& e) {
      out.add(where, e.what());
      return std::nullopt;
    }
  }

  out.add(join_path(where, "type"),
          "unknown ensemble type '" + kind + "' (expected discrete, gaussian, or quantization)");
  return std::nullopt;
}

std::optional<JumpDistribution> read_jump(const json& j, const std::string& where,
                                          Collector& out) {
  if (!j.is_object()) {
    out.add(where, "must be an object with a kind field");
    return std::nullopt;
  }
  const json* kind = find_field(j, "kind");
  if (!kind || !kind->is_string()) {
    out.add(join_path(where, "kind"), "missing required field: kind");
    return std::nullopt;
  }
  const std::string name = kind->get<std::string>();
  try {
    if (name == "rademacher") {
      const json* sigma = find_field(j, "sigma");
      if (!sigma) {
        out.add(join_path(where, "sigma"), "missing required field: sigma");
        return std::nullopt;
      }
      auto s = read_positive(*sigma, join_path(where, "sigma"), out);
      if (!s) return std::nullopt;
      return JumpDistribution::rademacher(*s);
    }
    if (name == "two_point") {
      const json* a = find_field(j, "a");
      const json* b = find_field(j, "b");
      const json* p = find_field(j, "p");
      if (!a || !b || !p) {
        if (!a) out.add(join_path(where, "a"), "missing required field: a");
        if (!b) out.add(join_path(where, "b"), "missing required field: b");
        if (!p) out.add(join_path(where, "p"), "missing required field: p");
        return std::nullopt;
      }
      auto av = read_number(*a, join_path(where, "a"), out);
      auto bv = read_number(*b, join_path(where, "b"), out);
      auto pv = read_number(*p, join_path(where, "p"), out);
      if (!av || !bv || !pv) return std::nullopt;
      return JumpDistribution::two_point(*av, *bv, *pv);
    }
    if (name == "discrete_uniform") {
      const json* values = find_field(j, "values");
      if (!values || !values->is_array() || values->empty()) {
        out.add(join_path(where, "values"),
                "missing required field: values (nonempty array of numbers)");
        return std::nullopt;
      }
      std::vector<double> parsed;
      for (std::size_t i = 0; i < values->size(); ++i) {
        auto v = read_number((*values)[i], indexed(join_path(where, "values"), i), out);
        if (!v) return std::nullopt;
        parsed.push_back(*v);
      }
      return JumpDistribution::discrete_uniform(std::move(parsed));
    }
  } catch (const std::exception& e) {
    out.add(where, e.what());
    return std::nullopt;
  }
  out.add(join_path(where, "kind"),
          "unknown jump kind '" + name +
              "' (expected rademacher, two_point, or discrete_uniform)");
  return std::nullopt;
}

std::optional<std::vector<TrigMode>> read_modes(const json& j, const std::string& where,
                                                Collector& out, int grid_size) {
  if (!j.is_array() || j.empty()) {
    out.add(where, "must be a nonempty array of {k, cos, sin}");
    return std::nullopt;
  }
  std::vector<TrigMode> modes;
  bool bad = false;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string mode_path = indexed(where, i);
    if (!j[i].is_object()) {
      out.add(mode_path, "must be an object {k, cos, sin}");
      bad = true;
      continue;
    }
    const json* k = find_field(j[i], "k");
    if (!k || !k->is_number_integer()) {
      out.add(join_path(mode_path, "k"), "missing required field: k (integer)");
      bad = true;
      continue;
    }
    TrigMode mode;
    mode.k = k->get<long>();
    if (mode.k < 0 || mode.k >= static_cast<long>(grid_size) / 2) {
      std::ostringstream os;
      os << "mode k must lie in [0, " << grid_size / 2 << ") for grid size " << grid_size;
      out.add(join_path(mode_path, "k"), os.str());
      bad = true;
      continue;
    }
    if (const json* c = find_field(j[i], "cos")) {
      auto v = read_number(*c, join_path(mode_path, "cos"), out);
      if (!v) {
        bad = true;
        continue;
      }
      mode.cos_coeff = *v;
    }
    if (const json* s = find_field(j[i], "sin")) {
      auto v = read_number(*s, join_path(mode_path, "sin"), out);
      if (!v) {
        bad = true;
        continue;
      }
      mode.sin_coeff = *v;
    }
    modes.push_back(mode);
  }
  if (bad) return std::nullopt;
  return modes;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json rules_to_json(const std::vector<std::pair<QuantizationRule, double>>& rules) {
  json out = json::array();
  for (const auto& [rule, prob] : rules) {
    out.push_back({{"rule", to_string(rule)}, {"probability", prob}});
  }
  return out;
}

json ensemble_to_json(const HamiltonianEnsemble& e) {
  if (const auto* d = std::get_if<DiscreteEnsemble>(&e)) {
    json atoms = json::array();
    for (const auto& [op, prob] : d->atoms()) {
      atoms.push_back({{"matrix", matrix_to_json(op.matrix())}, {"probability", prob}});
    }
    return {{"type", "discrete"}, {"atoms", std::move(atoms)}};
  }
  if (const auto* g = std::get_if<GaussianHermitianEnsemble>(&e)) {
    return {{"type", "gaussian"},
            {"center", matrix_to_json(g->center().matrix())},
            {"scale", g->scale()}};
  }
  const auto& q = std::get<QuantizationEnsemble>(e);
  return {{"type", "quantization"},
          {"symbol", q.symbol().to_string()},
          {"rules", rules_to_json(q.rules())},
          {"dimension", q.basis().n},
          {"hbar", q.basis().hbar}};
}

json jump_to_json(const JumpDistribution& jump) {
  switch (jump.kind()) {
    case JumpDistribution::Kind::Rademacher:
      return {{"kind", "rademacher"}, {"sigma", jump.support()[0].first}};
    case JumpDistribution::Kind::TwoPoint:
      return {{"kind", "two_point"},
              {"a", jump.support()[0].first},
              {"b", jump.support()[1].first},
              {"p", jump.support()[0].second}};
    case JumpDistribution::Kind::DiscreteUniform: {
      json values = json::array();
      for (const auto& [value, prob] : jump.support()) values.push_back(value);
      return {{"kind", "discrete_uniform"}, {"values", std::move(values)}};
    }
  }
  return json::object();
}

void line_column(const std::string& text, std::size_t byte, int& line, int& column) {
  line = 1;
  column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Chernoff: return "chernoff";
    case ExperimentKind::Lln: return "lln";
    case ExperimentKind::Clt: return "clt";
    case ExperimentKind::Quantize: return "quantize";
  }
  return "unknown";
}

std::string ConfigError::format() const {
  std::ostringstream os;
  if (line > 0) {
    os << "line " << line << ", column " << column << ": ";
  }
  if (!where.empty()) {
    os << where << ": ";
  }
  os << message;
  return os.str();
}

std::string ExperimentConfig::to_json() const {
  json doc;
  doc["experiment"] = to_string(kind);
  doc["seed"] = seed;
  doc["output_dir"] = output_dir;
  if (workers > 0) {
    doc["workers"] = workers;
  } else {
    doc["workers"] = "auto";
  }

  if (const auto* p = std::get_if<ChernoffParams>(&params)) {
    doc["ensemble"] = ensemble_to_json(p->ensemble);
    doc["T"] = p->T;
    doc["schedule"] = p->schedule;
    doc["grid_points"] = p->grid_points;
    doc["random_probes"] = p->random_probes;
    doc["mc_samples"] = p->mc_samples;
  } else if (const auto* p = std::get_if<LlnParams>(&params)) {
    doc["ensemble"] = ensemble_to_json(p->ensemble);
    doc["t"] = p->t;
    doc["epsilon"] = p->epsilon;
    doc["trials"] = p->trials;
    doc["schedule"] = p->schedule;
    doc["ref_mc_samples"] = p->ref_mc_samples;
    doc["per_probe"] = p->per_probe;
  } else if (const auto* p = std::get_if<CltParams>(&params)) {
    doc["process"] = {{"jump", jump_to_json(p->process.jump)}};
    doc["grid"] = {{"size", p->grid_size}, {"period", p->period}};
    json modes = json::array();
    for (const TrigMode& m : p->modes) {
      modes.push_back({{"k", m.k}, {"cos", m.cos_coeff}, {"sin", m.sin_coeff}});
    }
    doc["u"] = {{"modes", std::move(modes)}};
    doc["t"] = p->t;
    doc["schedule"] = p->schedule;
  } else if (const auto* p = std::get_if<QuantizeParams>(&params)) {
    doc["symbol"] = p->symbol.to_string();
    doc["rules"] = rules_to_json(p->rules);
    doc["dimension"] = p->dimension;
    doc["hbar"] = p->hbar;
    doc["T"] = p->T;
    doc["schedule"] = p->schedule;
    doc["grid_points"] = p->grid_points;
  }
  return doc.dump(2) + "\n";
}

ParseOutcome parse_config(const std::string& text) {
  ParseOutcome outcome;
  Collector out{outcome.errors};

  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    int line = 0;
    int column = 0;
    line_column(text, e.byte > 0 ? e.byte - 1 : 0, line, column);
    outcome.errors.push_back({"", e.what(), line, column});
    return outcome;
  }
  if (!doc.is_object()) {
    out.add("", "config must be a JSON object");
    return outcome;
  }

  const json* experiment = find_field(doc, "experiment");
  if (!experiment || !experiment->is_string()) {
    out.add("experiment", "missing required field: experiment");
    return outcome;
  }
  const std::string kind_name = experiment->get<std::string>();
  ExperimentKind kind;
  if (kind_name == "chernoff") {
    kind = ExperimentKind::Chernoff;
  } else if (kind_name == "lln") {
    kind = ExperimentKind::Lln;
  } else if (kind_name == "clt") {
    kind = ExperimentKind::Clt;
  } else if (kind_name == "quantize") {
    kind = ExperimentKind::Quantize;
  } else {
    out.add("experiment", "unknown experiment '" + kind_name +
                              "' (expected chernoff, lln, clt, or quantize)");
    return outcome;
  }

  std::uint64_t seed = 0;
  if (const json* s = find_field(doc, "seed")) {
    if (auto v = read_seed(*s, "seed", out)) seed = *v;
  }
  std::string output_dir = "out";
  if (const json* o = find_field(doc, "output_dir")) {
    if (o->is_string()) {
      output_dir = o->get<std::string>();
    } else {
      out.add("output_dir", "must be a string");
    }
  }
  int workers = 0;
  if (const json* w = find_field(doc, "workers")) {
    if (w->is_string() && w->get<std::string>() == "auto") {
      workers = 0;
    } else if (auto v = read_positive_int(*w, "workers", out)) {
      workers = *v;
    }
  }

  auto read_schedule_or = [&](std::vector<int> fallback) {
    if (const json* s = find_field(doc, "schedule")) {
      if (auto v = read_schedule(*s, "schedule", out)) return *v;
      return std::vector<int>{};
    }
    return fallback;
  };
  auto read_grid_points_or = [&](int fallback) {
    if (const json* g = find_field(doc, "grid_points")) {
      if (auto v = read_positive_int(*g, "grid_points", out)) {
        if (*v < 2) {
          out.add("grid_points", "must be >= 2");
          return fallback;
        }
        return *v;
      }
    }
    return fallback;
  };
  auto read_t_or = [&](const char* key, double fallback) {
    if (const json* t = find_field(doc, key)) {
      if (auto v = read_positive(*t, key, out)) return *v;
    }
    return fallback;
  };

  switch (kind) {
    case ExperimentKind::Chernoff: {
      // Keep validating the scalar fields even when the ensemble is absent,
      // so one pass reports every violation.
      const json* ens = find_field(doc, "ensemble");
      std::optional<HamiltonianEnsemble> ensemble;
      if (!ens) {
        out.add("ensemble", "missing required field: ensemble");
      } else {
        ensemble = read_ensemble(*ens, "ensemble", out);
      }
      const double T = read_t_or("T", 1.0);
      auto schedule = read_schedule_or({8, 16, 32, 64, 128});
      const int grid_points = read_grid_points_or(33);
      int random_probes = 4;
      if (const json* r = find_field(doc, "random_probes")) {
        if (!r->is_number_integer() || r->get<std::int64_t>() < 0) {
          out.add("random_probes", "must be a nonnegative integer");
        } else {
          random_probes = static_cast<int>(r->get<std::int64_t>());
        }
      }
      int mc_samples = 4096;
      if (const json* m = find_field(doc, "mc_samples")) {
        if (auto v = read_positive_int(*m, "mc_samples", out)) mc_samples = *v;
      }
      if (!outcome.errors.empty() || !ensemble) break;
      outcome.config = ExperimentConfig{
          kind, seed, output_dir, workers,
          ChernoffParams{std::move(*ensemble), T, std::move(schedule), grid_points,
                         random_probes, mc_samples}};
      break;
    }
    case ExperimentKind::Lln: {
      const json* ens = find_field(doc, "ensemble");
      std::optional<HamiltonianEnsemble> ensemble;
      if (!ens) {
        out.add("ensemble", "missing required field: ensemble");
      } else {
        ensemble = read_ensemble(*ens, "ensemble", out);
      }
      const double t = read_t_or("t", 1.0);
      const json* eps = find_field(doc, "epsilon");
      double epsilon = 0.0;
      if (!eps) {
        out.add("epsilon", "missing required field: epsilon");
      } else if (auto v = read_positive(*eps, "epsilon", out)) {
        epsilon = *v;
      }
      int trials = 1000;
      if (const json* tr = find_field(doc, "trials")) {
        if (auto v = read_positive_int(*tr, "trials", out)) trials = *v;
      }
      auto schedule = read_schedule_or({4, 8, 16, 32, 64});
      int ref_mc_samples = 4096;
      if (const json* m = find_field(doc, "ref_mc_samples")) {
        if (auto v = read_positive_int(*m, "ref_mc_samples", out)) ref_mc_samples = *v;
      }
      bool per_probe = false;
      if (const json* pp = find_field(doc, "per_probe")) {
        if (pp->is_boolean()) {
          per_probe = pp->get<bool>();
        } else {
          out.add("per_probe", "must be a boolean");
        }
      }
      if (!outcome.errors.empty() || !ensemble) break;
      outcome.config = ExperimentConfig{
          kind, seed, output_dir, workers,
          LlnParams{std::move(*ensemble), t, epsilon, trials, std::move(schedule),
                    ref_mc_samples, per_probe}};
      break;
    }
    case ExperimentKind::Clt: {
      const json* process = find_field(doc, "process");
      std::optional<JumpDistribution> jump;
      if (!process || !process->is_object()) {
        out.add("process", "missing required field: process");
      } else {
        const json* jump_node = find_field(*process, "jump");
        if (!jump_node) {
          out.add("process.jump", "missing required field: jump");
        } else {
          jump = read_jump(*jump_node, "process.jump", out);
        }
      }
      int grid_size = 256;
      double period = 2.0 * std::numbers::pi;
      if (const json* grid = find_field(doc, "grid")) {
        if (!grid->is_object()) {
          out.add("grid", "must be an object {size, period}");
        } else {
          if (const json* size = find_field(*grid, "size")) {
            if (auto v = read_positive_int(*size, "grid.size", out)) {
              if (*v < 4 || (*v & (*v - 1)) != 0) {
                out.add("grid.size", "must be a power of two >= 4");
              } else {
                grid_size = *v;
              }
            }
          }
          if (const json* per = find_field(*grid, "period")) {
            if (auto v = read_positive(*per, "grid.period", out)) period = *v;
          }
        }
      }
      std::vector<TrigMode> modes{{1, 1.0, 0.0}};
      if (const json* u = find_field(doc, "u")) {
        if (!u->is_object()) {
          out.add("u", "must be an object {modes}");
        } else {
          const json* mode_list = find_field(*u, "modes");
          if (!mode_list) {
            out.add("u.modes", "missing required field: modes");
          } else if (auto v = read_modes(*mode_list, "u.modes", out, grid_size)) {
            modes = std::move(*v);
          }
        }
      }
      const double t = read_t_or("t", 1.0);
      auto schedule = read_schedule_or({256, 512, 1024});
      if (!outcome.errors.empty() || !jump) break;
      outcome.config = ExperimentConfig{
          kind, seed, output_dir, workers,
          CltParams{ShiftProcessSpec{std::move(*jump)}, grid_size, period, std::move(modes),
                    t, std::move(schedule)}};
      break;
    }
    case ExperimentKind::Quantize: {
      const json* symbol = find_field(doc, "symbol");
      std::optional<PolynomialSymbol> parsed_symbol;
      if (!symbol || !symbol->is_string()) {
        out.add("symbol", "missing required field: symbol (string)");
      } else {
        try {
          parsed_symbol = PolynomialSymbol::parse(symbol->get<std::string>());
        } catch (const std::exception& e) {
          out.add("symbol", e.what());
        }
      }
      const json* rules_node = find_field(doc, "rules");
      std::optional<std::vector<std::pair<QuantizationRule, double>>> rules;
      if (!rules_node) {
        out.add("rules", "missing required field: rules");
      } else {
        rules = read_rules(*rules_node, "rules", out);
      }
      int dimension = 32;
      if (const json* dim = find_field(doc, "dimension")) {
        if (auto v = read_positive_int(*dim, "dimension", out)) {
          if (*v < 2) {
            out.add("dimension", "must be >= 2");
          } else {
            dimension = *v;
          }
        }
      }
      double hbar = 1.0;
      if (const json* h = find_field(doc, "hbar")) {
        if (auto v = read_positive(*h, "hbar", out)) hbar = *v;
      }
      const double T = read_t_or("T", 1.0);
      auto schedule = read_schedule_or({8, 16, 32, 64});
      const int grid_points = read_grid_points_or(33);
      if (rules) {
        // Surface the probability-sum violation at parse time; the ensemble
        // itself is constructed later by the runner.
        double total = 0.0;
        for (const auto& [rule, prob] : *rules) {
          if (prob < 0.0) out.add("rules", "probabilities must be nonnegative");
          total += prob;
        }
        if (std::abs(total - 1.0) > 1e-12) {
          out.add("rules", "probabilities must sum to 1");
        }
      }
      if (!outcome.errors.empty() || !parsed_symbol || !rules) break;
      outcome.config = ExperimentConfig{
          kind, seed, output_dir, workers,
          QuantizeParams{std::move(*parsed_symbol), std::move(*rules), dimension, hbar, T,
                         std::move(schedule), grid_points}};
      break;
    }
  }

  if (!outcome.errors.empty()) {
    outcome.config.reset();
  }
  return outcome;
}

}  // namespace semilab
