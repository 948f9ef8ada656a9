// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "semilab/config.hpp"

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

namespace {

using semilab::ExperimentKind;
using semilab::ParseOutcome;

bool has_error(const ParseOutcome& out, const std::string& where,
               const std::string& fragment) {
  return std::any_of(out.errors.begin(), out.errors.end(), [&](const auto& e) {
    return e.where == where && e.message.find(fragment) != std::string::npos;
  });
}

const char* kChernoffConfig = R"({
  "experiment": "chernoff",
  "seed": 42,
  "ensemble": {
    "type": "discrete",
    "atoms": [
      {"matrix": "sigma_x", "probability": 0.5},
      {"matrix": "sigma_z", "probability": 0.5}
    ]
  },
  "T": 1.0,
  "schedule": [8, 16, 32, 64]
})";

const char* kLlnConfig = R"({
  "experiment": "lln",
  "seed": 7,
  "ensemble": {
    "type": "gaussian",
    "center": [[1, 0], [0, -1]],
    "scale": 0.25
  },
  "t": 1.0,
  "epsilon": 0.1,
  "trials": 500,
  "schedule": [4, 16, 64]
})";

const char* kCltConfig = R"({
  "experiment": "clt",
  "seed": 1,
  "process": {"jump": {"kind": "rademacher", "sigma": 1.0}},
  "grid": {"size": 128, "period": 6.283185307179586},
  "u": {"modes": [{"k": 1, "cos": 1.0}]},
  "t": 1.0,
  "schedule": [64, 256]
})";

const char* kQuantizeConfig = R"({
  "experiment": "quantize",
  "seed": 3,
  "symbol": "1.0*q^2*p^2",
  "rules": [
    {"rule": "weyl", "probability": 0.5},
    {"rule": "born_jordan", "probability": 0.5}
  ],
  "dimension": 16,
  "T": 0.1,
  "schedule": [8, 16, 32]
})";

}  // namespace

TEST_CASE("each experiment kind parses from its canonical shape") {
  const auto chernoff = semilab::parse_config(kChernoffConfig);
  REQUIRE(chernoff.ok());
  CHECK(chernoff.config->kind == ExperimentKind::Chernoff);
  CHECK(chernoff.config->seed == 42);
  const auto& cp = std::get<semilab::ChernoffParams>(chernoff.config->params);
  CHECK(cp.T == 1.0);
  CHECK(cp.schedule == std::vector<int>{8, 16, 32, 64});
  CHECK(cp.grid_points == 33);
  CHECK(semilab::ensemble_is_discrete(cp.ensemble));

  const auto lln = semilab::parse_config(kLlnConfig);
  REQUIRE(lln.ok());
  const auto& lp = std::get<semilab::LlnParams>(lln.config->params);
  CHECK(lp.epsilon == 0.1);
  CHECK(lp.trials == 500);
  CHECK_FALSE(semilab::ensemble_is_discrete(lp.ensemble));

  const auto clt = semilab::parse_config(kCltConfig);
  REQUIRE(clt.ok());
  const auto& tp = std::get<semilab::CltParams>(clt.config->params);
  CHECK(tp.grid_size == 128);
  CHECK(tp.process.jump.kind() == semilab::JumpDistribution::Kind::Rademacher);
  REQUIRE(tp.modes.size() == 1);
  CHECK(tp.modes[0].k == 1);

  const auto quant = semilab::parse_config(kQuantizeConfig);
  REQUIRE(quant.ok());
  const auto& qp = std::get<semilab::QuantizeParams>(quant.config->params);
  CHECK(qp.dimension == 16);
  CHECK(qp.T == 0.1);
  REQUIRE(qp.rules.size() == 2);
}

TEST_CASE("matrix entries accept shorthands, reals, and re/im pairs") {
  const auto out = semilab::parse_config(R"({
    "experiment": "chernoff",
    "ensemble": {
      "type": "discrete",
      "atoms": [
        {"matrix": "sigma_y", "probability": 0.25},
        {"matrix": [[0, [0, -1]], [[0, 1], 0]], "probability": 0.75}
      ]
    },
    "schedule": [4, 8]
  })");
  REQUIRE(out.ok());
  const auto& cp = std::get<semilab::ChernoffParams>(out.config->params);
  const auto* atoms = semilab::discrete_atoms(cp.ensemble);
  REQUIRE(atoms != nullptr);
  REQUIRE(atoms->size() == 2);
  // Both spellings name the same matrix.
  CHECK(semilab::max_entry_norm((*atoms)[0].first.matrix() -
                                (*atoms)[1].first.matrix()) == 0.0);
}

TEST_CASE("rule probabilities that do not sum to one are rejected") {
  const auto out = semilab::parse_config(R"({
    "experiment": "quantize",
    "symbol": "q^2*p^2",
    "rules": [{"rule": "weyl", "probability": 0.9}],
    "schedule": [8, 16]
  })");
  CHECK_FALSE(out.ok());
  CHECK(has_error(out, "rules", "probabilities must sum to 1"));
}

TEST_CASE("a missing required field is reported by name") {
  const auto out = semilab::parse_config(R"({
    "experiment": "lln",
    "ensemble": {
      "type": "discrete",
      "atoms": [{"matrix": "sigma_x", "probability": 1.0}]
    },
    "trials": 100,
    "schedule": [4, 8]
  })");
  CHECK_FALSE(out.ok());
  CHECK(has_error(out, "epsilon", "missing required field"));
  CHECK_FALSE(out.config.has_value());
}

TEST_CASE("every violation is collected, not just the first") {
  const auto out = semilab::parse_config(R"({
    "experiment": "chernoff",
    "T": -2.0,
    "grid_points": 1,
    "schedule": [16, 8]
  })");
  CHECK_FALSE(out.ok());
  CHECK(out.errors.size() >= 3);
  CHECK(has_error(out, "ensemble", "missing required field"));
  CHECK(has_error(out, "T", "must be positive"));
  CHECK(has_error(out, "grid_points", ">= 2"));
  CHECK(has_error(out, "schedule[1]", "strictly increasing"));
}

TEST_CASE("syntax errors carry a line and column") {
  const auto out = semilab::parse_config("{\n  \"experiment\": \"chernoff\",\n  oops\n}");
  REQUIRE_FALSE(out.ok());
  REQUIRE(out.errors.size() == 1);
  CHECK(out.errors[0].line == 3);
  CHECK(out.errors[0].column >= 1);
  const std::string formatted = out.errors[0].format();
  CHECK(formatted.find("line 3") != std::string::npos);
}

TEST_CASE("unknown experiment names are rejected") {
  const auto out = semilab::parse_config(R"({"experiment": "frobnicate"})");
  CHECK_FALSE(out.ok());
  CHECK(!out.errors.empty());
  CHECK(out.errors[0].where == "experiment");
}

TEST_CASE("non-object documents fail cleanly") {
  CHECK_FALSE(semilab::parse_config("[]").ok());
  CHECK_FALSE(semilab::parse_config("42").ok());
  CHECK_FALSE(semilab::parse_config("").ok());
}

TEST_CASE("canonical form round-trips to itself") {
  for (const char* text :
       {kChernoffConfig, kLlnConfig, kCltConfig, kQuantizeConfig}) {
    const auto first = semilab::parse_config(text);
    REQUIRE(first.ok());
    const std::string canonical = first.config->to_json();
    const auto second = semilab::parse_config(canonical);
    REQUIRE(second.ok());
    CHECK(second.config->to_json() == canonical);
  }
}

TEST_CASE("canonical form makes defaults explicit") {
  const auto out = semilab::parse_config(kChernoffConfig);
  REQUIRE(out.ok());
  const std::string canonical = out.config->to_json();
  // Defaults the input omitted appear in the echo.
  CHECK(canonical.find("\"grid_points\": 33") != std::string::npos);
  CHECK(canonical.find("\"workers\": \"auto\"") != std::string::npos);
  CHECK(canonical.find("\"output_dir\": \"out\"") != std::string::npos);
}

TEST_CASE("jump laws parse all three kinds and reject drifting ones") {
  const auto two_point = semilab::parse_config(R"({
    "experiment": "clt",
    "process": {"jump": {"kind": "two_point", "a": 2.0, "b": -1.0, "p": 0.3333333333333333}},
    "grid": {"size": 64},
    "u": {"modes": [{"k": 1, "cos": 1.0}]},
    "schedule": [8, 16]
  })");
  REQUIRE(two_point.ok());

  const auto uniform = semilab::parse_config(R"({
    "experiment": "clt",
    "process": {"jump": {"kind": "discrete_uniform", "values": [-1, 0, 1]}},
    "grid": {"size": 64},
    "u": {"modes": [{"k": 1, "sin": 0.5}]},
    "schedule": [8, 16]
  })");
  REQUIRE(uniform.ok());

  const auto drift = semilab::parse_config(R"({
    "experiment": "clt",
    "process": {"jump": {"kind": "two_point", "a": 1.0, "b": 1.0, "p": 0.5}},
    "grid": {"size": 64},
    "u": {"modes": [{"k": 1, "cos": 1.0}]},
    "schedule": [8, 16]
  })");
  CHECK_FALSE(drift.ok());
}

TEST_CASE("clt grid and mode constraints are enforced") {
  const auto bad_size = semilab::parse_config(R"({
    "experiment": "clt",
    "process": {"jump": {"kind": "rademacher", "sigma": 1.0}},
    "grid": {"size": 100},
    "u": {"modes": [{"k": 1, "cos": 1.0}]},
    "schedule": [8, 16]
  })");
  CHECK_FALSE(bad_size.ok());
  CHECK(has_error(bad_size, "grid.size", "power of two"));

  const auto bad_mode = semilab::parse_config(R"({
    "experiment": "clt",
    "process": {"jump": {"kind": "rademacher", "sigma": 1.0}},
    "grid": {"size": 64},
    "u": {"modes": [{"k": 32, "cos": 1.0}]},
    "schedule": [8, 16]
  })");
  CHECK_FALSE(bad_mode.ok());
}

TEST_CASE("bad symbols are rejected with the parser's message") {
  const auto out = semilab::parse_config(R"({
    "experiment": "quantize",
    "symbol": "q^",
    "rules": [{"rule": "weyl", "probability": 1.0}],
    "schedule": [8, 16]
  })");
  CHECK_FALSE(out.ok());
  CHECK(!out.errors.empty());
  CHECK(out.errors[0].where == "symbol");
}

TEST_CASE("seed and workers accept their documented ranges") {
  const auto out = semilab::parse_config(R"({
    "experiment": "chernoff",
    "seed": 18446744073709551615,
    "workers": 4,
    "ensemble": {"type": "discrete", "atoms": [{"matrix": "sigma_x", "probability": 1.0}]},
    "schedule": [4, 8]
  })");
  REQUIRE(out.ok());
  CHECK(out.config->seed == 18446744073709551615ull);
  CHECK(out.config->workers == 4);

  const auto bad = semilab::parse_config(R"({
    "experiment": "chernoff",
    "seed": -1,
    "ensemble": {"type": "discrete", "atoms": [{"matrix": "sigma_x", "probability": 1.0}]},
    "schedule": [4, 8]
  })");
  CHECK_FALSE(bad.ok());
}
