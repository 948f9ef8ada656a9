// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "semilab/operator_core.hpp"
#include "semilab/quantizer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace {

using semilab::ComplexMatrix;
using semilab::HermitianOperator;
using semilab::OscillatorBasis;
using semilab::PolynomialSymbol;
using semilab::QuantizationRule;

const std::complex<double> kI{0.0, 1.0};

ComplexMatrix lowering(int n) {
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  for (int j = 1; j < n; ++j) a(j - 1, j) = std::sqrt(static_cast<double>(j));
  return a;
}

double block_max_diff(const ComplexMatrix& a, const ComplexMatrix& b, int block) {
  return semilab::max_entry_norm(a.topLeftCorner(block, block) -
                                 b.topLeftCorner(block, block));
}

}  // namespace

TEST_CASE("symbol parser handles the compact text form") {
  const auto s = PolynomialSymbol::parse("1.0*q^2*p^2 + 0.5*q");
  REQUIRE(s.terms.size() == 2);
  CHECK(s.terms[0].q_power == 2);
  CHECK(s.terms[0].p_power == 2);
  CHECK(s.terms[0].coeff == 1.0);
  CHECK(s.terms[1].q_power == 1);
  CHECK(s.terms[1].p_power == 0);
  CHECK(s.terms[1].coeff == 0.5);

  const auto neg = PolynomialSymbol::parse("-q^2 - 2*p + 3");
  REQUIRE(neg.terms.size() == 3);
  CHECK(neg.terms[0].coeff == -1.0);
  CHECK(neg.terms[0].q_power == 2);
  CHECK(neg.terms[1].coeff == -2.0);
  CHECK(neg.terms[1].p_power == 1);
  CHECK(neg.terms[2].coeff == 3.0);
  CHECK(neg.terms[2].q_power == 0);
  CHECK(neg.terms[2].p_power == 0);

  // Whitespace is insignificant.
  const auto spaced = PolynomialSymbol::parse("  q ^ 2 * p  +  p ");
  REQUIRE(spaced.terms.size() == 2);
  CHECK(spaced.terms[0].q_power == 2);
  CHECK(spaced.terms[0].p_power == 1);
}

TEST_CASE("symbol parser round-trips through to_string") {
  for (const char* text : {"1.0*q^2*p^2 + 0.5*q", "q^4", "3", "-0.25*p^3 + q"}) {
    const auto first = PolynomialSymbol::parse(text);
    const auto second = PolynomialSymbol::parse(first.to_string());
    REQUIRE(first.terms.size() == second.terms.size());
    for (std::size_t i = 0; i < first.terms.size(); ++i) {
      CHECK(first.terms[i].q_power == second.terms[i].q_power);
      CHECK(first.terms[i].p_power == second.terms[i].p_power);
      CHECK(first.terms[i].coeff == second.terms[i].coeff);
    }
  }
}

TEST_CASE("symbol parser rejects malformed input with a position") {
  for (const char* bad : {"", "q^", "q^9", "2*^3", "q**p", "q^2^3", "1.0.0*q"}) {
    CHECK_THROWS_AS(PolynomialSymbol::parse(bad), std::invalid_argument);
  }
  try {
    PolynomialSymbol::parse("q^2 + !");
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    // The message localizes the offending character.
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("position and momentum come from the ladder construction") {
  const OscillatorBasis basis{5, 2.0};
  const auto [q, p] = semilab::position_momentum(basis);
  const ComplexMatrix a = lowering(5);
  const double s = std::sqrt(basis.hbar / 2.0);
  CHECK(semilab::max_entry_norm(q.matrix() - s * (a + a.adjoint())) < 1e-14);
  CHECK(semilab::max_entry_norm(p.matrix() - kI * s * (a.adjoint() - a)) < 1e-14);
}

TEST_CASE("canonical commutator holds on the interior block") {
  for (double hbar : {0.5, 1.0, 3.0}) {
    const OscillatorBasis basis{16, hbar};
    const auto [q, p] = semilab::position_momentum(basis);
    const ComplexMatrix comm = q.matrix() * p.matrix() - p.matrix() * q.matrix();
    const ComplexMatrix target = kI * hbar * ComplexMatrix::Identity(16, 16);
    // Exact on the top-left (N-1) block; the corner carries the truncation.
    CHECK(block_max_diff(comm, target, 15) < 1e-10);
    CHECK(std::abs(comm(15, 15) - target(15, 15)) > hbar);
  }
}

TEST_CASE("quantization is linear in the symbol") {
  const OscillatorBasis basis{12, 1.0};
  const auto s1 = PolynomialSymbol::parse("q^2*p");
  const auto s2 = PolynomialSymbol::parse("p^3 + q");
  const auto sum = PolynomialSymbol::parse("2.5*q^2*p + p^3 + q");
  for (auto rule : {QuantizationRule::Weyl, QuantizationRule::BornJordan}) {
    const auto m1 = semilab::quantize(s1, rule, basis).matrix();
    const auto m2 = semilab::quantize(s2, rule, basis).matrix();
    const auto msum = semilab::quantize(sum, rule, basis).matrix();
    CHECK(semilab::max_entry_norm(2.5 * m1 + m2 - msum) < 1e-12);
  }
}

TEST_CASE("rules agree on symbols with a single variable") {
  const OscillatorBasis basis{10, 1.0};
  for (const char* text : {"q^3", "p^4", "2*q + 3*p", "q^2 + p^2", "7"}) {
    const auto s = PolynomialSymbol::parse(text);
    const auto w = semilab::quantize(s, QuantizationRule::Weyl, basis).matrix();
    const auto bj = semilab::quantize(s, QuantizationRule::BornJordan, basis).matrix();
    CHECK(semilab::max_entry_norm(w - bj) < 1e-12);
  }
}

TEST_CASE("both rules send qp to the symmetrized product") {
  const OscillatorBasis basis{8, 1.0};
  const auto [q, p] = semilab::position_momentum(basis);
  const ComplexMatrix sym = 0.5 * (q.matrix() * p.matrix() + p.matrix() * q.matrix());
  const auto s = PolynomialSymbol::parse("q*p");
  for (auto rule : {QuantizationRule::Weyl, QuantizationRule::BornJordan}) {
    const auto m = semilab::quantize(s, rule, basis).matrix();
    CHECK(semilab::max_entry_norm(m - sym) < 1e-13);
  }
}

TEST_CASE("ordering discrepancy for q^2 p^2 is hbar^2/6 on the interior") {
  // Independently frozen value: Weyl minus Born-Jordan on q^2 p^2 equals
  // (hbar^2 / 6) I wherever truncation effects cannot reach. The last two
  // basis states touch the truncation corner, so compare the (N-2) block.
  for (double hbar : {1.0, 2.0}) {
    const int n = 14;
    const OscillatorBasis basis{n, hbar};
    const auto s = PolynomialSymbol::parse("q^2*p^2");
    const auto w = semilab::quantize(s, QuantizationRule::Weyl, basis).matrix();
    const auto bj = semilab::quantize(s, QuantizationRule::BornJordan, basis).matrix();
    const ComplexMatrix target =
        (hbar * hbar / 6.0) * ComplexMatrix::Identity(n, n);
    CHECK(block_max_diff(w - bj, target, n - 2) < 1e-12);
  }
}

TEST_CASE("truncation artifacts are local to the top of the basis") {
  // Quantizing in dimension N and in N+4 must agree on the low-lying block:
  // each monomial of degree d only couples states |j - k| <= d apart.
  const auto s = PolynomialSymbol::parse("q^2*p^2 + 0.5*q");
  for (auto rule : {QuantizationRule::Weyl, QuantizationRule::BornJordan}) {
    const auto small = semilab::quantize(s, rule, {12, 1.0}).matrix();
    const auto big = semilab::quantize(s, rule, {16, 1.0}).matrix();
    CHECK(block_max_diff(small, big, 8) < 1e-12);
  }
}

TEST_CASE("quantized symbols are Hermitian by construction") {
  const OscillatorBasis basis{9, 0.7};
  for (const char* text : {"q^2*p^2", "q^3*p", "q*p^3 + q^2", "q^4*p^4"}) {
    const auto s = PolynomialSymbol::parse(text);
    for (auto rule : {QuantizationRule::Weyl, QuantizationRule::BornJordan}) {
      const auto h = semilab::quantize(s, rule, basis);
      const auto& m = h.matrix();
      CHECK(semilab::max_entry_norm(m - m.adjoint()) < 1e-12);
    }
  }
}

TEST_CASE("basis and symbol validation reject bad parameters") {
  CHECK_THROWS_AS(semilab::position_momentum({1, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(semilab::position_momentum({8, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(semilab::position_momentum({8, -1.0}), std::invalid_argument);

  PolynomialSymbol too_deep;
  too_deep.terms.push_back({5, 4, 1.0});
  CHECK_THROWS_AS(too_deep.validate(), std::invalid_argument);

  // The empty term list is the zero symbol; it quantizes to the zero operator.
  PolynomialSymbol zero;
  CHECK_NOTHROW(zero.validate());
  const auto m = semilab::quantize(zero, QuantizationRule::Weyl, {6, 1.0}).matrix();
  CHECK(semilab::max_entry_norm(m) == 0.0);
}

TEST_CASE("quantization ensemble carries quantized atoms with the given law") {
  const auto s = PolynomialSymbol::parse("q^2*p^2");
  auto ens = semilab::quantization_ensemble(
      s,
      {{QuantizationRule::Weyl, 0.5}, {QuantizationRule::BornJordan, 0.5}},
      {10, 1.0});
  REQUIRE(ens.atoms().size() == 2);
  CHECK(ens.atoms()[0].second == 0.5);
  CHECK(ens.atoms()[1].second == 0.5);
  CHECK(ens.dim() == 10);
  const auto w = semilab::quantize(s, QuantizationRule::Weyl, {10, 1.0}).matrix();
  CHECK(semilab::max_entry_norm(ens.atoms()[0].first.matrix() - w) < 1e-14);

  CHECK_THROWS_AS(
      semilab::quantization_ensemble(s, {{QuantizationRule::Weyl, 0.9}}, {10, 1.0}),
      std::invalid_argument);
  CHECK_THROWS_AS(semilab::quantization_ensemble(s, {}, {10, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("rule names render for reports") {
  CHECK(std::string(semilab::to_string(QuantizationRule::Weyl)) == "weyl");
  CHECK(std::string(semilab::to_string(QuantizationRule::BornJordan)) ==
        "born_jordan");
}
