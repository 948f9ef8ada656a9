// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#include "semilab/quantizer.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "semilab/textio.hpp"

namespace semilab {

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& what) {
  std::ostringstream os;
  os << "symbol parse error at position " << pos << " in \"" << text << "\": " << what;
  throw std::invalid_argument(os.str());
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return r;
}

// Q^n with Q^0 = I.
ComplexMatrix nonneg_power(const ComplexMatrix& a, int n) {
  if (n == 0) return ComplexMatrix::Identity(a.rows(), a.cols());
  return operator_power(a, n);
}

}  // namespace

void PolynomialSymbol::validate() const {
  for (const Term& t : terms) {
    if (t.q_power < 0 || t.p_power < 0) {
      throw std::invalid_argument("PolynomialSymbol: negative power");
    }
    if (t.q_power + t.p_power > kMaxDegree) {
      std::ostringstream os;
      os << "PolynomialSymbol: total degree " << t.q_power + t.p_power << " exceeds "
         << kMaxDegree;
      throw std::invalid_argument(os.str());
    }
    if (!std::isfinite(t.coeff)) {
      throw std::invalid_argument("PolynomialSymbol: non-finite coefficient");
    }
  }
}

PolynomialSymbol PolynomialSymbol::parse(std::string_view text) {
  PolynomialSymbol symbol;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  if (i == text.size()) parse_fail(text, i, "empty symbol");

  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;

    double sign = 1.0;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1.0 : 1.0;
      ++i;
    } else if (!first) {
      parse_fail(text, i, "expected '+' or '-' between terms");
    }
    first = false;
    skip_ws();

    Term term;
    term.coeff = sign;
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (i >= text.size()) break;
      const char c = text[i];
      if (c == 'q' || c == 'p') {
        ++i;
        int power = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip_ws();
          std::size_t start = i;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
          if (i == start) parse_fail(text, i, "expected integer exponent after '^'");
          power = std::atoi(std::string(text.substr(start, i - start)).c_str());
        }
        if (c == 'q') {
          term.q_power += power;
        } else {
          term.p_power += power;
        }
        saw_factor = true;
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        const std::string rest(text.substr(i));
        char* end = nullptr;
        const double value = std::strtod(rest.c_str(), &end);
        if (end == rest.c_str()) parse_fail(text, i, "expected numeric coefficient");
        i += static_cast<std::size_t>(end - rest.c_str());
        term.coeff *= value;
        saw_factor = true;
      } else {
        parse_fail(text, i, std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
      } else {
        expect_factor = false;
      }
    }
    if (!saw_factor) parse_fail(text, i, "empty term");
    symbol.terms.push_back(term);
  }

  symbol.validate();
  return symbol;
}

std::string PolynomialSymbol::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms) {
    const double c = t.coeff;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    os << format_double(std::abs(c));
    if (t.q_power > 0) os << "*q^" << t.q_power;
    if (t.p_power > 0) os << "*p^" << t.p_power;
  }
  return os.str();
}

void OscillatorBasis::validate() const {
  if (n < 2) throw std::invalid_argument("OscillatorBasis: N must be >= 2");
  if (!(hbar > 0.0)) throw std::invalid_argument("OscillatorBasis: hbar must be positive");
}

const char* to_string(QuantizationRule rule) {
  return rule == QuantizationRule::Weyl ? "weyl" : "born_jordan";
}

std::pair<HermitianOperator, HermitianOperator> position_momentum(const OscillatorBasis& basis) {
  basis.validate();
  const int n = basis.n;
  ComplexMatrix lowering = ComplexMatrix::Zero(n, n);
  for (int j = 1; j < n; ++j) {
    lowering(j - 1, j) = std::sqrt(static_cast<double>(j));
  }
  const double scale = std::sqrt(basis.hbar / 2.0);
  ComplexMatrix q = scale * (lowering + lowering.adjoint());
  ComplexMatrix p = Complex(0.0, scale) * (lowering.adjoint() - lowering);
  return {HermitianOperator(std::move(q)), HermitianOperator(std::move(p))};
}

HermitianOperator quantize(const PolynomialSymbol& symbol, QuantizationRule rule,
                           const OscillatorBasis& basis) {
  symbol.validate();
  auto [qop, pop] = position_momentum(basis);
  const ComplexMatrix& q = qop.matrix();
  const ComplexMatrix& p = pop.matrix();
  const int n = basis.n;

  ComplexMatrix result = ComplexMatrix::Zero(n, n);
  for (const PolynomialSymbol::Term& term : symbol.terms) {
    const int a = term.q_power;
    const int b = term.p_power;
    const ComplexMatrix pb = nonneg_power(p, b);
    ComplexMatrix ordered = ComplexMatrix::Zero(n, n);
    for (int k = 0; k <= a; ++k) {
      const ComplexMatrix word = (nonneg_power(q, k) * pb) * nonneg_power(q, a - k);
      if (rule == QuantizationRule::Weyl) {
        ordered += binomial(a, k) * word;
      } else {
        ordered += word;
      }
    }
    const double norm = rule == QuantizationRule::Weyl ? std::pow(2.0, -a)
                                                       : 1.0 / static_cast<double>(a + 1);
    result += (term.coeff * norm) * ordered;
  }

  try {
    return HermitianOperator(std::move(result));
  } catch (const hermiticity_error& e) {
    throw hermiticity_error(std::string("quantize: internal consistency failure, ") + e.what());
  }
}

QuantizationEnsemble::QuantizationEnsemble(
    PolynomialSymbol symbol, std::vector<std::pair<QuantizationRule, double>> rules,
    OscillatorBasis basis)
    : symbol_(std::move(symbol)), rules_(std::move(rules)), basis_(basis) {
  symbol_.validate();
  basis_.validate();
  if (rules_.empty()) {
    throw std::invalid_argument("QuantizationEnsemble: at least one rule required");
  }
  double total = 0.0;
  for (const auto& [rule, prob] : rules_) {
    if (prob < 0.0) throw std::invalid_argument("QuantizationEnsemble: negative probability");
    total += prob;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "QuantizationEnsemble: probabilities must sum to 1, got " << total;
    throw std::invalid_argument(os.str());
  }
  atoms_.reserve(rules_.size());
  for (const auto& [rule, prob] : rules_) {
    atoms_.emplace_back(quantize(symbol_, rule, basis_), prob);
  }
}

QuantizationEnsemble quantization_ensemble(
    PolynomialSymbol symbol, std::vector<std::pair<QuantizationRule, double>> rules,
    OscillatorBasis basis) {
  return QuantizationEnsemble(std::move(symbol), std::move(rules), basis);
}

}  // namespace semilab
