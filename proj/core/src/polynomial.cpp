#include "avoid/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "avoid/error.hpp"

namespace avoid {

namespace {

std::string render_coefficient(std::int64_t c, bool first, bool has_variable) {
  std::string out;
  if (c < 0) {
    out += '-';
  } else if (!first) {
    out += '+';
  }
  const auto magnitude = c < 0 ? -static_cast<i128>(c) : static_cast<i128>(c);
  if (magnitude != 1 || !has_variable) out += to_string(magnitude);
  return out;
}

}  // namespace

UnivariatePolynomial::UnivariatePolynomial(std::vector<Term> terms) {
  std::map<unsigned, i128> merged;
  for (const auto& t : terms) merged[t.exponent] = checked_add(merged[t.exponent], t.coefficient);
  for (const auto& [exponent, coefficient] : merged) {
    if (coefficient == 0) continue;
    if (coefficient > INT64_MAX || coefficient < INT64_MIN) {
      throw Error(Errc::overflow, "coefficient exceeds 64 bits");
    }
    terms_.push_back({exponent, static_cast<std::int64_t>(coefficient)});
  }
  if (terms_.empty()) throw Error(Errc::invalid_argument, "polynomial has no nonzero term");
}

UnivariatePolynomial UnivariatePolynomial::monomial(unsigned exponent, std::int64_t coefficient) {
  return UnivariatePolynomial({{exponent, coefficient}});
}

std::int64_t UnivariatePolynomial::coefficient(unsigned exponent) const noexcept {
  for (const auto& t : terms_) {
    if (t.exponent == exponent) return t.coefficient;
  }
  return 0;
}

i128 UnivariatePolynomial::evaluate(i128 x) const {
  i128 sum = 0;
  for (const auto& t : terms_) sum = checked_add(sum, checked_mul(t.coefficient, checked_pow(x, t.exponent)));
  return sum;
}

std::int64_t UnivariatePolynomial::evaluate_mod(std::int64_t x, std::int64_t m) const {
  std::int64_t sum = 0;
  for (const auto& t : terms_) {
    sum = mod(static_cast<i128>(sum) + mul_mod(mod(t.coefficient, m), pow_mod(x, t.exponent, m), m), m);
  }
  return sum;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exponent == 0) continue;
    const i128 c = checked_mul(t.coefficient, t.exponent);
    if (c > INT64_MAX || c < INT64_MIN) throw Error(Errc::overflow, "derivative coefficient");
    out.push_back({t.exponent - 1, static_cast<std::int64_t>(c)});
  }
  return UnivariatePolynomial(std::move(out));
}

std::string UnivariatePolynomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    out += render_coefficient(t.coefficient, i == 0, t.exponent > 0);
    if (t.exponent >= 1) out += 'x';
    if (t.exponent >= 2) out += '^' + std::to_string(t.exponent);
  }
  return out;
}

HomogeneousForm::HomogeneousForm(std::size_t arity, std::vector<Term> terms) : arity_(arity), degree_(0) {
  if (arity_ == 0) throw Error(Errc::invalid_argument, "form needs at least one variable");
  std::map<std::vector<unsigned>, i128> merged;
  std::optional<unsigned> degree;
  for (const auto& t : terms) {
    if (t.exponents.size() != arity_) {
      throw Error(Errc::invalid_argument, "exponent vector length differs from arity");
    }
    const unsigned sum = std::accumulate(t.exponents.begin(), t.exponents.end(), 0U);
    if (degree && *degree != sum) throw Error(Errc::invalid_argument, "form is not homogeneous");
    degree = sum;
    merged[t.exponents] = checked_add(merged[t.exponents], t.coefficient);
  }
  for (const auto& [exponents, coefficient] : merged) {
    if (coefficient == 0) continue;
    if (coefficient > INT64_MAX || coefficient < INT64_MIN) {
      throw Error(Errc::overflow, "coefficient exceeds 64 bits");
    }
    terms_.push_back({exponents, static_cast<std::int64_t>(coefficient)});
  }
  if (terms_.empty()) throw Error(Errc::invalid_argument, "form has no nonzero term");
  degree_ = *degree;
  if (degree_ < 2) throw Error(Errc::invalid_argument, "form degree must be at least 2");
  // Order x1^k before x2^k so renderings read naturally.
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.exponents > b.exponents; });
}

HomogeneousForm HomogeneousForm::diagonal(std::vector<std::int64_t> coefficients, unsigned degree) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    std::vector<unsigned> e(coefficients.size(), 0);
    e[i] = degree;
    terms.push_back({std::move(e), coefficients[i]});
  }
  return HomogeneousForm(coefficients.size(), std::move(terms));
}

bool HomogeneousForm::is_diagonal() const noexcept {
  for (const auto& t : terms_) {
    const auto nonzero = std::count_if(t.exponents.begin(), t.exponents.end(), [](unsigned e) { return e != 0; });
    if (nonzero != 1) return false;
  }
  return true;  // merged terms already guarantee one term per variable
}

std::vector<std::int64_t> HomogeneousForm::diagonal_coefficients() const {
  std::vector<std::int64_t> out(arity_, 0);
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < arity_; ++i) {
      if (t.exponents[i] == degree_) out[i] = t.coefficient;
    }
  }
  return out;
}

std::int64_t HomogeneousForm::evaluate_mod(std::span<const std::int64_t> x, std::int64_t m) const {
  if (x.size() != arity_) throw Error(Errc::invalid_argument, "point dimension differs from arity");
  std::int64_t sum = 0;
  for (const auto& t : terms_) {
    std::int64_t term = mod(t.coefficient, m);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (t.exponents[i] != 0) term = mul_mod(term, pow_mod(x[i], t.exponents[i], m), m);
    }
    sum = mod(static_cast<i128>(sum) + term, m);
  }
  return sum;
}

std::string HomogeneousForm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    out += render_coefficient(t.coefficient, i == 0, true);
    for (std::size_t v = 0; v < arity_; ++v) {
      if (t.exponents[v] == 0) continue;
      out += 'x' + std::to_string(v + 1);
      if (t.exponents[v] > 1) out += '^' + std::to_string(t.exponents[v]);
    }
  }
  return out;
}

}  // namespace avoid
