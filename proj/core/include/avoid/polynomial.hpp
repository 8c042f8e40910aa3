#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avoid/integer.hpp"

namespace avoid {

// Sparse integer polynomial in one variable, f(x) = sum a_i x^i.
class UnivariatePolynomial {
 public:
  struct Term {
    unsigned exponent;
    std::int64_t coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  // Like exponents are merged and zero coefficients dropped; the result
  // must keep at least one nonzero term.
  explicit UnivariatePolynomial(std::vector<Term> terms);

  static UnivariatePolynomial monomial(unsigned exponent, std::int64_t coefficient = 1);

  std::span<const Term> terms() const noexcept { return terms_; }
  // Smallest exponent with a nonzero coefficient (k).
  unsigned low_degree() const noexcept { return terms_.front().exponent; }
  // Largest exponent (d).
  unsigned degree() const noexcept { return terms_.back().exponent; }
  std::int64_t coefficient(unsigned exponent) const noexcept;
  std::int64_t leading_coefficient() const noexcept { return terms_.back().coefficient; }
  std::int64_t low_coefficient() const noexcept { return terms_.front().coefficient; }

  // Exact value; Errc::overflow if any intermediate leaves 128 bits.
  i128 evaluate(i128 x) const;
  std::int64_t evaluate_mod(std::int64_t x, std::int64_t m) const;

  // Formal derivative. The zero polynomial is not representable, so a
  // constant input yields Errc::invalid_argument.
  UnivariatePolynomial derivative() const;

  std::string to_string() const;

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

 private:
  std::vector<Term> terms_;
};

// Homogeneous integer form F(x_1, ..., x_n) of degree k >= 2.
class HomogeneousForm {
 public:
  struct Term {
    std::vector<unsigned> exponents;  // length n, sums to k
    std::int64_t coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  HomogeneousForm(std::size_t arity, std::vector<Term> terms);

  // sum_i coefficients[i] * x_i^degree
  static HomogeneousForm diagonal(std::vector<std::int64_t> coefficients, unsigned degree);

  std::size_t arity() const noexcept { return arity_; }
  unsigned degree() const noexcept { return degree_; }
  std::span<const Term> terms() const noexcept { return terms_; }

  // True when every term is c * x_i^k and each variable appears at most once.
  bool is_diagonal() const noexcept;
  // Per-variable coefficient of x_i^k; zero for absent variables. Only
  // meaningful when is_diagonal().
  std::vector<std::int64_t> diagonal_coefficients() const;

  std::int64_t evaluate_mod(std::span<const std::int64_t> x, std::int64_t m) const;

  std::string to_string() const;

  friend bool operator==(const HomogeneousForm&, const HomogeneousForm&) = default;

 private:
  std::size_t arity_;
  unsigned degree_;
  std::vector<Term> terms_;
};

// Grammar: a signed sum of monomials, each an optional integer coefficient
// followed by variable powers, e.g. "x^2+5x^3", "-2*x^3 + x", "x1^2+x2^2",
// "x1^4+x2^4+x3^4". Whitespace is ignored and '*' is optional; no
// parentheses. parse_univariate accepts only the variable x.
UnivariatePolynomial parse_univariate(std::string_view text);
// Variables are x1..xn (bare x means x1); arity is the largest index.
HomogeneousForm parse_form(std::string_view text);

}  // namespace avoid
