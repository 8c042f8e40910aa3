#include <algorithm>
#include <cctype>
#include <map>
#include <string>

#include "avoid/error.hpp"
#include "avoid/polynomial.hpp"

namespace avoid {

namespace {

struct Monomial {
  std::int64_t coefficient = 1;
  std::map<unsigned, unsigned> powers;  // variable index (1-based) -> exponent
  bool indexed = false;                 // some variable was written as x<i>
};

class MonomialParser {
 public:
  explicit MonomialParser(std::string_view text) {
    for (const char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) source_ += c;
    }
    original_ = text;
  }

  std::vector<Monomial> parse() {
    if (source_.empty()) fail("empty polynomial");
    std::vector<Monomial> out;
    bool first = true;
    while (pos_ < source_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out.push_back(monomial(negative));
    }
    return out;
  }

 private:
  char peek() const { return pos_ < source_.size() ? source_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::parse_error, why + " at offset " + std::to_string(pos_) + " in '" + original_ + "'");
  }

  std::int64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    i128 value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (source_[pos_++] - '0');
      if (value > INT64_MAX) fail("integer too large");
    }
    return static_cast<std::int64_t>(value);
  }

  Monomial monomial(bool negative) {
    Monomial m;
    bool has_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      m.coefficient = number();
      has_coefficient = true;
      if (peek() == '*') ++pos_;
    }
    bool has_variable = false;
    while (peek() == 'x') {
      ++pos_;
      unsigned index = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        const auto v = number();
        if (v < 1 || v > 64) fail("variable index out of range");
        index = static_cast<unsigned>(v);
        m.indexed = true;
      }
      unsigned exponent = 1;
      if (peek() == '^') {
        ++pos_;
        const auto e = number();
        if (e > 64) fail("exponent too large");
        exponent = static_cast<unsigned>(e);
      }
      if (m.powers.count(index) != 0) fail("variable repeated within a monomial");
      m.powers[index] = exponent;
      has_variable = true;
      if (peek() == '*') {
        ++pos_;
        if (peek() != 'x') fail("expected variable after '*'");
      }
    }
    if (!has_coefficient && !has_variable) fail("expected coefficient or variable");
    if (negative) m.coefficient = -m.coefficient;
    return m;
  }

  std::string source_;
  std::string original_;
  std::size_t pos_ = 0;
};

}  // namespace

UnivariatePolynomial parse_univariate(std::string_view text) {
  const auto monomials = MonomialParser(text).parse();
  std::vector<UnivariatePolynomial::Term> terms;
  for (const auto& m : monomials) {
    if (m.indexed) throw Error(Errc::parse_error, "univariate polynomial uses a bare x: '" + std::string(text) + "'");
    unsigned exponent = 0;
    for (const auto& [index, power] : m.powers) {
      if (index != 1) {
        throw Error(Errc::parse_error, "univariate polynomial uses only x: '" + std::string(text) + "'");
      }
      exponent = power;
    }
    terms.push_back({exponent, m.coefficient});
  }
  try {
    return UnivariatePolynomial(std::move(terms));
  } catch (const Error& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

HomogeneousForm parse_form(std::string_view text) {
  const auto monomials = MonomialParser(text).parse();
  unsigned arity = 1;
  for (const auto& m : monomials) {
    for (const auto& [index, power] : m.powers) arity = std::max(arity, index);
  }
  std::vector<HomogeneousForm::Term> terms;
  for (const auto& m : monomials) {
    std::vector<unsigned> exponents(arity, 0);
    for (const auto& [index, power] : m.powers) exponents[index - 1] = power;
    terms.push_back({std::move(exponents), m.coefficient});
  }
  try {
    HomogeneousForm wide(arity, std::move(terms));
    // Arity counts only variables that survive in a nonzero term.
    std::size_t used = 1;
    for (const auto& t : wide.terms()) {
      for (std::size_t i = 0; i < t.exponents.size(); ++i) {
        if (t.exponents[i] != 0) used = std::max(used, i + 1);
      }
    }
    if (used == arity) return wide;
    std::vector<HomogeneousForm::Term> trimmed;
    for (const auto& t : wide.terms()) {
      trimmed.push_back({std::vector<unsigned>(t.exponents.begin(), t.exponents.begin() + static_cast<long>(used)),
                         t.coefficient});
    }
    return HomogeneousForm(used, std::move(trimmed));
  } catch (const Error& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

}  // namespace avoid
