#include "avoid/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "avoid/error.hpp"
#include "avoid/integer.hpp"
#include "avoid/residue.hpp"
#include "avoid/search.hpp"

namespace avoid {

std::string_view to_string(Variant variant) noexcept {
  switch (variant) {
    case Variant::ruzsa_power: return "ruzsa";
    case Variant::nonlinear_roth: return "nonlinear-roth";
    case Variant::inhomogeneous_poly: return "inhom";
    case Variant::multivariate_homogeneous: return "multivariate";
    case Variant::greedy: return "greedy";
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  for (const auto v : {Variant::ruzsa_power, Variant::nonlinear_roth, Variant::inhomogeneous_poly,
                       Variant::multivariate_homogeneous, Variant::greedy}) {
    if (name == to_string(v)) return v;
  }
  throw Error(Errc::parse_error, "unknown variant '" + std::string(name) + "'");
}

std::pair<std::int64_t, std::int64_t> ConstructionSpec::cutoff() const {
  if (!f) throw Error(Errc::invalid_argument, "cutoff is defined only for polynomial variants");
  const auto d = static_cast<std::int64_t>(f->degree());
  const auto low = static_cast<std::int64_t>(f->low_degree());
  if (d == low) return {digits, 1};
  std::int64_t num = low * (static_cast<std::int64_t>(digits) + 1);
  const std::int64_t g = std::gcd(num, d);
  return {num / g, d / g};
}

std::string ConstructionSpec::to_string() const {
  std::string out = "variant=" + std::string(avoid::to_string(variant));
  if (variant == Variant::greedy) {
    out += " forbidden=" + std::to_string(forbidden.size());
    return out + " N=" + std::to_string(N);
  }
  out += " m=" + std::to_string(m) + " k=" + std::to_string(k);
  if (f) out += " f=" + f->to_string();
  if (form) out += " F=" + form->to_string();
  if (residues) out += " R=" + residues->to_string();
  if (chain) out += " chain=" + chain->to_string();
  out += " Y=" + std::to_string(digits);
  if (variant == Variant::inhomogeneous_poly || variant == Variant::ruzsa_power) {
    const auto [num, den] = cutoff();
    out += " X=" + std::to_string(num) + (den == 1 ? "" : "/" + std::to_string(den));
  }
  return out + " N=" + std::to_string(N);
}

void ConstructedSet::for_each(const std::function<bool(std::int64_t)>& visit) const {
  if (materialized_) {
    for (const auto e : elements_) {
      if (!visit(e)) return;
    }
    return;
  }
  // Odometer with the least significant digit fastest gives increasing order.
  const std::size_t n = digit_choices_.size();
  std::vector<std::size_t> index(n, 0);
  std::vector<std::int64_t> place(n, 1);
  for (std::size_t i = 1; i < n; ++i) place[i] = place[i - 1] * base_;
  while (true) {
    std::int64_t value = 1;
    for (std::size_t i = 0; i < n; ++i) value += digit_choices_[i][index[i]] * place[i];
    if (!visit(value)) return;
    std::size_t i = 0;
    while (i < n && ++index[i] == digit_choices_[i].size()) index[i++] = 0;
    if (i == n) return;
  }
}

// Assembles digit-based sets; lives here so ConstructedSet stays closed.
class SetBuilder {
 public:
  static ConstructedSet digits(ConstructionSpec spec, std::int64_t base,
                               std::vector<std::vector<std::int64_t>> choices) {
    ConstructedSet set;
    i128 size = 1;
    for (auto& c : choices) {
      std::sort(c.begin(), c.end());
      size = checked_mul(size, static_cast<i128>(c.size()));
    }
    if (size > INT64_MAX) throw Error(Errc::overflow, "set size exceeds 64 bits");
    set.size_ = static_cast<std::int64_t>(size);
    set.base_ = base;
    set.digit_choices_ = std::move(choices);
    set.spec_ = std::move(spec);
    set.size_bound_ = size_lower_bound(set.spec_);
    if (set.size_ <= static_cast<std::int64_t>(kMaterializationCap)) {
      set.elements_.reserve(static_cast<std::size_t>(set.size_));
      set.for_each([&](std::int64_t e) {
        set.elements_.push_back(e);
        return true;
      });
      set.materialized_ = true;
    }
    return set;
  }

  static ConstructedSet list(ConstructionSpec spec, std::vector<std::int64_t> elements) {
    ConstructedSet set;
    set.size_ = static_cast<std::int64_t>(elements.size());
    set.elements_ = std::move(elements);
    set.materialized_ = true;
    set.spec_ = std::move(spec);
    set.size_bound_ = size_lower_bound(set.spec_);
    return set;
  }
};

unsigned digit_class(std::uint64_t i, unsigned k) {
  if (k < 2) throw Error(Errc::invalid_argument, "k must be at least 2");
  if (i == 0) return 1;
  return valuation(static_cast<std::int64_t>(i), k);
}

namespace {

std::int64_t checked_range(std::int64_t base, unsigned digits) {
  if (digits < 1) throw Error(Errc::invalid_argument, "digit length must be positive");
  try {
    return pow_i64(base, digits);
  } catch (const Error&) {
    throw Error(Errc::digit_length_too_large,
                std::to_string(base) + "^" + std::to_string(digits) + " exceeds 2^63-1");
  }
}

std::vector<std::int64_t> to_vector(const ResidueSet& set) { return {set.elements().begin(), set.elements().end()}; }

void require_avoids(const ResidueSet& R, const ResidueSet& image, Errc code, const std::string& what) {
  const auto diffs = R.differences();
  for (const auto d : diffs.elements()) {
    if (d != 0 && image.contains(d)) {
      throw Error(code, R.to_string() + " has difference " + std::to_string(d) + " in " + what);
    }
  }
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::int64_t checked_product(i128 value) {
  if (value > INT64_MAX) throw Error(Errc::overflow, "size bound exceeds 64 bits");
  return static_cast<std::int64_t>(value);
}

}  // namespace

ConstructedSet build_nonlinear_roth(const ChainSpec& chain, unsigned digits) {
  if (!chain.validated()) throw Error(Errc::unvalidated_chain, "run validate_chain first");
  const auto k = chain.power();
  if (!k || *k < 2) throw Error(Errc::invalid_argument, "non-linear Roth construction needs f = x^k, k >= 2");
  const std::int64_t m = chain.modulus();
  // The valuation argument behind the digit rule needs m square-free.
  if (!is_square_free(m)) throw Error(Errc::not_square_free, std::to_string(m));
  ConstructionSpec spec;
  spec.variant = Variant::nonlinear_roth;
  spec.m = m;
  spec.k = *k;
  spec.chain = chain;
  spec.digits = digits;
  spec.N = checked_range(m, digits);
  std::vector<std::vector<std::int64_t>> choices;
  for (unsigned i = 0; i < digits; ++i) choices.push_back(to_vector(chain.at(digit_class(i, *k))));
  return SetBuilder::digits(std::move(spec), m, std::move(choices));
}

unsigned inhom_min_digits(std::int64_t m, const UnivariatePolynomial& f) {
  const unsigned k = f.low_degree();
  const unsigned d = f.degree();
  if (k == d) return 1;
  // Smallest B with 2 * sum_{i<d} |a_i| B^i < |a_d| B^d; beyond it every |x| >= B
  // has |f(x)| > |a_d| |x|^d / 2.
  const auto below_leading = [&](i128 B) {
    i128 lower = 0;
    for (const auto& t : f.terms()) {
      if (t.exponent == d) continue;
      lower = checked_add(lower, checked_mul(t.coefficient < 0 ? -static_cast<i128>(t.coefficient) : t.coefficient,
                                             checked_pow(B, t.exponent)));
    }
    const i128 leading = f.leading_coefficient() < 0 ? -static_cast<i128>(f.leading_coefficient())
                                                     : static_cast<i128>(f.leading_coefficient());
    return checked_mul(2, lower) < checked_mul(leading, checked_pow(B, d));
  };
  i128 B = 1;
  while (!below_leading(B)) ++B;

  // Every high digit j >= ceil(X) forces |x| >= m^ceil(ceil(X)/k); this grows with Y.
  for (unsigned Y = 1; Y < 64; ++Y) {
    const auto first_high = ceil_div(static_cast<std::int64_t>(k) * (Y + 1), d);
    const auto exponent = static_cast<unsigned>(ceil_div(first_high, k));
    i128 smallest = 1;
    for (unsigned e = 0; e < exponent && smallest < B; ++e) smallest *= m;
    if (smallest >= B) return Y;
  }
  throw Error(Errc::digit_length_too_large, "no admissible digit length below 64");
}

bool inhom_digits_admissible(std::int64_t m, const UnivariatePolynomial& f, unsigned digits) {
  const unsigned k = f.low_degree();
  const unsigned d = f.degree();
  if (k == d) return true;
  // With ceil(X) >= Y every digit is low and the modular cases cover all of them.
  if (ceil_div(static_cast<std::int64_t>(k) * (digits + 1), d) >= static_cast<std::int64_t>(digits)) return true;
  return digits >= inhom_min_digits(m, f);
}

ConstructedSet build_inhom_poly(std::int64_t m, const UnivariatePolynomial& f, const ResidueSet& R, unsigned digits) {
  const unsigned k = f.low_degree();
  const unsigned d = f.degree();
  if (k < 2) throw Error(Errc::invalid_argument, "lowest-degree term must have degree at least 2, got " + f.to_string());
  if (R.modulus() != m) throw Error(Errc::modulus_mismatch, R.to_string() + " vs m=" + std::to_string(m));
  if (!root_condition_univariate(f, m)) {
    throw Error(Errc::root_condition_failed, f.to_string() + " has a nonzero root modulo " + std::to_string(m));
  }
  const std::int64_t a_k = f.low_coefficient();
  if (std::gcd(mod(a_k, m), m) != 1) {
    throw Error(Errc::coefficient_not_coprime, "gcd(" + std::to_string(a_k) + ", " + std::to_string(m) + ") != 1");
  }
  require_avoids(R, power_residues(m, k), Errc::not_a_clique, "the " + std::to_string(k) + "-th powers mod " + std::to_string(m));
  if (digits < 1) throw Error(Errc::digit_length_too_small, "Y must be positive");
  if (!inhom_digits_admissible(m, f, digits)) {
    throw Error(Errc::digit_length_too_small, "Y=" + std::to_string(digits) + " below threshold " +
                                                  std::to_string(inhom_min_digits(m, f)) + " for " + f.to_string());
  }

  ConstructionSpec spec;
  spec.variant = k == d && f.terms().size() == 1 && a_k == 1 ? Variant::ruzsa_power : Variant::inhomogeneous_poly;
  spec.m = m;
  spec.k = k;
  spec.f = f;
  spec.residues = R;
  spec.digits = digits;
  spec.N = checked_range(m, digits);
  const auto [num, den] = spec.cutoff();

  const auto scaled = to_vector(R.scaled(a_k));
  const auto free = to_vector(ResidueSet::full(m));
  std::vector<std::vector<std::int64_t>> choices;
  for (unsigned i = 0; i < digits; ++i) {
    const bool constrained = i % k == 0 && static_cast<std::int64_t>(i) * den < num;
    choices.push_back(constrained ? scaled : free);
  }
  return SetBuilder::digits(std::move(spec), m, std::move(choices));
}

ConstructedSet build_ruzsa(std::int64_t m, unsigned k, const ResidueSet& R, unsigned digits) {
  if (k < 2) throw Error(Errc::invalid_argument, "k must be at least 2");
  return build_inhom_poly(m, UnivariatePolynomial::monomial(k), R, digits);
}

ConstructedSet build_multivariate(const HomogeneousForm& F, std::int64_t m, unsigned k, const ResidueSet& Rp,
                                  unsigned digits) {
  if (F.degree() != k) throw Error(Errc::invalid_argument, "form degree differs from k");
  const std::int64_t M = pow_i64(m, k);
  if (Rp.modulus() != M) throw Error(Errc::modulus_mismatch, Rp.to_string() + " vs M=" + std::to_string(M));
  if (!root_condition_form(F, m, k)) {
    throw Error(Errc::root_condition_failed, F.to_string() + " has a root modulo " + std::to_string(M) +
                                                 " not divisible by " + std::to_string(m));
  }
  require_avoids(Rp, form_image_mod(F, M), Errc::forbidden_difference, "the image of " + F.to_string());

  ConstructionSpec spec;
  spec.variant = Variant::multivariate_homogeneous;
  spec.m = m;
  spec.k = k;
  spec.form = F;
  spec.residues = Rp;
  spec.digits = digits;
  spec.N = checked_range(M, digits);
  std::vector<std::vector<std::int64_t>> choices(digits, to_vector(Rp));
  return SetBuilder::digits(std::move(spec), M, std::move(choices));
}

ConstructedSet build_greedy(std::int64_t N, std::vector<std::int64_t> forbidden) {
  if (N < 1) throw Error(Errc::invalid_argument, "N must be positive");
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
  for (const auto v : forbidden) {
    if (v < 1 || v > N) throw Error(Errc::invalid_argument, "forbidden value " + std::to_string(v) + " outside [1, N]");
  }
  std::vector<bool> blocked(static_cast<std::size_t>(N) + 1, false);
  std::vector<std::int64_t> kept;
  for (std::int64_t x = 1; x <= N; ++x) {
    if (blocked[static_cast<std::size_t>(x)]) continue;
    kept.push_back(x);
    for (const auto v : forbidden) {
      if (x + v > N) break;
      blocked[static_cast<std::size_t>(x + v)] = true;
    }
  }
  ConstructionSpec spec;
  spec.variant = Variant::greedy;
  spec.N = N;
  spec.forbidden = std::move(forbidden);
  return SetBuilder::list(std::move(spec), std::move(kept));
}

std::int64_t size_lower_bound(const ConstructionSpec& spec) {
  const auto Y = static_cast<std::int64_t>(spec.digits);
  switch (spec.variant) {
    case Variant::greedy:
      return ceil_div(spec.N, static_cast<std::int64_t>(spec.forbidden.size()) + 1);
    case Variant::multivariate_homogeneous:
      return checked_product(checked_pow(static_cast<i128>(spec.residues->size()), spec.digits));
    case Variant::ruzsa_power:
    case Variant::inhomogeneous_poly: {
      // |R|^ceil(X/k) * m^(Y - ceil(X/k)), X = num/den.
      const auto [num, den] = spec.cutoff();
      const std::int64_t constrained = std::min(ceil_div(num, den * spec.k), Y);
      return checked_product(checked_mul(checked_pow(static_cast<i128>(spec.residues->size()), static_cast<unsigned>(constrained)),
                                         checked_pow(spec.m, static_cast<unsigned>(Y - constrained))));
    }
    case Variant::nonlinear_roth: {
      // |{i : 1 <= i < Y, k^n || i}| = ceil(Y/k^n) - ceil(Y/k^(n+1)); i = 0 joins class 1.
      const auto k = static_cast<std::int64_t>(spec.k);
      i128 bound = 1;
      std::int64_t power = 1;
      for (unsigned n = 0; power < Y || n < 2; ++n) {
        const std::int64_t count = ceil_div(Y, power) - ceil_div(Y, power * k) + (n == 1 ? 1 : 0);
        bound = checked_mul(bound, checked_pow(static_cast<i128>(spec.chain->at(n).size()), static_cast<unsigned>(count)));
        power *= k;
      }
      return checked_product(bound);
    }
  }
  return 0;
}

}  // namespace avoid
