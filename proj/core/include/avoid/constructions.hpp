#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avoid/chain.hpp"
#include "avoid/polynomial.hpp"
#include "avoid/residue_set.hpp"

namespace avoid {

enum class Variant { ruzsa_power, nonlinear_roth, inhomogeneous_poly, multivariate_homogeneous, greedy };

// "ruzsa", "nonlinear-roth", "inhom", "multivariate", "greedy"
std::string_view to_string(Variant variant) noexcept;
Variant parse_variant(std::string_view name);

struct ConstructionSpec {
  Variant variant = Variant::greedy;
  std::int64_t m = 0;  // digit modulus before any power (the M = m^k base is derived)
  unsigned k = 0;
  std::optional<UnivariatePolynomial> f;
  std::optional<HomogeneousForm> form;
  std::optional<ResidueSet> residues;  // R, a_k R source, or R'
  std::optional<ChainSpec> chain;
  unsigned digits = 0;                 // Y
  std::int64_t N = 0;
  std::vector<std::int64_t> forbidden;  // greedy only

  // Cutoff X = k(Y+1)/d as the exact fraction (numerator, denominator);
  // X = Y when d = k. Only for the polynomial variants.
  std::pair<std::int64_t, std::int64_t> cutoff() const;

  std::string to_string() const;
};

inline constexpr std::size_t kMaterializationCap = 10'000'000;

// A constructed subset of [1, N]. Sets up to kMaterializationCap elements are
// held as a sorted list; larger ones are enumerated on demand.
class ConstructedSet {
 public:
  const ConstructionSpec& spec() const noexcept { return spec_; }
  bool materialized() const noexcept { return materialized_; }
  // Empty unless materialized().
  const std::vector<std::int64_t>& elements() const noexcept { return elements_; }
  std::int64_t size() const noexcept { return size_; }
  std::int64_t size_bound() const noexcept { return size_bound_; }
  std::int64_t N() const noexcept { return spec_.N; }

  // Visits elements in increasing order; stops when visit returns false.
  void for_each(const std::function<bool(std::int64_t)>& visit) const;

 private:
  friend class SetBuilder;
  ConstructedSet() = default;

  ConstructionSpec spec_;
  bool materialized_ = false;
  std::vector<std::int64_t> elements_;
  std::int64_t size_ = 0;
  std::int64_t size_bound_ = 0;
  std::int64_t base_ = 0;
  std::vector<std::vector<std::int64_t>> digit_choices_;  // least significant first
};

// Chain index for digit position i: 1 for i = 0, 0 when k does not divide
// i, otherwise the exact power of k dividing i.
unsigned digit_class(std::uint64_t i, unsigned k);

ConstructedSet build_nonlinear_roth(const ChainSpec& chain, unsigned digits);

// Smallest Y0 such that every Y >= Y0 keeps the high digits j >= X out of
// f(Z): there |x| >= m^ceil(ceil(X)/k) lies past the point where the leading
// term dominates, so |f(x)| > |a_d| m^(Y+1) / 2 >= m^Y.
unsigned inhom_min_digits(std::int64_t m, const UnivariatePolynomial& f);

// Y >= inhom_min_digits, or Y so small that ceil(X) >= Y leaves no high
// digits at all.
bool inhom_digits_admissible(std::int64_t m, const UnivariatePolynomial& f, unsigned digits);

ConstructedSet build_inhom_poly(std::int64_t m, const UnivariatePolynomial& f, const ResidueSet& R, unsigned digits);

// The f = x^k special case (X = Y).
ConstructedSet build_ruzsa(std::int64_t m, unsigned k, const ResidueSet& R, unsigned digits);

ConstructedSet build_multivariate(const HomogeneousForm& F, std::int64_t m, unsigned k, const ResidueSet& Rp,
                                  unsigned digits);

ConstructedSet build_greedy(std::int64_t N, std::vector<std::int64_t> forbidden);

// The counting lower bound from the construction's size argument.
std::int64_t size_lower_bound(const ConstructionSpec& spec);

}  // namespace avoid
