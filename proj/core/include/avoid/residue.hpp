#pragma once

#include <cstdint>

#include "avoid/polynomial.hpp"
#include "avoid/residue_set.hpp"

namespace avoid {

// Maximum number of points general (non-diagonal) form enumeration visits.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 30;

// { x^k mod m : x in [0, m) }.
ResidueSet power_residues(std::int64_t m, unsigned k);

// { f(x) mod m : x in [0, m) }.
ResidueSet poly_image_mod(const UnivariatePolynomial& f, std::int64_t m);

// True iff zero is the only root of f modulo m. m must be square-free
// (Errc::not_square_free otherwise); a failed condition returns false.
bool root_condition_univariate(const UnivariatePolynomial& f, std::int64_t m);

// True iff every root of F modulo m^k is congruent to 0 modulo m.
// Diagonal forms are folded one variable at a time; other forms are
// enumerated over [0, m^k)^n, refused past `budget` points.
bool root_condition_form(const HomogeneousForm& F, std::int64_t m, unsigned k,
                         std::uint64_t budget = kDefaultEnumerationBudget);

// { F(x) mod M : x in [0, M)^n }, with the same diagonal fast path.
ResidueSet form_image_mod(const HomogeneousForm& F, std::int64_t M,
                          std::uint64_t budget = kDefaultEnumerationBudget);

// Reference enumeration without the diagonal fast path; used to cross-check
// it. Refuses instances above `budget` points.
ResidueSet form_image_mod_enumerate(const HomogeneousForm& F, std::int64_t M,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

// Checks, for x in [0, bound], that f(x) = 0 mod m^j forces x = 0 mod
// m^ceil(j/k) with k the low degree of f. Requires the univariate root
// condition; a test oracle only.
bool divisibility_lift_check(const UnivariatePolynomial& f, std::int64_t m, unsigned j, std::int64_t bound);

// Lifts a simple root a of f modulo p to the unique root modulo p^N that
// is congruent to a modulo p. Result lies in [0, p^N).
std::int64_t hensel_lift(const UnivariatePolynomial& f, std::int64_t a, std::int64_t p, unsigned N);

// Whether w is a k-th power modulo p^N, for p prime with p not dividing k or w.
bool is_kth_power_residue_stable(std::int64_t w, std::int64_t p, unsigned k, unsigned N);

}  // namespace avoid
