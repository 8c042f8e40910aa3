#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "avoid/polynomial.hpp"
#include "avoid/search.hpp"

namespace avoid {

enum class Verdict { verified_exhaustive, verified_sampled, refuted };

std::string_view to_string(Verdict verdict) noexcept;
Verdict parse_verdict(std::string_view text);

// Outcome of checking one concrete set against one concrete target.
// Witnesses: (a, v) with a and a + v both in the set for difference checks;
// (x, y) with x + y and x + y^k both in the set for the Roth check.
struct AvoidanceCertificate {
  std::string set_digest;
  std::int64_t N = 0;
  std::string method;
  Verdict verdict = Verdict::verified_exhaustive;
  std::vector<std::int64_t> witness;
  std::uint64_t checked = 0;
  std::chrono::microseconds elapsed{0};

  friend bool operator==(const AvoidanceCertificate&, const AvoidanceCertificate&) = default;
};

// FNV-1a over the little-endian 64-bit encoding of the elements, as hex.
std::string set_digest(std::span<const std::int64_t> elements);

struct VerifyOptions {
  unsigned threads = 1;
};

// Positive values of f(Z) up to N, ascending and distinct. Scans x in
// (-B, B) where B is past both the leading-term domination point and the
// point at which |a_d| B^d / 2 exceeds N.
std::vector<std::int64_t> enumerate_poly_values(const UnivariatePolynomial& f, std::int64_t N);

// Exhaustive check that a + v is never in A for a in A and v in values.
// A must be strictly increasing, values positive.
AvoidanceCertificate verify_difference_avoidance(std::span<const std::int64_t> A,
                                                 std::span<const std::int64_t> values,
                                                 const VerifyOptions& options = {});

// Uniform sample of (element, value) pairs; never better than verified_sampled.
AvoidanceCertificate verify_difference_sampled(std::span<const std::int64_t> A,
                                               std::span<const std::int64_t> values, std::uint64_t samples,
                                               std::uint64_t seed = 0x5eed);

// No x, x + y, x + y^k all in A with y != 0 (either sign) and x + y^k in [1, N].
AvoidanceCertificate verify_nonlinear_roth(std::span<const std::int64_t> A, unsigned k, std::int64_t N,
                                           const VerifyOptions& options = {});

// Re-checks a refuted certificate's witness against the set.
bool replay_difference_witness(std::span<const std::int64_t> A, std::span<const std::int64_t> values,
                               const AvoidanceCertificate& certificate);
bool replay_roth_witness(std::span<const std::int64_t> A, unsigned k, const AvoidanceCertificate& certificate);

// Membership table over [0, N]; entry 0 is never marked.
std::vector<bool> sums_of_two_squares_sieve(std::int64_t N);
// Sums of `count` k-th powers (zero terms allowed, all-zero excluded).
std::vector<bool> sums_of_k_powers_sieve(std::int64_t N, unsigned k, unsigned count);
std::vector<std::int64_t> marked_values(const std::vector<bool>& table);

struct ExactRk {
  std::size_t size = 0;
  std::vector<std::int64_t> witness;
};

// Exact r_k(m) by size-ordered subset enumeration; m <= 40. Independent of
// the clique search.
ExactRk brute_force_r_k(std::int64_t m, unsigned k);

struct Prop51Report {
  std::size_t lhs = 0;  // r_k(p^k)
  std::size_t rhs = 0;  // p^(k-1) r_k(p)
  bool equal = false;
};

// p prime with p not dividing k. Uses the brute-force oracle when
// p^k <= 40, otherwise the clique search, which must finish within budget.
Prop51Report check_prop_51(std::int64_t p, unsigned k, const Budget& budget = Budget::unlimited());

}  // namespace avoid
