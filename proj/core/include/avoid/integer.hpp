#pragma once

#include <cstdint>
#include <string>

namespace avoid {

__extension__ using i128 = __int128;

// Checked arithmetic; every overflow raises Errc::overflow.
i128 checked_add(i128 a, i128 b);
i128 checked_mul(i128 a, i128 b);
i128 checked_pow(i128 base, unsigned exponent);

// base^exponent as int64, or Errc::overflow if it does not fit.
std::int64_t pow_i64(std::int64_t base, unsigned exponent);

// Least non-negative residue of a modulo m (m > 0).
std::int64_t mod(i128 a, std::int64_t m);

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t m);

// Inverse of a modulo m, or Errc::invalid_argument when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

bool is_square_free(std::int64_t m);
bool is_prime(std::int64_t n);

// Largest t with k^t dividing n (n > 0, k >= 2).
unsigned valuation(std::int64_t n, std::int64_t k);

std::string to_string(i128 value);

}  // namespace avoid
