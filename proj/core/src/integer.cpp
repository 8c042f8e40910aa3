#include "avoid/integer.hpp"

#include <limits>
#include <numeric>

#include "avoid/error.hpp"

namespace avoid {

i128 checked_add(i128 a, i128 b) {
  i128 out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::overflow, "128-bit addition");
  return out;
}

i128 checked_mul(i128 a, i128 b) {
  i128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::overflow, "128-bit multiplication");
  return out;
}

i128 checked_pow(i128 base, unsigned exponent) {
  i128 result = 1;
  for (unsigned i = 0; i < exponent; ++i) result = checked_mul(result, base);
  return result;
}

std::int64_t pow_i64(std::int64_t base, unsigned exponent) {
  const i128 value = checked_pow(base, exponent);
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Error(Errc::overflow, std::to_string(base) + "^" + std::to_string(exponent) +
                                    " exceeds 64 bits");
  }
  return static_cast<std::int64_t>(value);
}

std::int64_t mod(i128 a, std::int64_t m) {
  i128 r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return mod(static_cast<i128>(a) * b, m);
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t result = 1;
  std::int64_t b = mod(base, m);
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, b, m);
    b = mul_mod(b, b, m);
    exponent >>= 1U;
  }
  return result;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  i128 old_r = mod(a, m), r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    i128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw Error(Errc::invalid_argument,
                std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  return mod(old_s, m);
}

bool is_square_free(std::int64_t m) {
  if (m < 1) return false;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  return true;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

unsigned valuation(std::int64_t n, std::int64_t k) {
  unsigned t = 0;
  while (n % k == 0) {
    n /= k;
    ++t;
  }
  return t;
}

std::string to_string(i128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  std::string digits;
  while (value != 0) {
    const int d = static_cast<int>(value % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -d : d)));
    value /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

}  // namespace avoid
