#pragma once

#include <stdexcept>
#include <string>

namespace avoid {

// Each hypothesis of a construction has its own code so callers (and the
// CLI) can report exactly which condition was violated.
enum class Errc {
  invalid_argument,
  invalid_modulus,
  not_square_free,
  not_prime,
  modulus_mismatch,
  root_condition_failed,
  coefficient_not_coprime,
  not_a_clique,
  forbidden_difference,
  digit_length_too_small,
  digit_length_too_large,
  unvalidated_chain,
  not_a_root,
  singular_root,
  divides_power,
  divides_value,
  cost_exceeded,
  overflow,
  parse_error,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace avoid
