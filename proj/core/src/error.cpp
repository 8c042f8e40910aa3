#include "avoid/error.hpp"

namespace avoid {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::invalid_modulus: return "invalid modulus";
    case Errc::not_square_free: return "modulus not square-free";
    case Errc::not_prime: return "not prime";
    case Errc::modulus_mismatch: return "modulus mismatch";
    case Errc::root_condition_failed: return "root condition failed";
    case Errc::coefficient_not_coprime: return "coefficient not coprime to modulus";
    case Errc::not_a_clique: return "residue set has a forbidden difference";
    case Errc::forbidden_difference: return "residue set meets the form image";
    case Errc::digit_length_too_small: return "digit length below threshold";
    case Errc::digit_length_too_large: return "digit length exceeds 63-bit range";
    case Errc::unvalidated_chain: return "chain not validated";
    case Errc::not_a_root: return "not a root";
    case Errc::singular_root: return "singular root";
    case Errc::divides_power: return "prime divides the power";
    case Errc::divides_value: return "prime divides the value";
    case Errc::cost_exceeded: return "enumeration cost exceeds budget";
    case Errc::overflow: return "integer overflow";
    case Errc::parse_error: return "parse error";
  }
  return "unknown error";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace avoid
