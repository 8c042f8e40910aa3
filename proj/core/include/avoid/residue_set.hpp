#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace avoid {

// A subset of Z/m stored as a strictly increasing list of representatives
// in [0, m). Houses the R-sets, the lifted R'-sets and every chain member.
class ResidueSet {
 public:
  // Elements are reduced modulo m, sorted and deduplicated. An empty list is
  // rejected; use empty_image() when an empty set is really meant.
  ResidueSet(std::int64_t modulus, std::vector<std::int64_t> elements);

  static ResidueSet full(std::int64_t modulus);
  static ResidueSet empty_image(std::int64_t modulus);

  // Parses the canonical rendering "m=<modulus>:{e1,e2,...}".
  static ResidueSet parse(std::string_view text);

  std::int64_t modulus() const noexcept { return modulus_; }
  std::span<const std::int64_t> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(std::int64_t residue) const;

  // { (a - b) mod m : a, b in this set }, ordered pairs, so 0 is included.
  ResidueSet differences() const;
  // { factor * e mod m }.
  ResidueSet scaled(std::int64_t factor) const;

  // Membership table of length modulus().
  std::vector<bool> indicator() const;

  std::string to_string() const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  ResidueSet() = default;

  std::int64_t modulus_ = 0;
  std::vector<std::int64_t> elements_;
};

}  // namespace avoid
