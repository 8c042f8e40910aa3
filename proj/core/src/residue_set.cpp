#include "avoid/residue_set.hpp"

#include <algorithm>
#include <charconv>

#include "avoid/error.hpp"
#include "avoid/integer.hpp"

namespace avoid {

namespace {

void require_modulus(std::int64_t modulus) {
  if (modulus < 2) {
    throw Error(Errc::invalid_modulus, "modulus must be at least 2, got " + std::to_string(modulus));
  }
}

void canonicalize(std::int64_t modulus, std::vector<std::int64_t>& elements) {
  for (auto& e : elements) e = mod(e, modulus);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
}

}  // namespace

ResidueSet::ResidueSet(std::int64_t modulus, std::vector<std::int64_t> elements)
    : modulus_(modulus), elements_(std::move(elements)) {
  require_modulus(modulus_);
  if (elements_.empty()) {
    throw Error(Errc::invalid_argument, "residue set must be non-empty");
  }
  canonicalize(modulus_, elements_);
}

ResidueSet ResidueSet::full(std::int64_t modulus) {
  require_modulus(modulus);
  ResidueSet set;
  set.modulus_ = modulus;
  set.elements_.resize(static_cast<std::size_t>(modulus));
  for (std::int64_t i = 0; i < modulus; ++i) set.elements_[static_cast<std::size_t>(i)] = i;
  return set;
}

ResidueSet ResidueSet::empty_image(std::int64_t modulus) {
  require_modulus(modulus);
  ResidueSet set;
  set.modulus_ = modulus;
  return set;
}

ResidueSet ResidueSet::parse(std::string_view text) {
  const auto fail = [&] {
    throw Error(Errc::parse_error, "expected m=<modulus>:{...}, got '" + std::string(text) + "'");
  };
  if (!text.starts_with("m=")) fail();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) fail();
  std::int64_t modulus = 0;
  const auto mtext = text.substr(2, colon - 2);
  if (std::from_chars(mtext.data(), mtext.data() + mtext.size(), modulus).ec != std::errc{}) fail();
  auto body = text.substr(colon + 1);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') fail();
  body = body.substr(1, body.size() - 2);
  std::vector<std::int64_t> elements;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto token = body.substr(0, comma);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) fail();
    if (value < 0 || value >= modulus) fail();
    elements.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (elements.empty()) return empty_image(modulus);
  return ResidueSet(modulus, std::move(elements));
}

bool ResidueSet::contains(std::int64_t residue) const {
  return std::binary_search(elements_.begin(), elements_.end(), mod(residue, modulus_));
}

ResidueSet ResidueSet::differences() const {
  if (elements_.empty()) return empty_image(modulus_);
  std::vector<bool> seen(static_cast<std::size_t>(modulus_), false);
  for (const auto a : elements_) {
    for (const auto b : elements_) seen[static_cast<std::size_t>(mod(a - b, modulus_))] = true;
  }
  std::vector<std::int64_t> out;
  for (std::int64_t d = 0; d < modulus_; ++d) {
    if (seen[static_cast<std::size_t>(d)]) out.push_back(d);
  }
  return ResidueSet(modulus_, std::move(out));
}

ResidueSet ResidueSet::scaled(std::int64_t factor) const {
  if (elements_.empty()) return *this;
  std::vector<std::int64_t> out;
  out.reserve(elements_.size());
  for (const auto e : elements_) out.push_back(mul_mod(e, mod(factor, modulus_), modulus_));
  return ResidueSet(modulus_, std::move(out));
}

std::vector<bool> ResidueSet::indicator() const {
  std::vector<bool> table(static_cast<std::size_t>(modulus_), false);
  for (const auto e : elements_) table[static_cast<std::size_t>(e)] = true;
  return table;
}

std::string ResidueSet::to_string() const {
  std::string out = "m=" + std::to_string(modulus_) + ":{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(elements_[i]);
  }
  out += '}';
  return out;
}

}  // namespace avoid
