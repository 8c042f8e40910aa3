#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "avoid/polynomial.hpp"
#include "avoid/residue_set.hpp"
#include "avoid/search.hpp"

namespace avoid {

// Eventually periodic sequence (R_n): preperiod first, then the period
// repeated forever. Consecutive members must satisfy
// (R_{n+1} - R_{n+1}) ∩ f(R_n - R_n) ⊆ {0} modulo m.
class ChainSpec {
 public:
  ChainSpec(std::int64_t modulus, UnivariatePolynomial map, std::vector<ResidueSet> preperiod,
            std::vector<ResidueSet> period);

  // The map f(x) = x^k.
  static ChainSpec power(std::int64_t modulus, unsigned k, std::vector<ResidueSet> preperiod,
                         std::vector<ResidueSet> period);

  std::int64_t modulus() const noexcept { return modulus_; }
  const UnivariatePolynomial& map() const noexcept { return map_; }
  // k when the map is exactly x^k.
  std::optional<unsigned> power() const noexcept;
  const std::vector<ResidueSet>& preperiod() const noexcept { return preperiod_; }
  const std::vector<ResidueSet>& period() const noexcept { return period_; }

  const ResidueSet& at(std::size_t n) const noexcept;
  bool validated() const noexcept { return validated_; }

  std::string to_string() const;

 private:
  friend struct ChainValidation validate_chain(ChainSpec& chain);

  std::int64_t modulus_;
  UnivariatePolynomial map_;
  std::vector<ResidueSet> preperiod_;
  std::vector<ResidueSet> period_;
  bool validated_ = false;
};

struct ChainValidation {
  bool ok = false;
  // n such that the pair (R_n, R_{n+1}) fails.
  std::optional<std::size_t> failing_index;

  explicit operator bool() const noexcept { return ok; }
};

// Checks every consecutive pair of preperiod + period, including the wrap
// from the last period member back to the first, and marks the chain as
// validated on success.
ChainValidation validate_chain(ChainSpec& chain);

// True iff (next - next) ∩ f(previous - previous) ⊆ {0} modulo m.
bool chain_step_ok(const ResidueSet& previous, const ResidueSet& next, const UnivariatePolynomial& f);

// Constraint graph for the second member of the period (R_1, R_2): distinct
// a, b are adjacent when a - b avoids f(R_1 - R_1) \ {0} and f(a - b) avoids
// (R_1 - R_1) \ {0}, in both orientations.
DifferenceGraph second_set_graph(const ResidueSet& first, unsigned k);

// Largest R_2 for a pinned R_1.
SearchResult best_second_set(const ResidueSet& first, unsigned k, const SearchOptions& options = {});

struct ChainPairOptions {
  Budget budget{std::chrono::minutes(5), std::numeric_limits<std::uint64_t>::max()};
  unsigned threads = 1;
  std::size_t max_maximal_cliques = 1'000'000;
};

struct ChainPairResult {
  ResidueSet first;
  ResidueSet second;
  double gamma = 0.0;
  bool optimal = false;
  std::size_t candidates = 0;
  std::size_t candidates_solved = 0;
  std::chrono::milliseconds elapsed{0};
};

// Searches R_1, R_2 for the chain (full, R_1, R_2, R_1, R_2, ...) with f = x^k,
// maximising (k-1)/k + log_m|R_1|/(k+1) + log_m|R_2|/(k(k+1)). R_1 ranges
// over maximal cliques of the k-th power difference graph up to translation
// and negation, largest first.
ChainPairResult search_chain_pair(std::int64_t m, unsigned k, const ChainPairOptions& options = {});

}  // namespace avoid
