#include "avoid/chain.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "avoid/error.hpp"
#include "avoid/exponents.hpp"
#include "avoid/integer.hpp"
#include "avoid/residue.hpp"

namespace avoid {

ChainSpec::ChainSpec(std::int64_t modulus, UnivariatePolynomial map, std::vector<ResidueSet> preperiod,
                     std::vector<ResidueSet> period)
    : modulus_(modulus), map_(std::move(map)), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (modulus_ < 2) throw Error(Errc::invalid_modulus, std::to_string(modulus_));
  if (period_.empty()) throw Error(Errc::invalid_argument, "chain period must be non-empty");
  for (const auto* list : {&preperiod_, &period_}) {
    for (const auto& set : *list) {
      if (set.modulus() != modulus_) {
        throw Error(Errc::modulus_mismatch, set.to_string() + " in chain modulo " + std::to_string(modulus_));
      }
      if (set.empty()) throw Error(Errc::invalid_argument, "chain members must be non-empty");
    }
  }
}

ChainSpec ChainSpec::power(std::int64_t modulus, unsigned k, std::vector<ResidueSet> preperiod,
                           std::vector<ResidueSet> period) {
  return ChainSpec(modulus, UnivariatePolynomial::monomial(k), std::move(preperiod), std::move(period));
}

std::optional<unsigned> ChainSpec::power() const noexcept {
  if (map_.terms().size() == 1 && map_.low_coefficient() == 1) return map_.degree();
  return std::nullopt;
}

const ResidueSet& ChainSpec::at(std::size_t n) const noexcept {
  if (n < preperiod_.size()) return preperiod_[n];
  return period_[(n - preperiod_.size()) % period_.size()];
}

std::string ChainSpec::to_string() const {
  std::string out = "f=" + map_.to_string() + " pre=[";
  for (std::size_t i = 0; i < preperiod_.size(); ++i) out += (i ? ";" : "") + preperiod_[i].to_string();
  out += "] period=[";
  for (std::size_t i = 0; i < period_.size(); ++i) out += (i ? ";" : "") + period_[i].to_string();
  return out + "]";
}

bool chain_step_ok(const ResidueSet& previous, const ResidueSet& next, const UnivariatePolynomial& f) {
  if (previous.modulus() != next.modulus()) throw Error(Errc::modulus_mismatch, "chain step");
  const std::int64_t m = previous.modulus();
  std::vector<bool> image(static_cast<std::size_t>(m), false);
  const auto previous_diffs = previous.differences(), next_diffs = next.differences();
  for (const auto d : previous_diffs.elements()) image[static_cast<std::size_t>(f.evaluate_mod(d, m))] = true;
  for (const auto d : next_diffs.elements()) {
    if (d != 0 && image[static_cast<std::size_t>(d)]) return false;
  }
  return true;
}

ChainValidation validate_chain(ChainSpec& chain) {
  const std::size_t length = chain.preperiod().size() + chain.period().size();
  for (std::size_t n = 0; n < length; ++n) {
    // at(length) wraps to the first period member.
    if (!chain_step_ok(chain.at(n), chain.at(n + 1), chain.map())) return {false, n};
  }
  chain.validated_ = true;
  return {true, std::nullopt};
}

DifferenceGraph second_set_graph(const ResidueSet& first, unsigned k) {
  const std::int64_t m = first.modulus();
  const auto f = UnivariatePolynomial::monomial(k);
  const auto diffs = first.differences();
  std::vector<bool> image(static_cast<std::size_t>(m), false);
  for (const auto d : diffs.elements()) image[static_cast<std::size_t>(f.evaluate_mod(d, m))] = true;
  std::vector<std::int64_t> forbidden{0};
  for (std::int64_t d = 1; d < m; ++d) {
    const auto fd = f.evaluate_mod(d, m);
    if (image[static_cast<std::size_t>(d)] || (fd != 0 && diffs.contains(fd))) forbidden.push_back(d);
  }
  return build_difference_graph(m, ResidueSet(m, std::move(forbidden)));
}

SearchResult best_second_set(const ResidueSet& first, unsigned k, const SearchOptions& options) {
  return max_clique(second_set_graph(first, k), options);
}

namespace {

using Clock = std::chrono::steady_clock;

// Smallest sorted translate of set or -set that contains 0.
std::vector<std::int64_t> canonical_shape(std::span<const std::int64_t> set, std::int64_t m) {
  std::vector<std::int64_t> best;
  for (const int sign : {1, -1}) {
    for (const auto pivot : set) {
      std::vector<std::int64_t> shifted;
      shifted.reserve(set.size());
      for (const auto e : set) shifted.push_back(mod(static_cast<i128>(sign) * (e - pivot), m));
      std::sort(shifted.begin(), shifted.end());
      if (best.empty() || shifted < best) best = std::move(shifted);
    }
  }
  return best;
}

// Pairs are ranked by |R_1|^k * |R_2|, which orders them exactly as gamma.
i128 weight(std::size_t first, std::size_t second, unsigned k) {
  return checked_mul(checked_pow(static_cast<i128>(first), k), static_cast<i128>(second));
}

}  // namespace

ChainPairResult search_chain_pair(std::int64_t m, unsigned k, const ChainPairOptions& options) {
  const auto start = Clock::now();
  if (k < 2) throw Error(Errc::invalid_argument, "k must be at least 2");
  if (m < 2) throw Error(Errc::invalid_modulus, std::to_string(m));
  if (!is_square_free(m)) throw Error(Errc::not_square_free, std::to_string(m));

  const auto deadline = options.budget.time == std::chrono::milliseconds::max()
                            ? Clock::time_point::max()
                            : start + options.budget.time;
  bool complete = true;

  const auto first_graph = build_difference_graph(m, power_residues(m, k));
  std::set<std::vector<std::int64_t>> shapes;
  const bool enumerated = for_each_maximal_clique_containing(
      first_graph.graph(), 0, options.max_maximal_cliques, [&](std::span<const std::size_t> clique) {
        std::vector<std::int64_t> members(clique.begin(), clique.end());
        shapes.insert(canonical_shape(members, m));
        return Clock::now() < deadline;
      });
  if (!enumerated) complete = false;

  std::vector<std::vector<std::int64_t>> candidates(shapes.begin(), shapes.end());
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });

  // Singletons always form a valid pair; any real candidate of equal weight wins.
  struct Incumbent {
    i128 weight = 1;
    std::size_t index = std::numeric_limits<std::size_t>::max();
    ResidueSet first, second;
  } best{1, std::numeric_limits<std::size_t>::max(), ResidueSet(m, {0}), ResidueSet(m, {0})};
  std::mutex best_mutex;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> solved{0};
  std::atomic<bool> all_optimal{true};

  const auto worker = [&] {
    while (true) {
      const std::size_t index = next.fetch_add(1);
      if (index >= candidates.size()) return;
      const auto now = Clock::now();
      if (now >= deadline) {
        all_optimal = false;
        return;
      }
      const ResidueSet first(m, candidates[index]);
      const auto s = static_cast<i128>(first.size());
      i128 incumbent;
      {
        std::lock_guard lock(best_mutex);
        incumbent = best.weight;
      }
      // R_2 must exceed this size to beat the incumbent.
      const i128 needed = incumbent / checked_pow(s, k);
      if (needed >= m) {
        solved.fetch_add(1);
        continue;
      }
      SearchOptions search;
      search.budget.time = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now);
      search.budget.nodes = options.budget.nodes;
      search.lower_bound = static_cast<std::size_t>(needed);
      auto result = best_second_set(first, k, search);
      if (!result.optimal) all_optimal = false;
      solved.fetch_add(1);
      if (result.size == 0) continue;
      const auto w = weight(first.size(), result.size, k);
      std::lock_guard lock(best_mutex);
      if (w > best.weight || (w == best.weight && index < best.index)) {
        best.weight = w;
        best.index = index;
        best.first = first;
        best.second = std::move(result.witness);
      }
    }
  };

  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  ChainPairResult out{best.first, best.second, 0.0, false, candidates.size(), solved.load(), {}};
  out.gamma = gamma_chain_pair(m, k, out.first.size(), out.second.size());
  out.optimal = complete && all_optimal && solved.load() == candidates.size();
  out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return out;
}

}  // namespace avoid
