#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace avoid {

struct ReproduceRow {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
  double seconds = 0.0;
};

struct ReproduceOptions {
  unsigned threads = 1;
  std::chrono::milliseconds chain_budget{std::chrono::minutes(5)};
  // Called after each row completes.
  std::function<void(const ReproduceRow&)> on_row;
};

// Re-derives every headline result: the mod-65 chain, all claimed exponents,
// the r_k identities and counterexample, the chain-pair search and a
// verified desk-scale build for each construction.
std::vector<ReproduceRow> run_reproduce(const ReproduceOptions& options = {});

std::string render_row(const ReproduceRow& row);

// The two residue sets used for the k = 2, m = 65 non-linear Roth chain.
std::vector<std::int64_t> roth65_first_set();
std::vector<std::int64_t> roth65_second_set();

}  // namespace avoid
