#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace avoid {

// (k - 1 + log_m r) / k
double gamma_ruzsa(std::int64_t m, unsigned k, std::int64_t r);

// (k - 1) * sum_{n >= 0} log_m |R_n| / k^(n+1), with the periodic tail
// summed in closed form.
double gamma_chain(std::int64_t m, unsigned k, std::span<const std::int64_t> preperiod_sizes,
                   std::span<const std::int64_t> period_sizes);

// gamma_chain for the chain (full, R_1, R_2, R_1, R_2, ...):
// (k-1)/k + log_m r1/(k+1) + log_m r2/(k(k+1)).
double gamma_chain_pair(std::int64_t m, unsigned k, std::int64_t r1, std::int64_t r2);

// Truncated series sum_{n < terms}; used to check the closed form.
double gamma_chain_partial(std::int64_t m, unsigned k, std::span<const std::int64_t> preperiod_sizes,
                           std::span<const std::int64_t> period_sizes, std::size_t terms);

// Smallest n with sum_{j >= n} 2^-j <= epsilon, the number of chain members
// needed for an exponent within epsilon of the full series.
std::size_t chain_terms_for_epsilon(double epsilon);

// (d - 1 + log_m r) / d
double gamma_inhom(std::int64_t m, unsigned d, std::int64_t r);

// log_m r' / k
double gamma_multivariate(std::int64_t m, unsigned k, std::int64_t rp);

// Exponent delivered by the greedy scan against a forbidden set of size
// about N^density: 1 - density, or nothing when that is not positive
// (rendered as "sub-polynomial").
std::optional<double> greedy_exponent(double forbidden_density);

struct ReportRow {
  std::string label;
  std::optional<double> value;  // empty: sub-polynomial
  std::string note;
  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ExponentReport {
  std::string instance;
  std::vector<ReportRow> rows;  // ascending by value, sub-polynomial first
};

std::string render_report(const ExponentReport& report);

class ConstructedSet;

// Greedy baseline, claimed exponent and observed ln|A| / ln N for a build.
ExponentReport compare_report(const ConstructedSet& set);

// Slack allowed between observed and claimed exponents at digit length Y:
// 2 log_m(m^2) / Y = 4 / Y.
double exponent_slack(unsigned digits);

}  // namespace avoid
