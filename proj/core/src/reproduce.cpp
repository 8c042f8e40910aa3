#include "avoid/reproduce.hpp"

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>

#include "avoid/chain.hpp"
#include "avoid/constructions.hpp"
#include "avoid/error.hpp"
#include "avoid/exponents.hpp"
#include "avoid/integer.hpp"
#include "avoid/residue.hpp"
#include "avoid/search.hpp"
#include "avoid/verifiers.hpp"

namespace avoid {

std::vector<std::int64_t> roth65_first_set() { return {31, 39, 8, 62, 19, 42, 50}; }

std::vector<std::int64_t> roth65_second_set() {
  return {31, 47, 62, 34, 42, 39, 27, 8, 54, 23, 0, 58, 19, 50, 15, 12, 4};
}

namespace {

using Clock = std::chrono::steady_clock;

std::string fixed(double value, int digits = 6) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << value;
  return out.str();
}

class Recorder {
 public:
  explicit Recorder(const ReproduceOptions& options) : options_(options) {}

  // body returns {observed, pass}; exceptions become FAIL rows.
  template <typename Body>
  void row(std::string name, std::string expected, Body&& body) {
    const auto start = Clock::now();
    ReproduceRow r{std::move(name), std::move(expected), "", false, 0.0};
    try {
      auto [observed, pass] = body();
      r.observed = std::move(observed);
      r.pass = pass;
    } catch (const std::exception& e) {
      r.observed = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (options_.on_row) options_.on_row(r);
    rows_.push_back(std::move(r));
  }

  std::vector<ReproduceRow> take() { return std::move(rows_); }

 private:
  const ReproduceOptions& options_;
  std::vector<ReproduceRow> rows_;
};

using Outcome = std::pair<std::string, bool>;

Outcome verified_build(const ConstructedSet& set, const AvoidanceCertificate& cert, std::int64_t expected_size) {
  const bool ok = cert.verdict == Verdict::verified_exhaustive && set.size() == expected_size &&
                  set.size() >= set.size_bound();
  return {"|A|=" + std::to_string(set.size()) + " N=" + std::to_string(set.N()) + " " +
              std::string(to_string(cert.verdict)) + " (" + std::to_string(cert.checked) + " checks)",
          ok};
}

}  // namespace

std::string render_row(const ReproduceRow& row) {
  std::ostringstream out;
  out << (row.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(44) << row.name << " expected "
      << row.expected << " | observed " << row.observed << " [" << fixed(row.seconds, 2) << "s]";
  return out.str();
}

std::vector<ReproduceRow> run_reproduce(const ReproduceOptions& options) {
  Recorder rec(options);
  const VerifyOptions verify{options.threads};
  const ResidueSet r1(65, roth65_first_set());
  const ResidueSet r2(65, roth65_second_set());

  rec.row("mod-65 chain (full, R1, R2, R1, ...) valid", "valid", [&]() -> Outcome {
    auto chain = ChainSpec::power(65, 2, {ResidueSet::full(65)}, {r1, r2});
    const auto v = validate_chain(chain);
    return {v ? "valid" : "fails at " + std::to_string(*v.failing_index), v.ok};
  });

  rec.row("non-linear Roth exponent m=65 k=2", "0.7685 +- 1e-4", [&]() -> Outcome {
    const std::vector<std::int64_t> pre{65}, period{7, 17};
    const double g = gamma_chain(65, 2, pre, period);
    return {fixed(g), std::abs(g - 0.7685) <= 1e-4};
  });
  rec.row("x^2+5x^3 exponent m=5 |R|=2", "0.8102 +- 1e-4", [&]() -> Outcome {
    const double g = gamma_inhom(5, 3, 2);
    return {fixed(g), std::abs(g - 0.8102) <= 1e-4};
  });
  rec.row("x1^2+x2^2 exponent m=3 |R'|=3", "0.5", [&]() -> Outcome {
    const double g = gamma_multivariate(3, 2, 3);
    return {fixed(g, 12), g == 0.5};
  });
  rec.row("sum of seven 4th powers exponent m=2 |R'|=2", "0.25", [&]() -> Outcome {
    const double g = gamma_multivariate(2, 4, 2);
    return {fixed(g, 12), g == 0.25};
  });
  rec.row("k-th power exponent m=5 k=2 |R|=2", "equals period-1 chain", [&]() -> Outcome {
    const std::vector<std::int64_t> pre{5}, period{2};
    const double a = gamma_ruzsa(5, 2, 2), b = gamma_chain(5, 2, pre, period);
    return {fixed(a, 12) + " vs " + fixed(b, 12), std::abs(a - b) < 1e-12};
  });

  rec.row("non-linear Roth build m=5 Y=7", "|A|=2000 verified", [&]() -> Outcome {
    auto chain = ChainSpec::power(5, 2, {ResidueSet::full(5)}, {ResidueSet(5, {0, 2})});
    validate_chain(chain);
    const auto set = build_nonlinear_roth(chain, 7);
    return verified_build(set, verify_nonlinear_roth(set.elements(), 2, set.N(), verify), 2000);
  });
  rec.row("x^2+5x^3 build m=5 Y=9", "|A|=50000 verified", [&]() -> Outcome {
    const auto f = parse_univariate("x^2+5x^3");
    const auto set = build_inhom_poly(5, f, ResidueSet(5, {0, 2}), 9);
    const auto values = enumerate_poly_values(f, set.N());
    return verified_build(set, verify_difference_avoidance(set.elements(), values, verify), 50000);
  });
  rec.row("square build m=5 Y=8", "|A|=10000 verified", [&]() -> Outcome {
    const auto set = build_ruzsa(5, 2, ResidueSet(5, {0, 2}), 8);
    const auto values = enumerate_poly_values(UnivariatePolynomial::monomial(2), set.N());
    return verified_build(set, verify_difference_avoidance(set.elements(), values, verify), 10000);
  });
  rec.row("x1^2+x2^2 build m=3 Y=6", "|A|=729 verified, ln|A|/lnN=0.5", [&]() -> Outcome {
    const auto set = build_multivariate(parse_form("x1^2+x2^2"), 3, 2, ResidueSet(9, {0, 3, 6}), 6);
    const auto values = marked_values(sums_of_two_squares_sieve(set.N()));
    auto [observed, ok] = verified_build(set, verify_difference_avoidance(set.elements(), values, verify), 729);
    const double e = std::log(static_cast<double>(set.size())) / std::log(static_cast<double>(set.N()));
    return {observed + " exponent " + fixed(e, 12), ok && std::abs(e - 0.5) < 1e-12};
  });
  rec.row("seven 4th powers build m=2 Y=5", "|A|=32 verified", [&]() -> Outcome {
    const auto set = build_multivariate(HomogeneousForm::diagonal(std::vector<std::int64_t>(7, 1), 4), 2, 4,
                                        ResidueSet(16, {0, 8}), 5);
    const auto values = marked_values(sums_of_k_powers_sieve(set.N(), 4, 7));
    return verified_build(set, verify_difference_avoidance(set.elements(), values, verify), 32);
  });

  for (const auto& [m, expected] : std::vector<std::pair<std::int64_t, std::size_t>>{{5, 2}, {9, 3}, {16, 6}, {25, 10}}) {
    rec.row("r_2(" + std::to_string(m) + ")", std::to_string(expected), [&, m = m, expected = expected]() -> Outcome {
      const auto search = r_k(m, 2);
      const auto exact = brute_force_r_k(m, 2);
      return {std::to_string(search.size) + " (brute force " + std::to_string(exact.size) + ")",
              search.optimal && search.size == expected && exact.size == expected};
    });
  }
  rec.row("r_2(16) vs 4 r_2(4)", "6 < 8", [&]() -> Outcome {
    const auto lhs = r_k(16, 2).size, rhs = 4 * r_k(4, 2).size;
    return {std::to_string(lhs) + " vs " + std::to_string(rhs), lhs == 6 && rhs == 8};
  });
  rec.row("clique search = brute force, m<=25, k=2,3", "all equal", [&]() -> Outcome {
    std::size_t checked = 0;
    for (std::int64_t m = 2; m <= 25; ++m) {
      for (const unsigned k : {2U, 3U}) {
        const auto search = r_k(m, k);
        if (!search.optimal || search.size != brute_force_r_k(m, k).size) {
          return {"mismatch at m=" + std::to_string(m) + " k=" + std::to_string(k), false};
        }
        ++checked;
      }
    }
    return {std::to_string(checked) + " pairs equal", true};
  });

  for (const auto& [p, k] : std::vector<std::pair<std::int64_t, unsigned>>{{3, 2}, {5, 2}, {2, 3}}) {
    rec.row("r_k(p^k) = p^(k-1) r_k(p), p=" + std::to_string(p) + " k=" + std::to_string(k), "equal",
            [&, p = p, k = k]() -> Outcome {
              const auto report = check_prop_51(p, k);
              return {std::to_string(report.lhs) + " = " + std::to_string(report.rhs), report.equal};
            });
  }
  rec.row("lifted R-sets, m in {3,5,6}, k=2", "r_2(m^2) >= m r_2(m)", [&]() -> Outcome {
    std::string observed;
    bool ok = true;
    for (const std::int64_t m : {3, 5, 6}) {
      const auto base = r_k(m, 2);
      const auto lifted = lift_r_set(base.witness, m, 2);
      const auto graph = build_difference_graph(m * m, power_residues(m * m, 2));
      std::vector<std::size_t> vertices(lifted.elements().begin(), lifted.elements().end());
      const auto full = r_k(m * m, 2);
      const bool row_ok = graph.graph().is_clique(vertices) && full.optimal &&
                          full.size >= static_cast<std::size_t>(m) * base.size &&
                          lifted.size() == static_cast<std::size_t>(m) * base.size;
      observed += "m=" + std::to_string(m) + ":" + std::to_string(full.size) + ">=" +
                  std::to_string(static_cast<std::size_t>(m) * base.size) + " ";
      ok = ok && row_ok;
    }
    return {observed, ok};
  });
  rec.row("k-th power residues stable under lifting", "constant over N=1..4", [&]() -> Outcome {
    std::size_t cases = 0;
    for (const std::int64_t p : {3, 5, 7, 11, 13}) {
      for (const unsigned k : {2U, 3U}) {
        if (k % p == 0) continue;
        for (std::int64_t w = 1; w < p * p; ++w) {
          if (w % p == 0) continue;
          const bool base = is_kth_power_residue_stable(w, p, k, 1);
          for (unsigned N = 2; N <= 4; ++N) {
            if (is_kth_power_residue_stable(w, p, k, N) != base) {
              return {"differs at w=" + std::to_string(w) + " p=" + std::to_string(p), false};
            }
          }
          ++cases;
        }
      }
    }
    return {std::to_string(cases) + " cases constant", true};
  });

  rec.row("R2 maximal for pinned R1, m=65", "|R2|=17, proved", [&]() -> Outcome {
    SearchOptions search;
    search.budget.time = std::chrono::seconds(10);
    const auto best = best_second_set(r1, 2, search);
    return {std::to_string(best.size) + (best.optimal ? " (exhausted)" : " (budget)"),
            best.size == 17 && best.optimal};
  });
  rec.row("chain-pair search m=65 k=2", "gamma >= 0.7685", [&]() -> Outcome {
    ChainPairOptions search;
    search.budget.time = options.chain_budget;
    search.threads = options.threads;
    const auto result = search_chain_pair(65, 2, search);
    return {"gamma=" + fixed(result.gamma) + " |R1|=" + std::to_string(result.first.size()) +
                " |R2|=" + std::to_string(result.second.size()) + (result.optimal ? " (complete)" : " (budget)"),
            result.gamma >= 0.7685};
  });

  return rec.take();
}

}  // namespace avoid
