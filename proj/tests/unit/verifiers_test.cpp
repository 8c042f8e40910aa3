#include <gtest/gtest.h>

#include <random>

#include "avoid/chain.hpp"
#include "avoid/constructions.hpp"
#include "avoid/error.hpp"
#include "avoid/search.hpp"
#include "avoid/verifiers.hpp"
#include "oracles.hpp"

using namespace avoid;

namespace {

using Values = std::vector<std::int64_t>;

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no avoid::Error thrown";
  return Errc::invalid_argument;
}

Values marked(const std::vector<bool>& t) { return marked_values(t); }

}  // namespace

TEST(PolyValues, Examples) {
  EXPECT_EQ(enumerate_poly_values(parse_univariate("x^2"), 20), (Values{1, 4, 9, 16}));
  EXPECT_EQ(enumerate_poly_values(parse_univariate("x^2+5x^3"), 100), (Values{6, 44}));
  EXPECT_EQ(enumerate_poly_values(parse_univariate("x^3"), 30), (Values{1, 8, 27}));
  // Negative arguments count: -x^3 is positive for x < 0.
  EXPECT_EQ(enumerate_poly_values(parse_univariate("-x^3"), 30), (Values{1, 8, 27}));
  EXPECT_EQ(enumerate_poly_values(parse_univariate("x^2-x^3"), 20), (Values{2, 12}));
}

TEST(PolyValues, MatchScan) {
  std::mt19937 rng(14);
  std::uniform_int_distribution<int> coeff(-9, 9), degree(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<UnivariatePolynomial::Term> terms;
    for (unsigned e = 0; e <= static_cast<unsigned>(degree(rng)); ++e) terms.push_back({e, coeff(rng)});
    try {
      const UnivariatePolynomial f(terms);
      if (f.degree() == 0) continue;
      const std::int64_t N = 5000;
      std::set<std::int64_t> expected;
      for (std::int64_t x = -6000; x <= 6000; ++x) {
        const auto v = f.evaluate(x);
        if (v >= 1 && v <= N) expected.insert(static_cast<std::int64_t>(v));
      }
      EXPECT_EQ(enumerate_poly_values(f, N), Values(expected.begin(), expected.end())) << f.to_string();
    } catch (const Error&) {
    }
  }
}

TEST(DifferenceAvoidance, Examples) {
  const Values greedy{1, 3, 6, 8}, squares{1, 4, 9};
  EXPECT_EQ(verify_difference_avoidance(greedy, squares).verdict, Verdict::verified_exhaustive);
  const Values pair{1, 2}, one{1};
  const auto refuted = verify_difference_avoidance(pair, one);
  EXPECT_EQ(refuted.verdict, Verdict::refuted);
  EXPECT_EQ(refuted.witness, (Values{1, 1}));
  EXPECT_TRUE(replay_difference_witness(pair, one, refuted));
}

TEST(DifferenceAvoidance, AgreesWithPairwiseScan) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    const auto A = oracle::random_subset(rng, 1, 300, 0.05);
    const auto V = oracle::random_subset(rng, 1, 300, 0.03);
    if (A.empty()) continue;
    for (const unsigned threads : {1U, 3U}) {
      const auto cert = verify_difference_avoidance(A, V, {threads});
      const bool clean = oracle::pairwise_avoids(A, {V.begin(), V.end()});
      EXPECT_EQ(cert.verdict == Verdict::verified_exhaustive, clean);
      if (!clean) {
        ASSERT_EQ(cert.verdict, Verdict::refuted);
        EXPECT_TRUE(replay_difference_witness(A, V, cert));
      }
      EXPECT_EQ(cert.set_digest, set_digest(A));
    }
  }
}

TEST(DifferenceAvoidance, SampledNeverClaimsExhaustive) {
  const Values greedy{1, 3, 6, 8}, squares{1, 4, 9};
  const auto cert = verify_difference_sampled(greedy, squares, 1000);
  EXPECT_EQ(cert.verdict, Verdict::verified_sampled);
  EXPECT_EQ(cert.checked, 1000U);
  const Values dense{1, 2, 3, 4, 5, 6, 7, 8}, one{1};
  EXPECT_EQ(verify_difference_sampled(dense, one, 1000).verdict, Verdict::refuted);
}

TEST(NonlinearRoth, Examples) {
  auto chain = ChainSpec::power(5, 2, {ResidueSet::full(5)}, {ResidueSet(5, {0, 2})});
  validate_chain(chain);
  const auto set = build_nonlinear_roth(chain, 3);
  EXPECT_EQ(verify_nonlinear_roth(set.elements(), 2, 125).verdict, Verdict::verified_exhaustive);
  const Values bad{1, 2, 5};
  const auto refuted = verify_nonlinear_roth(bad, 2, 5);
  EXPECT_EQ(refuted.verdict, Verdict::refuted);
  EXPECT_EQ(refuted.witness, (Values{1, 1}));
  EXPECT_TRUE(replay_roth_witness(bad, 2, refuted));
  const Values single{1};
  EXPECT_EQ(verify_nonlinear_roth(single, 3, 10).verdict, Verdict::verified_exhaustive);
}

TEST(NonlinearRoth, AgreesWithTripleScan) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 300; ++trial) {
    const auto A = oracle::random_subset(rng, 1, 200, 0.04);
    if (A.empty()) continue;
    const unsigned k = 2 + static_cast<unsigned>(rng() % 2);
    const auto cert = verify_nonlinear_roth(A, k, 200, {2});
    EXPECT_EQ(cert.verdict == Verdict::verified_exhaustive, oracle::roth_free(A, k));
    if (cert.verdict == Verdict::refuted) EXPECT_TRUE(replay_roth_witness(A, k, cert));
  }
}

// Negative y: x = 5, y = -2 gives {5, 3, 9} for k = 2.
TEST(NonlinearRoth, NegativeStep) {
  const Values A{3, 5, 9};
  const auto cert = verify_nonlinear_roth(A, 2, 10);
  EXPECT_EQ(cert.verdict, Verdict::refuted);
  EXPECT_TRUE(replay_roth_witness(A, 2, cert));
}

TEST(Sieves, Examples) {
  EXPECT_EQ(marked(sums_of_two_squares_sieve(10)), (Values{1, 2, 4, 5, 8, 9, 10}));
  EXPECT_EQ(marked(sums_of_two_squares_sieve(3)), (Values{1, 2}));
  EXPECT_FALSE(sums_of_two_squares_sieve(10)[0]);
  const auto fourth = sums_of_k_powers_sieve(50, 4, 7);
  EXPECT_TRUE(fourth[7]);
  EXPECT_TRUE(fourth[16]);
  EXPECT_FALSE(fourth[8]);
  EXPECT_EQ(marked(sums_of_k_powers_sieve(100, 3, 1)), (Values{1, 8, 27, 64}));
  EXPECT_EQ(marked(sums_of_k_powers_sieve(5, 2, 2)), (Values{1, 2, 4, 5}));
}

TEST(Sieves, TwoSquaresConsistency) {
  const std::int64_t N = 100'000;
  EXPECT_EQ(sums_of_k_powers_sieve(N, 2, 2), sums_of_two_squares_sieve(N));
}

TEST(Sieves, MatchDirectEnumeration) {
  for (const unsigned k : {2U, 3U, 4U}) {
    for (const unsigned s : {1U, 2U, 3U}) {
      const std::int64_t N = 3000;
      std::set<std::int64_t> reach{0};
      for (unsigned t = 0; t < s; ++t) {
        std::set<std::int64_t> next = reach;
        for (const auto r : reach) {
          for (std::int64_t x = 1; r + oracle::ipow(x, k) <= N; ++x) next.insert(r + oracle::ipow(x, k));
        }
        reach = next;
      }
      reach.erase(0);
      EXPECT_EQ(marked(sums_of_k_powers_sieve(N, k, s)), Values(reach.begin(), reach.end())) << k << " " << s;
    }
  }
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_r_k(5, 2).size, 2U);
  EXPECT_EQ(brute_force_r_k(3, 2).size, 1U);
  EXPECT_EQ(brute_force_r_k(16, 2).size, 6U);
  const auto r = brute_force_r_k(16, 2);
  EXPECT_TRUE(oracle::avoids_mod(r.witness, oracle::powers_mod(16, 2), 16));
  EXPECT_THROW(brute_force_r_k(41, 2), Error);
}

TEST(BruteForce, AgreesWithPlainSubsets) {
  for (std::int64_t m = 2; m <= 18; ++m) {
    for (const unsigned k : {2U, 3U}) EXPECT_EQ(brute_force_r_k(m, k).size, oracle::subset_r_k(m, k)) << m << " " << k;
  }
}

TEST(Prop51, Examples) {
  const auto a = check_prop_51(3, 2);
  EXPECT_EQ(a.lhs, 3U);
  EXPECT_EQ(a.rhs, 3U);
  EXPECT_TRUE(a.equal);
  const auto b = check_prop_51(5, 2);
  EXPECT_EQ(b.lhs, 10U);
  EXPECT_TRUE(b.equal);
  EXPECT_TRUE(check_prop_51(2, 3).equal);
  EXPECT_TRUE(check_prop_51(7, 2).equal);
  EXPECT_EQ(code_of([] { check_prop_51(2, 2); }), Errc::divides_power);
  EXPECT_EQ(code_of([] { check_prop_51(4, 3); }), Errc::not_prime);
}

TEST(Digest, StableAndSensitive) {
  const Values a{1, 2, 3}, b{1, 2, 4};
  EXPECT_EQ(set_digest(a), set_digest(a));
  EXPECT_NE(set_digest(a), set_digest(b));
  EXPECT_EQ(set_digest(a).size(), 16U);
}

TEST(Verdict, NamesRoundTrip) {
  for (const auto v : {Verdict::verified_exhaustive, Verdict::verified_sampled, Verdict::refuted}) {
    EXPECT_EQ(parse_verdict(to_string(v)), v);
  }
  EXPECT_THROW(parse_verdict("maybe"), Error);
}
