#include <gtest/gtest.h>

#include <random>
#include <set>

#include "avoid/error.hpp"
#include "avoid/integer.hpp"
#include "avoid/residue.hpp"
#include "oracles.hpp"

using namespace avoid;

namespace {

ResidueSet rs(std::int64_t m, std::vector<std::int64_t> xs) { return ResidueSet(m, std::move(xs)); }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no avoid::Error thrown";
  return Errc::invalid_argument;
}

}  // namespace

TEST(PowerResidues, Examples) {
  EXPECT_EQ(power_residues(5, 2), rs(5, {0, 1, 4}));
  EXPECT_EQ(power_residues(16, 4), rs(16, {0, 1}));
  EXPECT_EQ(power_residues(7, 1), ResidueSet::full(7));
}

TEST(PowerResidues, MatchNaiveEnumeration) {
  for (std::int64_t m = 2; m <= 60; ++m) {
    for (unsigned k = 1; k <= 5; ++k) {
      const auto expected = oracle::powers_mod(m, k);
      EXPECT_EQ(power_residues(m, k), rs(m, {expected.begin(), expected.end()})) << m << " " << k;
    }
  }
}

TEST(PolyImage, Examples) {
  EXPECT_EQ(poly_image_mod(parse_univariate("x^2+5x^3"), 5), rs(5, {0, 1, 4}));
  EXPECT_EQ(poly_image_mod(parse_univariate("x^2"), 5), rs(5, {0, 1, 4}));
  EXPECT_EQ(poly_image_mod(parse_univariate("x^2+1"), 3), rs(3, {1, 2}));
}

// x^k + m g(x) has the same image as x^k modulo m.
TEST(PolyImage, MultiplesOfModulusVanish) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-4, 4), exponent(0, 6);
  for (const std::int64_t m : {5, 6, 7, 10, 13, 15}) {
    for (const unsigned k : {2U, 3U}) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<UnivariatePolynomial::Term> terms{{k, 1}};
        for (int i = 0; i < 3; ++i) terms.push_back({static_cast<unsigned>(exponent(rng)), m * coeff(rng)});
        EXPECT_EQ(poly_image_mod(UnivariatePolynomial(terms), m), power_residues(m, k));
      }
    }
  }
}

TEST(RootCondition, UnivariateExamples) {
  EXPECT_TRUE(root_condition_univariate(parse_univariate("x^2+5x^3"), 5));
  EXPECT_FALSE(root_condition_univariate(parse_univariate("x^2+x"), 2));
  EXPECT_TRUE(root_condition_univariate(parse_univariate("x^2"), 15));
  EXPECT_EQ(code_of([] { root_condition_univariate(parse_univariate("x^2"), 12); }), Errc::not_square_free);
}

TEST(RootCondition, PowersOnSquareFreeModuli) {
  for (std::int64_t m = 2; m <= 100; ++m) {
    if (!is_square_free(m)) continue;
    for (const unsigned k : {2U, 3U, 4U}) EXPECT_TRUE(root_condition_univariate(UnivariatePolynomial::monomial(k), m));
  }
}

TEST(RootCondition, FormExamples) {
  EXPECT_TRUE(root_condition_form(parse_form("x1^2+x2^2"), 3, 2));
  EXPECT_FALSE(root_condition_form(parse_form("x1^2+x2^2"), 5, 2));
  EXPECT_TRUE(root_condition_form(HomogeneousForm::diagonal(std::vector<std::int64_t>(7, 1), 4), 2, 4));
  EXPECT_EQ(code_of([] { root_condition_form(parse_form("x1^2+x2^2"), 3, 3); }), Errc::invalid_argument);
}

TEST(RootCondition, FormDiagonalMatchesEnumeration) {
  // x1^2 + x1 x2 + x2^2 is not diagonal, so it takes the enumeration path.
  EXPECT_TRUE(root_condition_form(parse_form("x1^2+x1x2+x2^2"), 2, 2));
  EXPECT_FALSE(root_condition_form(parse_form("x1^2+x1x2+x2^2"), 7, 2));
  EXPECT_EQ(code_of([] { root_condition_form(parse_form("x1^2+x1x2+x2^2+x3^2+x4^2"), 100, 2, 1000); }),
            Errc::cost_exceeded);
}

TEST(FormImage, Examples) {
  EXPECT_EQ(form_image_mod(parse_form("x1^2+x2^2"), 9), rs(9, {0, 1, 2, 4, 5, 7, 8}));
  EXPECT_EQ(form_image_mod(parse_form("x1^2+x2^2"), 2), rs(2, {0, 1}));
  EXPECT_EQ(form_image_mod(HomogeneousForm::diagonal(std::vector<std::int64_t>(7, 1), 4), 16),
            rs(16, {0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST(FormImage, FastPathMatchesEnumeration) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(-3, 3), arity(1, 3), degree(2, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(arity(rng)));
    for (auto& x : c) x = coeff(rng);
    c.front() = c.front() == 0 ? 1 : c.front();
    const auto F = HomogeneousForm::diagonal(c, static_cast<unsigned>(degree(rng)));
    for (const std::int64_t M : {2, 4, 8, 9, 12, 16, 25}) {
      EXPECT_EQ(form_image_mod(F, M), form_image_mod_enumerate(F, M)) << F.to_string() << " mod " << M;
    }
  }
}

// Root condition on the enumeration path agrees with a direct scan.
TEST(RootCondition, FormMatchesDirectScan) {
  for (const std::int64_t m : {2, 3, 5, 7}) {
    for (const auto* text : {"x1^2+x2^2", "x1^2+2x2^2", "x1^2-3x2^2", "x1^2+x1x2+x2^2"}) {
      const auto F = parse_form(text);
      const std::int64_t M = m * m;
      bool ok = true;
      for (std::int64_t a = 0; a < M; ++a) {
        for (std::int64_t b = 0; b < M; ++b) {
          const std::vector<std::int64_t> x{a, b};
          if (F.evaluate_mod(x, M) == 0 && (a % m || b % m)) ok = false;
        }
      }
      EXPECT_EQ(root_condition_form(F, m, 2), ok) << text << " m=" << m;
    }
  }
}

TEST(DivisibilityLift, Examples) {
  EXPECT_TRUE(divisibility_lift_check(parse_univariate("x^2+5x^3"), 5, 2, 10'000));
  EXPECT_TRUE(divisibility_lift_check(parse_univariate("x^2"), 5, 3, 10'000));
  EXPECT_EQ(code_of([] { divisibility_lift_check(parse_univariate("x^2+x"), 2, 1, 100); }), Errc::root_condition_failed);
}

TEST(DivisibilityLift, HoldsForAllSmallJ) {
  for (unsigned j = 1; j <= 6; ++j) {
    EXPECT_TRUE(divisibility_lift_check(parse_univariate("x^2+5x^3"), 5, j, 20'000)) << j;
    EXPECT_TRUE(divisibility_lift_check(parse_univariate("x^3"), 6, j, 20'000)) << j;
  }
}

TEST(Hensel, Examples) {
  const auto f = parse_univariate("x^2-2");
  EXPECT_EQ(hensel_lift(f, 3, 7, 2), 10);
  EXPECT_EQ(hensel_lift(f, 3, 7, 1), 3);
  EXPECT_EQ(code_of([] { hensel_lift(parse_univariate("x^2-1"), 1, 2, 3); }), Errc::singular_root);
  EXPECT_EQ(code_of([&] { hensel_lift(f, 2, 7, 2); }), Errc::not_a_root);
  EXPECT_EQ(code_of([&] { hensel_lift(f, 3, 9, 2); }), Errc::not_prime);
}

// Lifted roots are roots, reduce to the start, and form a tower.
TEST(Hensel, TowerConsistency) {
  for (const std::int64_t p : {3, 5, 7, 11, 13}) {
    for (const std::int64_t c : {1, 2, 3, 5, 6}) {
      const UnivariatePolynomial f({{0, -c}, {2, 1}});
      for (std::int64_t a = 1; a < p; ++a) {
        if (f.evaluate_mod(a, p) != 0) continue;
        std::int64_t previous = a;
        for (unsigned N = 1; N <= 5; ++N) {
          const auto r = hensel_lift(f, a, p, N);
          const auto pN = pow_i64(p, N);
          EXPECT_EQ(f.evaluate_mod(r, pN), 0);
          EXPECT_EQ(r % pow_i64(p, N - 1), previous % pow_i64(p, N - 1));
          previous = r;
        }
      }
    }
  }
}

TEST(KthPowerStable, Examples) {
  EXPECT_TRUE(is_kth_power_residue_stable(2, 7, 2, 3));
  EXPECT_FALSE(is_kth_power_residue_stable(3, 7, 2, 1));
  EXPECT_TRUE(is_kth_power_residue_stable(1, 5, 2, 4));
  EXPECT_EQ(code_of([] { is_kth_power_residue_stable(2, 3, 3, 2); }), Errc::divides_power);
  EXPECT_EQ(code_of([] { is_kth_power_residue_stable(6, 3, 2, 2); }), Errc::divides_value);
}

// Constant over N, and equal to direct enumeration modulo p^N.
TEST(KthPowerStable, ConstantOverN) {
  for (const std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    for (const unsigned k : {2U, 3U, 4U, 5U}) {
      if (k % p == 0) continue;
      for (std::int64_t w = 1; w < p * p; ++w) {
        if (w % p == 0) continue;
        const bool base = is_kth_power_residue_stable(w, p, k, 1);
        for (unsigned N = 1; N <= 4; ++N) {
          EXPECT_EQ(is_kth_power_residue_stable(w, p, k, N), base) << w << " " << p << " " << k << " " << N;
          const auto pN = pow_i64(p, N);
          if (pN <= 3000) EXPECT_EQ(oracle::powers_mod(pN, k).count(w % pN) > 0, base);
        }
      }
    }
  }
}
