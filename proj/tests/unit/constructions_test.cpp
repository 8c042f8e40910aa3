#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <random>

#include "avoid/chain.hpp"
#include "avoid/constructions.hpp"
#include "avoid/error.hpp"
#include "avoid/integer.hpp"
#include "avoid/reproduce.hpp"
#include "avoid/residue.hpp"
#include "avoid/verifiers.hpp"
#include "oracles.hpp"

using namespace avoid;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no avoid::Error thrown";
  return Errc::invalid_argument;
}

ChainSpec validated(ChainSpec chain) {
  EXPECT_TRUE(validate_chain(chain));
  return chain;
}

ChainSpec roth5() { return validated(ChainSpec::power(5, 2, {ResidueSet::full(5)}, {ResidueSet(5, {0, 2})})); }

void expect_in_range(const ConstructedSet& set) {
  const auto& A = set.elements();
  ASSERT_FALSE(A.empty());
  EXPECT_TRUE(std::is_sorted(A.begin(), A.end()));
  EXPECT_EQ(std::adjacent_find(A.begin(), A.end()), A.end());
  EXPECT_GE(A.front(), 1);
  EXPECT_LE(A.back(), set.N());
  EXPECT_EQ(static_cast<std::int64_t>(A.size()), set.size());
  EXPECT_GE(set.size(), set.size_bound());
  EXPECT_EQ(set.size_bound(), size_lower_bound(set.spec()));
}

std::set<std::int64_t> poly_values_naive(const UnivariatePolynomial& f, std::int64_t N) {
  std::set<std::int64_t> out;
  for (std::int64_t x = -2000; x <= 2000; ++x) {
    const auto v = f.evaluate(x);
    if (v >= 1 && v <= N) out.insert(static_cast<std::int64_t>(v));
  }
  return out;
}

}  // namespace

TEST(DigitClass, Examples) {
  EXPECT_EQ(digit_class(0, 2), 1U);
  EXPECT_EQ(digit_class(3, 2), 0U);
  EXPECT_EQ(digit_class(12, 2), 2U);
  EXPECT_EQ(digit_class(27, 3), 3U);
  EXPECT_EQ(digit_class(6, 3), 1U);
}

TEST(NonlinearRoth, SmallInstance) {
  const auto set = build_nonlinear_roth(roth5(), 3);
  expect_in_range(set);
  EXPECT_EQ(set.size(), 20);
  EXPECT_EQ(set.N(), 125);
  EXPECT_EQ(set.elements().back(), 73);
  EXPECT_EQ(set.size_bound(), 20);
  EXPECT_TRUE(oracle::roth_free(set.elements(), 2));
}

TEST(NonlinearRoth, Mod65ChainTwoDigits) {
  const auto chain = validated(ChainSpec::power(65, 2, {ResidueSet::full(65)},
                                                {ResidueSet(65, roth65_first_set()), ResidueSet(65, roth65_second_set())}));
  const auto set = build_nonlinear_roth(chain, 2);
  EXPECT_EQ(set.size(), 455);
  EXPECT_TRUE(oracle::roth_free(set.elements(), 2));
}

// A full set cannot sit in the periodic part: the next set's differences hit every power.
TEST(NonlinearRoth, FullPeriodicSetIsRejected) {
  for (const std::int64_t m : {2, 3, 7}) {
    auto chain = ChainSpec::power(m, 2, {}, {ResidueSet::full(m)});
    EXPECT_FALSE(validate_chain(chain)) << m;
  }
}

// With Y = 1 only the first digit is drawn from the full prefix set.
TEST(NonlinearRoth, FullPrefixSingleDigit) {
  const auto chain = validated(ChainSpec::power(5, 2, {ResidueSet::full(5)}, {ResidueSet(5, {0, 2})}));
  const auto set = build_nonlinear_roth(chain, 1);
  EXPECT_TRUE(oracle::roth_free(set.elements(), 2));
  for (const auto n : set.elements()) EXPECT_TRUE(n >= 1 && n <= 5);
}

TEST(NonlinearRoth, Errors) {
  const auto square = validated(ChainSpec::power(4, 2, {}, {ResidueSet(4, {0})}));
  EXPECT_EQ(code_of([&] { build_nonlinear_roth(square, 3); }), Errc::not_square_free);
  const auto unvalidated = ChainSpec::power(5, 2, {ResidueSet::full(5)}, {ResidueSet(5, {0, 2})});
  EXPECT_EQ(code_of([&] { build_nonlinear_roth(unvalidated, 3); }), Errc::unvalidated_chain);
  EXPECT_EQ(code_of([&] { build_nonlinear_roth(roth5(), 40); }), Errc::digit_length_too_large);
}

// Random valid chains over small moduli give Roth-free sets.
TEST(NonlinearRoth, RandomChainsAreRothFree) {
  std::mt19937_64 rng(31);
  int built = 0;
  for (int trial = 0; trial < 300 && built < 25; ++trial) {
    static constexpr std::array<std::int64_t, 6> moduli{3, 5, 6, 7, 10, 11};
    const std::int64_t m = moduli[std::uniform_int_distribution<std::size_t>(0, moduli.size() - 1)(rng)];
    const unsigned k = std::uniform_int_distribution<unsigned>(2, 3)(rng);
    auto a = oracle::random_subset(rng, 0, m - 1, 0.3), b = oracle::random_subset(rng, 0, m - 1, 0.4);
    a.push_back(0);
    b.push_back(0);
    auto chain = ChainSpec::power(m, k, {ResidueSet::full(m)}, {ResidueSet(m, a), ResidueSet(m, b)});
    if (!validate_chain(chain)) continue;
    const unsigned Y = m <= 6 ? 4 : 3;
    const auto set = build_nonlinear_roth(chain, Y);
    expect_in_range(set);
    EXPECT_TRUE(oracle::roth_free(set.elements(), k)) << chain.to_string();
    ++built;
  }
  EXPECT_GE(built, 10);
}

TEST(Inhom, QuadraticCubicInstanceDigits) {
  const auto f = parse_univariate("x^2+5x^3");
  const auto set = build_inhom_poly(5, f, ResidueSet(5, {0, 2}), 9);
  EXPECT_EQ(set.N(), 1953125);
  EXPECT_EQ(set.spec().cutoff(), (std::pair<std::int64_t, std::int64_t>{20, 3}));
  EXPECT_EQ(set.size(), 50000);
  expect_in_range(set);
  // Constrained positions are 0, 2, 4, 6 (k | i and i < 20/3).
  for (const auto a : set.elements()) {
    std::int64_t x = a - 1;
    for (int i = 0; i < 9; ++i, x /= 5) {
      const bool constrained = i % 2 == 0 && i <= 6;
      if (constrained) ASSERT_TRUE(x % 5 == 0 || x % 5 == 2) << a;
    }
  }
}

TEST(Inhom, PowerCaseCountsAndVerifies) {
  const auto set = build_inhom_poly(5, parse_univariate("x^2"), ResidueSet(5, {0, 2}), 4);
  EXPECT_EQ(set.size(), 100);
  EXPECT_EQ(set.N(), 625);
  EXPECT_EQ(set.size_bound(), 100);
  EXPECT_EQ(set.spec().variant, Variant::ruzsa_power);
  EXPECT_TRUE(oracle::pairwise_avoids(set.elements(), poly_values_naive(parse_univariate("x^2"), 625)));
  EXPECT_EQ(build_ruzsa(5, 2, ResidueSet(5, {0, 2}), 4).elements(), set.elements());
}

TEST(Inhom, SingletonResidueAlwaysValid) {
  for (const char* text : {"x^2+5x^3", "x^2", "x^3+5x^4"}) {
    const auto f = parse_univariate(text);
    const auto set = build_inhom_poly(5, f, ResidueSet(5, {0}), 5);
    EXPECT_TRUE(oracle::pairwise_avoids(set.elements(), poly_values_naive(f, set.N()))) << text;
  }
}

TEST(Inhom, HypothesisErrors) {
  const ResidueSet R(5, {0, 2});
  EXPECT_EQ(code_of([&] { build_inhom_poly(2, parse_univariate("x^2+x^3"), ResidueSet(2, {0}), 4); }),
            Errc::root_condition_failed);
  EXPECT_EQ(code_of([&] { build_inhom_poly(3, parse_univariate("3x^2+x^3"), ResidueSet(3, {0}), 4); }),
            Errc::coefficient_not_coprime);
  EXPECT_EQ(code_of([&] { build_inhom_poly(5, parse_univariate("x^2"), ResidueSet(5, {0, 1}), 4); }),
            Errc::not_a_clique);
  EXPECT_EQ(code_of([&] { build_inhom_poly(5, parse_univariate("x+x^2"), R, 4); }), Errc::invalid_argument);
  EXPECT_EQ(code_of([&] { build_inhom_poly(5, parse_univariate("x^2"), ResidueSet(7, {0}), 4); }),
            Errc::modulus_mismatch);
  EXPECT_EQ(code_of([&] { build_inhom_poly(12, parse_univariate("x^2"), ResidueSet(12, {0}), 2); }),
            Errc::not_square_free);
}

// x^2 + 35x^3 + x^4 only has its leading term dominate for |x| >= 71, so
// modulo 7 the high digits need Y >= 8; Y <= 2 has no high digits at all.
TEST(Inhom, DigitThreshold) {
  const auto f = parse_univariate("x^2+35x^3+x^4");
  ASSERT_TRUE(root_condition_univariate(f, 7));
  EXPECT_EQ(inhom_min_digits(7, f), 8U);
  EXPECT_EQ(inhom_min_digits(5, parse_univariate("x^2+5x^3")), 1U);
  EXPECT_TRUE(inhom_digits_admissible(7, f, 2));
  for (unsigned Y = 3; Y < 8; ++Y) {
    EXPECT_FALSE(inhom_digits_admissible(7, f, Y));
    EXPECT_EQ(code_of([&] { build_inhom_poly(7, f, ResidueSet(7, {0}), Y); }), Errc::digit_length_too_small);
  }
  EXPECT_TRUE(inhom_digits_admissible(7, f, 8));
  // -1 is not a square mod 7, so r_2(7) = 1.
  const auto small = build_inhom_poly(7, f, ResidueSet(7, {0}), 2);
  EXPECT_TRUE(oracle::pairwise_avoids(small.elements(), poly_values_naive(f, small.N())));
}

// Negative leading coefficients and a_k != 1 (R is scaled by a_k).
TEST(Inhom, ScaledAndSignedPolynomials) {
  std::mt19937_64 rng(8);
  int built = 0;
  for (int trial = 0; trial < 400 && built < 30; ++trial) {
    const std::int64_t m = std::vector<std::int64_t>{3, 5, 6, 7, 10, 11}[rng() % 6];
    const unsigned k = 2 + static_cast<unsigned>(rng() % 2);
    const unsigned d = k + static_cast<unsigned>(rng() % 2);
    std::uniform_int_distribution<std::int64_t> coeff(-6, 6);
    std::vector<UnivariatePolynomial::Term> terms{{k, coeff(rng)}};
    if (terms[0].coefficient == 0) terms[0].coefficient = 1;
    if (d > k) terms.push_back({d, coeff(rng) == 0 ? 1 : coeff(rng)});
    const UnivariatePolynomial f(terms);
    if (f.low_degree() != k) continue;
    std::vector<std::int64_t> r = oracle::random_subset(rng, 1, m - 1, 0.4);
    r.push_back(0);
    try {
      const auto set = build_inhom_poly(m, f, ResidueSet(m, r), 5);
      if (set.N() > 200'000) continue;
      expect_in_range(set);
      EXPECT_TRUE(oracle::pairwise_avoids(set.elements(), poly_values_naive(f, set.N()))) << f.to_string() << " m=" << m;
      ++built;
    } catch (const Error& e) {
      EXPECT_NE(e.code(), Errc::overflow);
    }
  }
  EXPECT_GE(built, 10);
}

TEST(Multivariate, Examples) {
  const auto F = parse_form("x1^2+x2^2");
  const auto set = build_multivariate(F, 3, 2, ResidueSet(9, {0, 3, 6}), 2);
  EXPECT_EQ(set.elements(), (std::vector<std::int64_t>{1, 4, 7, 28, 31, 34, 55, 58, 61}));
  const auto fourth = build_multivariate(HomogeneousForm::diagonal(std::vector<std::int64_t>(7, 1), 4), 2, 4,
                                         ResidueSet(16, {0, 8}), 3);
  EXPECT_EQ(fourth.size(), 8);
  EXPECT_EQ(fourth.N(), 4096);
  expect_in_range(fourth);
  EXPECT_EQ(build_multivariate(F, 3, 2, ResidueSet(9, {0}), 4).elements(), (std::vector<std::int64_t>{1}));
  ConstructionSpec spec;
  spec.variant = Variant::multivariate_homogeneous;
  spec.residues = ResidueSet(16, {0, 8});
  spec.digits = 5;
  EXPECT_EQ(size_lower_bound(spec), 32);
}

TEST(Multivariate, Errors) {
  const auto F = parse_form("x1^2+x2^2");
  EXPECT_EQ(code_of([&] { build_multivariate(F, 5, 2, ResidueSet(25, {0, 5}), 2); }), Errc::root_condition_failed);
  EXPECT_EQ(code_of([&] { build_multivariate(F, 3, 2, ResidueSet(9, {0, 1}), 2); }), Errc::forbidden_difference);
  EXPECT_EQ(code_of([&] { build_multivariate(F, 3, 2, ResidueSet(3, {0}), 2); }), Errc::modulus_mismatch);
  EXPECT_EQ(code_of([&] { build_multivariate(F, 3, 3, ResidueSet(27, {0}), 2); }), Errc::invalid_argument);
}

TEST(Multivariate, SquaresAvoidSumsOfTwoSquares) {
  for (const std::int64_t p : {3, 7}) {
    std::vector<std::int64_t> rp;
    for (std::int64_t i = 0; i < p; ++i) rp.push_back(i * p);
    const auto set = build_multivariate(parse_form("x1^2+x2^2"), p, 2, ResidueSet(p * p, rp), p == 3 ? 4 : 2);
    std::set<std::int64_t> sums;
    for (std::int64_t a = 0; a * a <= set.N(); ++a) {
      for (std::int64_t b = 0; a * a + b * b <= set.N(); ++b) {
        if (a || b) sums.insert(a * a + b * b);
      }
    }
    EXPECT_TRUE(oracle::pairwise_avoids(set.elements(), sums)) << p;
  }
}

// The Y-digit set is the low-digit section of the (Y+1)-digit set.
TEST(Multivariate, MonotoneInDigits) {
  const auto F = parse_form("x1^2+x2^2");
  const ResidueSet rp(9, {0, 3, 6});
  for (unsigned Y = 1; Y < 5; ++Y) {
    const auto small = build_multivariate(F, 3, 2, rp, Y);
    const auto large = build_multivariate(F, 3, 2, rp, Y + 1);
    std::set<std::int64_t> section;
    for (const auto a : large.elements()) section.insert((a - 1) % small.N() + 1);
    EXPECT_EQ(std::vector<std::int64_t>(section.begin(), section.end()), small.elements());
  }
  for (unsigned Y = 1; Y < 6; ++Y) {
    const auto small = build_ruzsa(5, 2, ResidueSet(5, {0, 2}), Y);
    const auto large = build_ruzsa(5, 2, ResidueSet(5, {0, 2}), Y + 1);
    std::set<std::int64_t> section;
    for (const auto a : large.elements()) section.insert((a - 1) % small.N() + 1);
    EXPECT_TRUE(std::includes(section.begin(), section.end(), small.elements().begin(), small.elements().end()));
  }
}

TEST(Greedy, Examples) {
  EXPECT_EQ(build_greedy(10, {1, 4, 9}).elements(), (std::vector<std::int64_t>{1, 3, 6, 8}));
  EXPECT_EQ(build_greedy(5, {}).elements(), (std::vector<std::int64_t>{1, 2, 3, 4, 5}));
  EXPECT_EQ(build_greedy(6, {1, 2, 3, 4, 5}).elements(), (std::vector<std::int64_t>{1}));
  EXPECT_THROW(build_greedy(5, {6}), Error);
  EXPECT_THROW(build_greedy(0, {}), Error);
}

TEST(Greedy, SizeBoundAndAvoidance) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t N = std::uniform_int_distribution<std::int64_t>(1, 400)(rng);
    const auto forbidden = oracle::random_subset(rng, 1, N, 0.05);
    const auto set = build_greedy(N, forbidden);
    expect_in_range(set);
    const auto bound = (N + static_cast<std::int64_t>(forbidden.size())) / (static_cast<std::int64_t>(forbidden.size()) + 1);
    EXPECT_GE(set.size(), bound);
    EXPECT_TRUE(oracle::pairwise_avoids(set.elements(), {forbidden.begin(), forbidden.end()}));
  }
}

TEST(SizeLowerBound, Examples) {
  EXPECT_EQ(build_nonlinear_roth(roth5(), 3).size_bound(), 20);
  ConstructionSpec spec;
  spec.variant = Variant::inhomogeneous_poly;
  spec.m = 5;
  spec.k = 2;
  spec.f = parse_univariate("x^2");
  spec.residues = ResidueSet(5, {0, 2});
  spec.digits = 4;
  EXPECT_EQ(size_lower_bound(spec), 100);
}

TEST(ConstructedSet, LazyEnumerationMatchesElements) {
  const auto set = build_multivariate(parse_form("x1^2+x2^2"), 3, 2, ResidueSet(9, {0, 3, 6}), 4);
  std::vector<std::int64_t> seen;
  set.for_each([&](std::int64_t x) {
    seen.push_back(x);
    return true;
  });
  EXPECT_EQ(seen, set.elements());
  std::size_t visits = 0;
  set.for_each([&](std::int64_t) { return ++visits < 5; });
  EXPECT_EQ(visits, 5U);
}

TEST(ConstructedSet, AboveCapIsCountedNotStored) {
  // 2^8 * 5^9 elements of a 5^17 range: too many to materialize.
  const auto set = build_ruzsa(5, 2, ResidueSet(5, {0, 2}), 17);
  EXPECT_FALSE(set.materialized());
  EXPECT_TRUE(set.elements().empty());
  EXPECT_EQ(set.size(), oracle::ipow(2, 9) * oracle::ipow(5, 8));
  std::int64_t previous = 0, count = 0;
  set.for_each([&](std::int64_t x) {
    EXPECT_GT(x, previous);
    previous = x;
    return ++count < 1000;
  });
  EXPECT_EQ(count, 1000);
}

TEST(ConstructionSpec, RendersCanonically) {
  const auto set = build_inhom_poly(5, parse_univariate("x^2+5x^3"), ResidueSet(5, {0, 2}), 9);
  EXPECT_EQ(set.spec().to_string(), "variant=inhom m=5 k=2 f=x^2+5x^3 R=m=5:{0,2} Y=9 X=20/3 N=1953125");
  EXPECT_EQ(parse_variant("multivariate"), Variant::multivariate_homogeneous);
  EXPECT_THROW(parse_variant("nope"), Error);
}
