#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sawstrip/error.hpp"
#include "sawstrip/guesser.hpp"
#include "sawstrip/width2.hpp"

namespace sawstrip {
namespace {

using testing::ints;

// a_0..a_15 of the two-column strip, from the closed form.
const std::vector<BigInt> kWidthTwo = ints({1, 3, 6, 12, 20, 36, 58, 100, 160, 268, 430, 708, 1140, 1860, 3002, 4876});

GuessResult fit_of(const FitOutcome& o) {
  EXPECT_TRUE(fitted(o)) << (fitted(o) ? "" : std::get<NoFit>(o).reason);
  return std::get<GuessResult>(o);
}

TEST(WidthTwoTerms, MatchClosedForm) {
  for (unsigned n = 0; n < kWidthTwo.size(); ++n) EXPECT_EQ(kWidthTwo[n], width2::closed_form_a(n));
}

TEST(FitRational, Geometric) {
  const auto o = fit_rational(ints({1, 1, 1, 1, 1}), 0, 1, 1);
  EXPECT_EQ(fit_of(o).gf, RatFun(Poly{1}, Poly{1, -1}));
}

TEST(FitRational, Fibonacci) {
  const auto o = fit_rational(ints({0, 1, 1, 2, 3, 5, 8, 13, 21}), 1, 2, 2);
  const auto& g = fit_of(o);
  EXPECT_EQ(g.gf, RatFun(Poly{0, 1}, Poly{1, -1, -1}));
  EXPECT_EQ(g.terms_used, 7U);
  EXPECT_EQ(g.validated_terms, 2U);
}

TEST(FitRational, WidthTwoGf) {
  const auto& g = fit_of(fit_rational(kWidthTwo, 7, 6, 2));
  EXPECT_EQ(g.gf, width2::full_gf());
  EXPECT_EQ(g.num_deg, 7);
  EXPECT_EQ(g.den_deg, 6);
}

TEST(FitRational, InsufficientTerms) {
  try {
    (void)fit_rational(ints({1, 2, 3}), 1, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "insufficient terms");
  }
}

TEST(FitRational, InconsistentOrHoldoutFailure) {
  EXPECT_FALSE(fitted(fit_rational(ints({1, 2, 4, 8, 16, 33}), 0, 1, 1)));
  EXPECT_FALSE(fitted(fit_rational(ints({1, 2, 4, 8, 16, 32, 64, 129}), 0, 1, 1)));
}

TEST(GuessAuto, WidthTwoSixteenTerms) {
  const auto& g = fit_of(guess_auto(kWidthTwo, 2));
  EXPECT_EQ(g.gf, width2::full_gf());
  EXPECT_EQ(g.num_deg, 7);
  EXPECT_EQ(g.den_deg, 6);
}

TEST(GuessAuto, WidthTwoWithThreeHeldOut) {
  auto terms = kWidthTwo;
  terms.push_back(width2::closed_form_a(16));
  const auto& g = fit_of(guess_auto(terms, 3));
  EXPECT_EQ(g.gf, width2::full_gf());
  EXPECT_EQ(g.validated_terms, 3U);
}

TEST(GuessAuto, Doubling) {
  EXPECT_EQ(fit_of(guess_auto(ints({1, 2, 4, 8, 16, 32}), 2)).gf, RatFun(Poly{1}, Poly{1, -2}));
}

TEST(GuessAuto, RandomLookingTermsDoNotFit) {
  EXPECT_FALSE(fitted(guess_auto(ints({3, 1, 4, 1, 5, 9}), 2)));
  EXPECT_THROW(guess_auto(ints({1, 2, 3}), 0), Error);
}

TEST(GuessAuto, MaxDegreeBound) {
  EXPECT_FALSE(fitted(guess_auto(kWidthTwo, 2, GuessOptions{5})));
  EXPECT_TRUE(fitted(guess_auto(kWidthTwo, 2, GuessOptions{7})));
}

TEST(GuessProperties, RoundTripAndMinimality) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> deg(0, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<BigRat> d(static_cast<std::size_t>(deg(rng)) + 1);
    d[0] = 1;
    for (std::size_t k = 1; k < d.size(); ++k) d[k] = coef(rng);
    const RatFun f(testing::random_poly(rng, 4, -9, 9), Poly(d));
    const std::size_t p = static_cast<std::size_t>(std::max(0L, f.num().degree()));
    const std::size_t q = static_cast<std::size_t>(f.den().degree());
    const auto terms = integer_coeffs(series_expand(f, p + q + 4));

    const auto o = guess_auto(terms, 2);
    const auto& g = fit_of(o);
    EXPECT_EQ(g.gf, f);
    EXPECT_EQ(integer_coeffs(series_expand(g.gf, terms.size() - 1)), terms);

    // nothing of smaller total degree fits
    const long total = std::max(0L, g.num_deg) + g.den_deg;
    for (long s = 0; s < total; ++s)
      for (long qq = 0; qq <= s; ++qq)
        EXPECT_FALSE(fitted(fit_rational(terms, static_cast<unsigned>(s - qq), static_cast<unsigned>(qq), 2)));
  }
}

TEST(SemiRigorous, ReproducesTheorem) {
  const auto r = semi_rigorous_width2();
  EXPECT_TRUE(r.ok()) << r.detail;
  EXPECT_EQ(r.oracle_terms, kWidthTwo);
  EXPECT_EQ(r.fresh_terms.size(), 5U);
}

TEST(SemiRigorous, TruncatedInputFails) {
  std::vector<BigInt> ten(kWidthTwo.begin(), kWidthTwo.begin() + 10);
  std::vector<BigInt> fresh(kWidthTwo.begin() + 10, kWidthTwo.end());
  EXPECT_FALSE(semi_rigorous_from_terms(ten, fresh).ok());
}

TEST(SemiRigorous, PerturbedTermIsDetected) {
  auto terms = kWidthTwo;
  terms[9] += 1;
  const auto r = semi_rigorous_from_terms(terms, ints({7880, 12772, 20654, 33444, 54100}));
  EXPECT_FALSE(r.guess.has_value()) << r.detail;
  EXPECT_FALSE(r.ok());
}

}  // namespace
}  // namespace sawstrip
