#include <gtest/gtest.h>

#include "hbent/census.hpp"
#include "hbent/errors.hpp"
#include "hbent/fitness.hpp"
#include "oracles.hpp"

using namespace hbent;
using namespace hbent::testing;

TEST(CountMaxValues, SpotCases) {
  EXPECT_EQ(count_max_values(walsh_hadamard(TruthTable(6))), 1);
  EXPECT_EQ(count_max_values(walsh_hadamard(anf_to_truth_table(maiorana_quadratic(6)))), 64);
  EXPECT_EQ(count_max_values(walsh_hadamard(anf_to_truth_table(anf_from_masks(3, {0b100})))), 1);
}

TEST(FitBent, SpotValues) {
  const auto zero = fit_bent(TruthTable(6));
  EXPECT_EQ(zero.value(), 0.984375);
  EXPECT_EQ(format_fitness(zero), "0.984375");
  EXPECT_EQ(fit_bent(anf_to_truth_table(maiorana_quadratic(6))).value(), 28.0);
  EXPECT_EQ(fit_bent(anf_to_truth_table(maiorana_quadratic(8))).value(), 120.0);
}

TEST(FitBent, BracketsNonlinearity) {
  Rng rng(1);
  for (int n : {4, 6, 8}) {
    for (int rep = 0; rep < 300; ++rep) {
      const auto tt = random_tt(n, rng);
      const auto f = fit_bent(tt);
      const int nl = nonlinearity(walsh_hadamard(tt));
      ASSERT_EQ(f.integer_part(), nl);
      ASSERT_GE(f.value(), nl);
      ASSERT_LT(f.value(), nl + 1);
      ASSERT_EQ(f.value() == bent_nonlinearity(n), is_bent(walsh_hadamard(tt)));
    }
  }
}

TEST(FitBentK, PenaltyBranch) {
  AnfVector anf(6);
  const auto masks = homogeneous_monomials(6, 3);
  for (int i = 0; i < 14; ++i) anf.set(masks[static_cast<std::size_t>(i)], true);
  const auto f = fit_bent_k(anf, anf_to_truth_table(anf), 16);
  EXPECT_EQ(f.value(), -2.0);
  EXPECT_TRUE(f.penalized());
  EXPECT_EQ(*f.penalty, 2);
  EXPECT_EQ(format_fitness(f), "-2.000000");
}

TEST(FitBentK, KnownCubicBentScoresBentValue) {
  for (const auto& anf : enumerate_homogeneous_bent(6, 3)) {
    const auto f = fit_bent_k(anf, anf_to_truth_table(anf), 16);
    EXPECT_EQ(f.value(), 28.0);
    EXPECT_FALSE(f.penalized());
  }
}

TEST(FitBentK, CoincidesWithFitBentOnKTermInputs) {
  Rng rng(2);
  const auto masks = homogeneous_monomials(8, 3);
  for (int rep = 0; rep < 200; ++rep) {
    auto order = masks;
    std::shuffle(order.begin(), order.end(), rng);
    AnfVector anf(8);
    for (int i = 0; i < 39; ++i) anf.set(order[static_cast<std::size_t>(i)], true);
    const auto tt = anf_to_truth_table(anf);
    const auto fk = fit_bent_k(anf, tt, 39);
    EXPECT_EQ(fk, fit_bent(tt));
    EXPECT_EQ(fk.integer_part(), nonlinearity(walsh_hadamard(tt)));
  }
}

TEST(FitnessFunction, PenalizedInputsSkipTheSpectrum) {
  FitnessFunction fit(FitnessKind::bent_k, 6, 16);
  const auto anf = maiorana_quadratic(6);
  const Decoded d{anf_to_truth_table(anf), anf};
  const auto f = fit(d);
  EXPECT_EQ(f.value(), -13.0);
  EXPECT_EQ(fit.spectrum_evaluations(), 0);

  const auto bent = enumerate_homogeneous_bent(6, 3).front();
  EXPECT_EQ(fit({anf_to_truth_table(bent), bent}).value(), 28.0);
  EXPECT_EQ(fit.spectrum_evaluations(), 1);
}

TEST(FitnessFunction, AgreesWithFreeFunction) {
  Rng rng(3);
  FitnessFunction fit(FitnessKind::bent, 10, {});
  for (int rep = 0; rep < 50; ++rep) {
    const auto tt = random_tt(10, rng);
    EXPECT_EQ(fit({tt, mobius_transform(tt)}), fit_bent(tt));
  }
}

TEST(FitnessValue, OrderingUsesExactScaledValue) {
  const auto a = fit_bent(TruthTable(6));
  const auto b = fit_bent(anf_to_truth_table(maiorana_quadratic(6)));
  EXPECT_LT(a, b);
  EXPECT_EQ(parse_fitness("bent-k"), FitnessKind::bent_k);
  EXPECT_THROW(parse_fitness("nl"), InvalidInput);
}
