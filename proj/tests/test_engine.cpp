#include <gtest/gtest.h>

#include "hbent/engine.hpp"
#include "hbent/errors.hpp"

using namespace hbent;

namespace {

EngineConfig quick(Encoding e, int n, int d, std::optional<int> k = {}) {
  EngineConfig c;
  c.encoding = e;
  c.n = n;
  c.d = d;
  c.k = k;
  c.population_size = 50;
  c.max_evaluations = 5000;
  return c;
}

}  // namespace

TEST(EngineConfig, Validation) {
  EngineConfig c;
  EXPECT_NO_THROW(c.validate());
  c.population_size = 2;
  EXPECT_THROW(c.validate(), ConfigError);
  c = EngineConfig{};
  c.encoding = Encoding::wanf;
  EXPECT_THROW(c.validate(), ConfigError);
  c = EngineConfig{};
  c.fitness = FitnessKind::bent_k;
  EXPECT_THROW(c.validate(), ConfigError);
  c = EngineConfig{};
  c.p_mut = 1.5;
  EXPECT_THROW(c.validate(), ConfigError);
  EXPECT_THROW(run_sst(c), ConfigError);
}

TEST(Engine, BudgetExhaustedDuringInitialization) {
  EngineConfig c = quick(Encoding::ranf, 8, 3);
  c.population_size = 3;
  c.max_evaluations = 3;
  const auto r = run_sst(c);
  EXPECT_EQ(r.evaluations_used, 3);
}

TEST(Engine, QuadraticSixVariablesSucceeds) {
  for (auto e : {Encoding::gp, Encoding::tt, Encoding::ranf}) {
    EngineConfig c = quick(e, 6, 2);
    c.max_evaluations = 100000;
    c.seed = 3;
    const auto r = run_sst(c);
    EXPECT_TRUE(r.success) << encoding_name(e);
    EXPECT_EQ(r.best_fitness.value(), 28.0);
    EXPECT_EQ(r.best_fitness.integer_part(), 28);
  }
}

TEST(Engine, CubicWanfSixVariablesSucceeds) {
  EngineConfig c = quick(Encoding::wanf, 6, 3, 16);
  c.max_evaluations = 100000;
  const auto r = run_sst(c);
  EXPECT_TRUE(r.success);
  EXPECT_EQ(r.best_terms, 16u);
}

TEST(Engine, DeterministicForSeed) {
  for (auto e : {Encoding::gp, Encoding::tt, Encoding::ranf, Encoding::wanf}) {
    EngineConfig c = quick(e, 8, 3, e == Encoding::wanf ? std::optional<int>(39) : std::nullopt);
    c.seed = 42;
    c.local_search = LocalSearchConfig{};
    const auto a = run_sst(c);
    const auto b = run_sst(c);
    EXPECT_EQ(a.best_genotype, b.best_genotype);
    EXPECT_EQ(a.best_fitness, b.best_fitness);
    EXPECT_EQ(a.evaluations_used, b.evaluations_used);
    ASSERT_EQ(a.fitness_trace.size(), b.fitness_trace.size());
  }
}

TEST(Engine, RunInvariants) {
  for (bool ls : {false, true}) {
    EngineConfig c = quick(Encoding::wanf, 8, 3, 37);
    if (ls) c.local_search = LocalSearchConfig{0.05, 10};
    std::int64_t observed = 0;
    bool all_k = true;
    const auto r = run_sst(c, [&](const Decoded& d, const FitnessValue&) {
      ++observed;
      all_k = all_k && monomial_count(d.anf) == 37;
    });
    EXPECT_TRUE(all_k);
    EXPECT_EQ(observed, r.evaluations_used);
    EXPECT_LE(r.evaluations_used, c.max_evaluations + c.population_size);
    for (std::size_t i = 1; i < r.fitness_trace.size(); ++i) {
      EXPECT_GT(r.fitness_trace[i].best, r.fitness_trace[i - 1].best);
      EXPECT_GT(r.fitness_trace[i].evaluation, r.fitness_trace[i - 1].evaluation);
    }
    ASSERT_FALSE(r.fitness_trace.empty());
    EXPECT_EQ(r.fitness_trace.back().best, r.best_fitness);
  }
}

TEST(Engine, SuccessImpliesBentValue) {
  EngineConfig c = quick(Encoding::ranf, 6, 3);
  c.fitness = FitnessKind::bent_k;
  c.k = 16;
  c.max_evaluations = 200000;
  for (std::uint64_t s = 0; s < 3; ++s) {
    c.seed = s;
    const auto r = run_sst(c);
    if (r.success) {
      EXPECT_EQ(r.best_fitness.integer_part(), 28);
      EXPECT_EQ(r.best_terms, 16u);
    }
  }
}

TEST(LocalSearch, NeverWorsensAndCountsBudget) {
  EngineConfig c = quick(Encoding::ranf, 8, 3);
  c.max_evaluations = 1'000'000;
  SearchContext ctx(c);
  Rng rng(7);
  for (int rep = 0; rep < 1000; ++rep) {
    Genotype g = random_genotype(c.encoding, c.n, c.d, c.k, rng, c.gp);
    Individual ind{g, ctx.evaluate(g)};
    const auto before = ctx.evaluations();
    const auto r = local_search(ind, ctx, 5, rng);
    ASSERT_GE(r.individual.fitness, ind.fitness);
    ASSERT_GE(r.evaluations_spent, 5);
    ASSERT_EQ(ctx.evaluations() - before, r.evaluations_spent);
  }
}

TEST(LocalSearch, OptimumIsReturnedAfterExactlyTrials) {
  // The complete quadratic on 5 variables has the largest rank any quadratic
  // form can reach there, so no single-term change or shuffle improves it,
  // and odd n means the search can never be solved early.
  EngineConfig c = quick(Encoding::ranf, 5, 2);
  SearchContext ctx(c);
  Rng rng(8);
  RanfBitstring g{5, 2, Genes(10, 1)};
  Individual ind{g, ctx.evaluate(g)};
  ASSERT_EQ(ind.fitness.nl, 12);
  const auto r = local_search(ind, ctx, 30, rng);
  EXPECT_EQ(r.individual.genotype, ind.genotype);
  EXPECT_EQ(r.evaluations_spent, 30);
}

TEST(Trace, DownsampleKeepsEnds) {
  std::vector<TracePoint> t;
  for (int i = 0; i < 5000; ++i) t.push_back({i, FitnessValue{6, i}});
  const auto d = downsample_trace(t, 1000);
  ASSERT_EQ(d.size(), 1000u);
  EXPECT_EQ(d.front().evaluation, 0);
  EXPECT_EQ(d.back().evaluation, 4999);
  EXPECT_EQ(downsample_trace(std::vector<TracePoint>(t.begin(), t.begin() + 10), 1000).size(), 10u);
}
