#include <gtest/gtest.h>

#include "hbent/errors.hpp"
#include "hbent/gp.hpp"
#include "oracles.hpp"

using namespace hbent;
using namespace hbent::testing;

namespace {

/// Evaluates a tree one input at a time by recursive descent.
bool eval_point(const GpTree& t, std::size_t node, std::size_t x, int n) {
  const auto& nd = t.nodes()[node];
  const auto kids = t.child_indices(node);
  auto arg = [&](int i) { return eval_point(t, kids[static_cast<std::size_t>(i)], x, n); };
  switch (nd.op) {
    case GpOp::var: return (x >> (n - 1 - nd.var)) & 1u;
    case GpOp::not_: return !arg(0);
    case GpOp::or_: return arg(0) || arg(1);
    case GpOp::xor_: return arg(0) != arg(1);
    case GpOp::and_: return arg(0) && arg(1);
    case GpOp::and2: return arg(0) && !arg(1);
    case GpOp::xnor: return arg(0) == arg(1);
    case GpOp::if_: return arg(0) ? arg(1) : arg(2);
  }
  return false;
}

}  // namespace

TEST(GpTree, ParseAndPrint) {
  const auto t = GpTree::parse("(XOR x1 (AND x2 x3))");
  EXPECT_EQ(t.size(), 5u);
  EXPECT_EQ(t.depth(), 2);
  EXPECT_EQ(t.max_var(), 2);
  EXPECT_EQ(t.to_string(), "(XOR x1 (AND x2 x3))");
  EXPECT_EQ(GpTree::leaf(0).depth(), 0);
  EXPECT_THROW(GpTree::parse("(AND x1)"), ParseError);
  EXPECT_THROW(GpTree::parse("(FOO x1 x2)"), ParseError);
}

TEST(GpTree, Arities) {
  EXPECT_EQ(arity(GpOp::var), 0);
  EXPECT_EQ(arity(GpOp::not_), 1);
  for (auto op : {GpOp::or_, GpOp::xor_, GpOp::and_, GpOp::and2, GpOp::xnor}) EXPECT_EQ(arity(op), 2);
  EXPECT_EQ(arity(GpOp::if_), 3);
}

TEST(GpEvaluator, OperatorSemantics) {
  const GpEvaluator ev(3);
  auto table = [&](const char* s) { return to_hex(ev.evaluate(GpTree::parse(s))); };
  // x1 = 0f, x2 = 33, x3 = 55 under the first-variable-most-significant convention.
  EXPECT_EQ(table("x1"), "0f");
  EXPECT_EQ(table("(AND2 x1 x2)"), "0c");
  EXPECT_EQ(table("(IF x1 x2 x3)"), "53");
  EXPECT_EQ(table("(XNOR x1 x2)"), "c3");
  EXPECT_EQ(table("(NOT x3)"), "aa");
}

TEST(GpEvaluator, MatchesPointwiseEvaluation) {
  Rng rng(1);
  GpConfig cfg;
  for (int n : {3, 6, 7}) {
    const GpEvaluator ev(n);
    for (int rep = 0; rep < 100; ++rep) {
      const auto t = random_tree(n, rng, cfg);
      const auto tt = ev.evaluate(t);
      for (std::size_t x = 0; x < tt.size(); ++x)
        ASSERT_EQ(tt[x], eval_point(t, 0, x, n)) << t.to_string() << " x=" << x;
    }
  }
}

TEST(GpInit, DepthsWithinRampedRange) {
  Rng rng(2);
  GpConfig cfg;
  for (int rep = 0; rep < 1000; ++rep) {
    const auto t = random_tree(6, rng, cfg);
    ASSERT_GE(t.depth(), 2);
    ASSERT_LE(t.depth(), 6);
    ASSERT_LT(t.max_var(), 6);
  }
}

TEST(GpVariation, SingleLeafParents) {
  Rng rng(3);
  GpConfig cfg;
  const auto a = GpTree::leaf(0), b = GpTree::leaf(4);
  for (int rep = 0; rep < 100; ++rep) {
    const auto c = crossover_gp(a, b, rng, cfg);
    ASSERT_EQ(c.size(), 1u);
    ASSERT_TRUE(c == a || c == b);
  }
}

TEST(GpVariation, DepthNeverExceedsLimit) {
  Rng rng(4);
  GpConfig cfg;
  std::vector<GpTree> pool;
  for (int i = 0; i < 50; ++i) pool.push_back(random_tree(8, rng, cfg));
  for (int rep = 0; rep < 1000; ++rep) {
    const auto& a = pool[uniform_index(rng, pool.size())];
    const auto& b = pool[uniform_index(rng, pool.size())];
    auto c = gp_variation(a, b, 8, 0.5, rng, cfg);
    ASSERT_LE(c.depth(), cfg.max_depth);
    pool[uniform_index(rng, pool.size())] = std::move(c);
  }
}

TEST(GpVariation, EachCrossoverKeepsTreesValid) {
  Rng rng(5);
  GpConfig cfg;
  using Fn = GpTree (*)(const GpTree&, const GpTree&, Rng&);
  const Fn ops[] = {subtree_crossover, uniform_tree_crossover, size_fair_crossover,
                    one_point_tree_crossover, context_preserving_crossover};
  for (Fn op : ops) {
    for (int rep = 0; rep < 200; ++rep) {
      const auto a = random_tree(6, rng, cfg);
      const auto b = random_tree(6, rng, cfg);
      const auto c = op(a, b, rng);
      // Round-tripping through text re-validates arities.
      ASSERT_EQ(GpTree::parse(c.to_string()), c);
    }
  }
}

TEST(GpMutation, AtRootGivesFreshTreeWithinBound) {
  Rng rng(6);
  GpConfig cfg;
  const auto t = GpTree::parse("(AND x1 x2)");
  for (int rep = 0; rep < 100; ++rep) {
    const auto m = subtree_mutation_at(t, 0, 4, rng, cfg);
    ASSERT_LE(m.depth(), cfg.max_depth);
    ASSERT_LT(m.max_var(), 4);
  }
}
