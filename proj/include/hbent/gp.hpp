#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hbent/bitvec.hpp"
#include "hbent/boolfn.hpp"
#include "hbent/random.hpp"

namespace hbent {

enum class GpOp : std::uint8_t { var, not_, or_, xor_, and_, and2, xnor, if_ };

int arity(GpOp op) noexcept;
std::string_view op_name(GpOp op) noexcept;

struct GpNode {
  GpOp op = GpOp::var;
  std::uint8_t var = 0;  // 0-based variable index for leaves
  friend bool operator==(const GpNode&, const GpNode&) = default;
};

struct GpConfig {
  int max_depth = 8;
  int init_min_depth = 2;
  int init_max_depth = 6;
  int max_retries = 10;
};

/// Expression tree stored in prefix order. A single leaf has depth 0.
class GpTree {
 public:
  GpTree() = default;
  explicit GpTree(std::vector<GpNode> prefix);

  static GpTree leaf(int var) { return GpTree({GpNode{GpOp::var, static_cast<std::uint8_t>(var)}}); }

  const std::vector<GpNode>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  int depth() const noexcept { return depth_; }
  /// Highest variable index used, 0-based; -1 if none.
  int max_var() const noexcept;

  /// One past the last node of the subtree rooted at i.
  std::size_t subtree_end(std::size_t i) const;
  /// Level (root = 0) of every node.
  std::vector<int> node_levels() const;
  std::vector<std::size_t> child_indices(std::size_t i) const;

  /// Replace the subtree rooted at `at` with `donor`'s subtree rooted at `from`.
  GpTree with_subtree(std::size_t at, const GpTree& donor, std::size_t from) const;
  GpTree with_subtree(std::size_t at, const std::vector<GpNode>& replacement) const;

  /// "(XOR x1 (AND x2 x3))"
  std::string to_string() const;
  static GpTree parse(std::string_view text);

  friend bool operator==(const GpTree& a, const GpTree& b) { return a.nodes_ == b.nodes_; }

 private:
  std::vector<GpNode> nodes_;
  int depth_ = 0;
};

/// Evaluates trees over all 2^n inputs, one machine word per 64 inputs.
class GpEvaluator {
 public:
  explicit GpEvaluator(int n);
  int num_vars() const noexcept { return n_; }
  TruthTable evaluate(const GpTree& tree) const;

 private:
  int n_;
  std::vector<BitVector> variables_;
};

/// Ramped half-and-half: depth uniform in [init_min_depth, init_max_depth],
/// full or grow with equal probability.
GpTree random_tree(int n, Rng& rng, const GpConfig& config);
GpTree full_tree(int n, int depth, Rng& rng);
GpTree grow_tree(int n, int min_depth, int max_depth, Rng& rng);

// Crossovers. Each returns a child built around p1.
GpTree subtree_crossover(const GpTree& p1, const GpTree& p2, Rng& rng);
GpTree uniform_tree_crossover(const GpTree& p1, const GpTree& p2, Rng& rng);
GpTree size_fair_crossover(const GpTree& p1, const GpTree& p2, Rng& rng);
GpTree one_point_tree_crossover(const GpTree& p1, const GpTree& p2, Rng& rng);
GpTree context_preserving_crossover(const GpTree& p1, const GpTree& p2, Rng& rng);

/// Picks one of the five crossovers uniformly; children deeper than
/// max_depth are regenerated up to max_retries times, then p1 is copied.
GpTree crossover_gp(const GpTree& p1, const GpTree& p2, Rng& rng, const GpConfig& config);
/// Replaces a uniformly chosen node's subtree with a grown random subtree
/// that keeps the tree within max_depth.
GpTree subtree_mutation(const GpTree& tree, int n, Rng& rng, const GpConfig& config);
GpTree subtree_mutation_at(const GpTree& tree, std::size_t node, int n, Rng& rng,
                           const GpConfig& config);
/// Crossover followed by subtree mutation with probability p_mut.
GpTree gp_variation(const GpTree& p1, const GpTree& p2, int n, double p_mut, Rng& rng,
                    const GpConfig& config);

}  // namespace hbent
