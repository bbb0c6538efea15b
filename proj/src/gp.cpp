#include "hbent/gp.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "hbent/errors.hpp"

namespace hbent {
namespace {

constexpr std::array<GpOp, 7> kFunctions = {GpOp::or_, GpOp::xor_, GpOp::and_, GpOp::and2,
                                            GpOp::xnor, GpOp::if_, GpOp::not_};

GpNode random_function(Rng& rng) { return {kFunctions[uniform_index(rng, kFunctions.size())], 0}; }

GpNode random_leaf(int n, Rng& rng) {
  return {GpOp::var, static_cast<std::uint8_t>(uniform_index(rng, static_cast<std::size_t>(n)))};
}

}  // namespace

int arity(GpOp op) noexcept {
  switch (op) {
    case GpOp::var:
      return 0;
    case GpOp::not_:
      return 1;
    case GpOp::if_:
      return 3;
    default:
      return 2;
  }
}

std::string_view op_name(GpOp op) noexcept {
  switch (op) {
    case GpOp::var:
      return "x";
    case GpOp::not_:
      return "NOT";
    case GpOp::or_:
      return "OR";
    case GpOp::xor_:
      return "XOR";
    case GpOp::and_:
      return "AND";
    case GpOp::and2:
      return "AND2";
    case GpOp::xnor:
      return "XNOR";
    case GpOp::if_:
      return "IF";
  }
  return "?";
}

GpTree::GpTree(std::vector<GpNode> prefix) : nodes_(std::move(prefix)) {
  if (nodes_.empty()) throw InvalidInput("empty GP tree");
  long need = 1;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (need <= 0) throw InvalidInput("GP prefix has trailing nodes");
    need += arity(nodes_[i].op) - 1;
  }
  if (need != 0) throw InvalidInput("GP prefix is incomplete");
  const auto levels = node_levels();
  depth_ = *std::max_element(levels.begin(), levels.end());
}

int GpTree::max_var() const noexcept {
  int m = -1;
  for (const auto& node : nodes_)
    if (node.op == GpOp::var) m = std::max(m, static_cast<int>(node.var));
  return m;
}

std::size_t GpTree::subtree_end(std::size_t i) const {
  long need = 1;
  while (need > 0) {
    need += arity(nodes_[i].op) - 1;
    ++i;
  }
  return i;
}

std::vector<int> GpTree::node_levels() const {
  std::vector<int> levels(nodes_.size());
  std::vector<std::pair<int, int>> open;  // (parent level, children still expected)
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const int level = open.empty() ? 0 : open.back().first + 1;
    levels[i] = level;
    if (!open.empty() && --open.back().second == 0) open.pop_back();
    if (const int a = arity(nodes_[i].op); a > 0) open.emplace_back(level, a);
  }
  return levels;
}

std::vector<std::size_t> GpTree::child_indices(std::size_t i) const {
  std::vector<std::size_t> children;
  std::size_t c = i + 1;
  for (int j = 0; j < arity(nodes_[i].op); ++j) {
    children.push_back(c);
    c = subtree_end(c);
  }
  return children;
}

GpTree GpTree::with_subtree(std::size_t at, const std::vector<GpNode>& replacement) const {
  std::vector<GpNode> out;
  out.reserve(nodes_.size() + replacement.size());
  out.insert(out.end(), nodes_.begin(), nodes_.begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), nodes_.begin() + static_cast<std::ptrdiff_t>(subtree_end(at)),
             nodes_.end());
  return GpTree(std::move(out));
}

GpTree GpTree::with_subtree(std::size_t at, const GpTree& donor, std::size_t from) const {
  const auto& d = donor.nodes_;
  return with_subtree(at, std::vector<GpNode>(d.begin() + static_cast<std::ptrdiff_t>(from),
                                              d.begin() + static_cast<std::ptrdiff_t>(
                                                              donor.subtree_end(from))));
}

std::string GpTree::to_string() const {
  std::string out;
  std::vector<int> open;  // children still expected per open paren
  for (const auto& node : nodes_) {
    if (!out.empty() && out.back() != '(') out += ' ';
    if (node.op == GpOp::var) {
      out += 'x';
      out += std::to_string(node.var + 1);
    } else {
      out += '(';
      out += op_name(node.op);
      open.push_back(arity(node.op));
      continue;
    }
    while (!open.empty() && --open.back() == 0) {
      out += ')';
      open.pop_back();
    }
  }
  return out;
}

GpTree GpTree::parse(std::string_view text) {
  std::vector<GpNode> nodes;
  std::vector<std::pair<std::size_t, int>> open;  // (node index, children seen)
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto word = [&] {
    const std::size_t start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };
  auto note_child = [&] {
    if (!open.empty()) ++open.back().second;
  };
  skip();
  while (pos < text.size()) {
    const std::size_t start = pos;
    if (text[pos] == '(') {
      ++pos;
      skip();
      const std::size_t name_pos = pos;
      const auto name = word();
      GpOp op = GpOp::var;
      for (GpOp f : kFunctions)
        if (op_name(f) == name) op = f;
      if (op == GpOp::var) throw ParseError("unknown operator '" + std::string(name) + "'", name_pos);
      note_child();
      open.emplace_back(nodes.size(), 0);
      nodes.push_back({op, 0});
    } else if (text[pos] == ')') {
      if (open.empty()) throw ParseError("unbalanced ')'", pos);
      const auto [idx, seen] = open.back();
      if (seen != arity(nodes[idx].op))
        throw ParseError(std::string(op_name(nodes[idx].op)) + " expects " +
                             std::to_string(arity(nodes[idx].op)) + " arguments",
                         pos);
      open.pop_back();
      ++pos;
    } else if (text[pos] == 'x') {
      ++pos;
      const auto digits = word();
      int v = 0;
      for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad variable", start);
        v = v * 10 + (c - '0');
      }
      if (digits.empty() || v < 1 || v > kMaxVars) throw ParseError("bad variable", start);
      note_child();
      nodes.push_back({GpOp::var, static_cast<std::uint8_t>(v - 1)});
    } else {
      throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
    }
    skip();
    if (open.empty() && pos < text.size()) throw ParseError("trailing input", pos);
  }
  if (!open.empty() || nodes.empty()) throw ParseError("incomplete expression", text.size());
  return GpTree(std::move(nodes));
}

GpEvaluator::GpEvaluator(int n) : n_(n) {
  check_num_vars(n);
  const std::size_t size = std::size_t{1} << n;
  for (int j = 1; j <= n; ++j) {
    BitVector v(size);
    const std::uint32_t bit = variable_bit(n, j);
    for (std::size_t i = 0; i < size; ++i)
      if (i & bit) v.set(i, true);
    variables_.push_back(std::move(v));
  }
}

TruthTable GpEvaluator::evaluate(const GpTree& tree) const {
  if (tree.max_var() >= n_)
    throw InvalidInput("tree references x" + std::to_string(tree.max_var() + 1) +
                       " but n=" + std::to_string(n_));
  const std::size_t size = std::size_t{1} << n_;
  const std::uint64_t tail = size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
  const auto& nodes = tree.nodes();
  std::vector<BitVector> stack;
  stack.reserve(tree.depth() + 3);
  for (std::size_t r = nodes.size(); r-- > 0;) {
    const GpNode node = nodes[r];
    if (node.op == GpOp::var) {
      stack.push_back(variables_[node.var]);
      continue;
    }
    // Children were pushed last-first, so the first operand is on top.
    BitVector a = std::move(stack.back());
    stack.pop_back();
    auto aw = a.words();
    if (node.op == GpOp::not_) {
      for (auto& w : aw) w = ~w;
    } else {
      BitVector b = std::move(stack.back());
      stack.pop_back();
      const auto bw = b.words();
      switch (node.op) {
        case GpOp::or_:
          for (std::size_t i = 0; i < aw.size(); ++i) aw[i] |= bw[i];
          break;
        case GpOp::xor_:
          for (std::size_t i = 0; i < aw.size(); ++i) aw[i] ^= bw[i];
          break;
        case GpOp::and_:
          for (std::size_t i = 0; i < aw.size(); ++i) aw[i] &= bw[i];
          break;
        case GpOp::and2:
          for (std::size_t i = 0; i < aw.size(); ++i) aw[i] &= ~bw[i];
          break;
        case GpOp::xnor:
          for (std::size_t i = 0; i < aw.size(); ++i) aw[i] = ~(aw[i] ^ bw[i]);
          break;
        case GpOp::if_: {
          BitVector c = std::move(stack.back());
          stack.pop_back();
          const auto cw = c.words();
          for (std::size_t i = 0; i < aw.size(); ++i) aw[i] = (aw[i] & bw[i]) | (~aw[i] & cw[i]);
          break;
        }
        default:
          break;
      }
    }
    aw[aw.size() - 1] &= tail;
    stack.push_back(std::move(a));
  }
  return TruthTable(n_, std::move(stack.back()));
}

namespace {

void emit_full(int n, int level, int depth, Rng& rng, std::vector<GpNode>& out) {
  if (level >= depth) {
    out.push_back(random_leaf(n, rng));
    return;
  }
  const GpNode f = random_function(rng);
  out.push_back(f);
  for (int i = 0; i < arity(f.op); ++i) emit_full(n, level + 1, depth, rng, out);
}

void emit_grow(int n, int level, int min_depth, int max_depth, Rng& rng,
               std::vector<GpNode>& out) {
  bool function;
  if (level >= max_depth)
    function = false;
  else if (level < min_depth)
    function = true;
  else
    function = uniform_index(rng, kFunctions.size() + static_cast<std::size_t>(n)) <
               kFunctions.size();
  if (!function) {
    out.push_back(random_leaf(n, rng));
    return;
  }
  const GpNode f = random_function(rng);
  out.push_back(f);
  for (int i = 0; i < arity(f.op); ++i) emit_grow(n, level + 1, min_depth, max_depth, rng, out);
}

}  // namespace

GpTree full_tree(int n, int depth, Rng& rng) {
  std::vector<GpNode> nodes;
  emit_full(n, 0, depth, rng, nodes);
  return GpTree(std::move(nodes));
}

GpTree grow_tree(int n, int min_depth, int max_depth, Rng& rng) {
  std::vector<GpNode> nodes;
  emit_grow(n, 0, std::min(min_depth, max_depth), max_depth, rng, nodes);
  return GpTree(std::move(nodes));
}

GpTree random_tree(int n, Rng& rng, const GpConfig& config) {
  const int lo = config.init_min_depth;
  const int hi = std::min(config.init_max_depth, config.max_depth);
  const int depth = lo + static_cast<int>(uniform_index(rng, static_cast<std::size_t>(hi - lo + 1)));
  return coin(rng) ? full_tree(n, depth, rng) : grow_tree(n, lo, depth, rng);
}

GpTree subtree_crossover(const GpTree& p1, const GpTree& p2, Rng& rng) {
  const std::size_t at = uniform_index(rng, p1.size());
  const std::size_t from = uniform_index(rng, p2.size());
  return p1.with_subtree(at, p2, from);
}

GpTree size_fair_crossover(const GpTree& p1, const GpTree& p2, Rng& rng) {
  const std::size_t at = uniform_index(rng, p1.size());
  const std::size_t limit = 2 * (p1.subtree_end(at) - at) + 1;
  std::vector<std::size_t> candidates;
  for (std::size_t j = 0; j < p2.size(); ++j)
    if (p2.subtree_end(j) - j <= limit) candidates.push_back(j);
  // leaves always qualify, so candidates is never empty
  return p1.with_subtree(at, p2, candidates[uniform_index(rng, candidates.size())]);
}

namespace {

// Node pairs at identical coordinates. With same_shape, descent stops where
// arities differ (the common region); otherwise it follows child positions
// present in both trees.
void collect_pairs(const GpTree& a, std::size_t i, const GpTree& b, std::size_t j, bool same_shape,
                   std::vector<std::pair<std::size_t, std::size_t>>& out) {
  out.emplace_back(i, j);
  const int ai = arity(a.nodes()[i].op);
  const int bj = arity(b.nodes()[j].op);
  if (same_shape && ai != bj) return;
  const auto ca = a.child_indices(i);
  const auto cb = b.child_indices(j);
  for (std::size_t c = 0; c < std::min(ca.size(), cb.size()); ++c)
    collect_pairs(a, ca[c], b, cb[c], same_shape, out);
}

GpTree swap_at_random_pair(const GpTree& p1, const GpTree& p2, bool same_shape, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  collect_pairs(p1, 0, p2, 0, same_shape, pairs);
  const auto [at, from] = pairs[uniform_index(rng, pairs.size())];
  return p1.with_subtree(at, p2, from);
}

void copy_subtree(const GpTree& t, std::size_t i, std::vector<GpNode>& out) {
  out.insert(out.end(), t.nodes().begin() + static_cast<std::ptrdiff_t>(i),
             t.nodes().begin() + static_cast<std::ptrdiff_t>(t.subtree_end(i)));
}

void uniform_build(const GpTree& a, std::size_t i, const GpTree& b, std::size_t j, Rng& rng,
                   std::vector<GpNode>& out) {
  const int ai = arity(a.nodes()[i].op);
  if (ai > 0 && ai == arity(b.nodes()[j].op)) {
    out.push_back(coin(rng) ? b.nodes()[j] : a.nodes()[i]);
    const auto ca = a.child_indices(i);
    const auto cb = b.child_indices(j);
    for (std::size_t c = 0; c < ca.size(); ++c) uniform_build(a, ca[c], b, cb[c], rng, out);
    return;
  }
  if (coin(rng))
    copy_subtree(b, j, out);
  else
    copy_subtree(a, i, out);
}

}  // namespace

GpTree one_point_tree_crossover(const GpTree& p1, const GpTree& p2, Rng& rng) {
  return swap_at_random_pair(p1, p2, true, rng);
}

GpTree context_preserving_crossover(const GpTree& p1, const GpTree& p2, Rng& rng) {
  return swap_at_random_pair(p1, p2, false, rng);
}

GpTree uniform_tree_crossover(const GpTree& p1, const GpTree& p2, Rng& rng) {
  std::vector<GpNode> out;
  uniform_build(p1, 0, p2, 0, rng, out);
  return GpTree(std::move(out));
}

GpTree crossover_gp(const GpTree& p1, const GpTree& p2, Rng& rng, const GpConfig& config) {
  using Op = GpTree (*)(const GpTree&, const GpTree&, Rng&);
  static constexpr std::array<Op, 5> kOps = {subtree_crossover, uniform_tree_crossover,
                                             size_fair_crossover, one_point_tree_crossover,
                                             context_preserving_crossover};
  const Op op = kOps[uniform_index(rng, kOps.size())];
  for (int attempt = 0; attempt < config.max_retries; ++attempt) {
    GpTree child = op(p1, p2, rng);
    if (child.depth() <= config.max_depth) return child;
  }
  return p1;
}

GpTree subtree_mutation_at(const GpTree& tree, std::size_t node, int n, Rng& rng,
                           const GpConfig& config) {
  const int level = tree.node_levels()[node];
  const int limit = std::max(0, std::min(config.init_max_depth, config.max_depth - level));
  return tree.with_subtree(node, grow_tree(n, 0, limit, rng).nodes());
}

GpTree subtree_mutation(const GpTree& tree, int n, Rng& rng, const GpConfig& config) {
  return subtree_mutation_at(tree, uniform_index(rng, tree.size()), n, rng, config);
}

GpTree gp_variation(const GpTree& p1, const GpTree& p2, int n, double p_mut, Rng& rng,
                    const GpConfig& config) {
  GpTree child = crossover_gp(p1, p2, rng, config);
  if (bernoulli(rng, p_mut)) child = subtree_mutation(child, n, rng, config);
  return child;
}

}  // namespace hbent
