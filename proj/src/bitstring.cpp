#include "hbent/bitstring.hpp"

#include <algorithm>

#include "hbent/errors.hpp"

namespace hbent {

std::size_t weight(const Genes& g) {
  return static_cast<std::size_t>(std::count(g.begin(), g.end(), std::uint8_t{1}));
}

std::string genes_to_string(const Genes& g) {
  std::string s(g.size(), '0');
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i]) s[i] = '1';
  return s;
}

Genes genes_from_string(std::string_view s) {
  Genes g(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw ParseError("expected '0' or '1'", i);
    g[i] = s[i] == '1';
  }
  return g;
}

void simple_bit_mutation(Genes& g, Rng& rng) {
  if (g.empty()) return;
  g[uniform_index(rng, g.size())] ^= 1u;
}

void shuffle_mutation(Genes& g, Rng& rng) {
  if (g.size() < 2) return;
  std::size_t i = uniform_index(rng, g.size());
  std::size_t j = uniform_index(rng, g.size());
  if (i > j) std::swap(i, j);
  std::shuffle(g.begin() + static_cast<std::ptrdiff_t>(i),
               g.begin() + static_cast<std::ptrdiff_t>(j) + 1, rng);
}

namespace {

void require_same_length(const Genes& a, const Genes& b) {
  if (a.size() != b.size())
    throw InvalidInput("parent lengths differ: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
}

}  // namespace

Genes one_point_crossover(const Genes& a, const Genes& b, std::size_t cut) {
  require_same_length(a, b);
  Genes child = a;
  std::copy(b.begin() + static_cast<std::ptrdiff_t>(cut), b.end(),
            child.begin() + static_cast<std::ptrdiff_t>(cut));
  return child;
}

Genes one_point_crossover(const Genes& a, const Genes& b, Rng& rng) {
  require_same_length(a, b);
  if (a.size() < 2) return a;
  return one_point_crossover(a, b, 1 + uniform_index(rng, a.size() - 1));
}

Genes uniform_crossover(const Genes& a, const Genes& b, Rng& rng) {
  require_same_length(a, b);
  Genes child(a.size());
  std::uint64_t pool = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((i & 63) == 0) pool = rng();
    child[i] = ((pool >> (i & 63)) & 1u) ? b[i] : a[i];
  }
  return child;
}

void mutate_bitstring(Genes& g, Rng& rng) {
  if (coin(rng))
    simple_bit_mutation(g, rng);
  else
    shuffle_mutation(g, rng);
}

Genes crossover_bitstring(const Genes& a, const Genes& b, Rng& rng) {
  require_same_length(a, b);
  return coin(rng) ? one_point_crossover(a, b, rng) : uniform_crossover(a, b, rng);
}

void two_bit_inversion(Genes& g, Rng& rng) {
  const std::size_t ones = weight(g);
  const std::size_t zeros = g.size() - ones;
  if (ones == 0 || zeros == 0) return;
  std::size_t which_one = uniform_index(rng, ones);
  std::size_t which_zero = uniform_index(rng, zeros);
  std::size_t one_pos = g.size(), zero_pos = g.size();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i]) {
      if (which_one-- == 0) one_pos = i;
    } else {
      if (which_zero-- == 0) zero_pos = i;
    }
  }
  g[one_pos] = 0;
  g[zero_pos] = 1;
}

Genes balanced_crossover(const Genes& a, const Genes& b, Rng& rng) {
  require_same_length(a, b);
  const std::size_t k = weight(a);
  if (weight(b) != k)
    throw InvalidInput("parent weights differ: " + std::to_string(k) + " vs " +
                       std::to_string(weight(b)));
  const std::size_t max_zeros = a.size() - k;
  Genes child(a.size());
  std::size_t ones = 0, zeros = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint8_t gene;
    if (ones == k)
      gene = 0;
    else if (zeros == max_zeros)
      gene = 1;
    else
      gene = coin(rng) ? b[i] : a[i];
    child[i] = gene;
    (gene ? ones : zeros)++;
  }
  return child;
}

void mutate_wanf(Genes& g, Rng& rng) {
  if (coin(rng))
    two_bit_inversion(g, rng);
  else
    shuffle_mutation(g, rng);
}

Genes crossover_wanf(const Genes& a, const Genes& b, Rng& rng) {
  return balanced_crossover(a, b, rng);
}

}  // namespace hbent
