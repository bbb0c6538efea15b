#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hbent/random.hpp"

namespace hbent {

/// One gene per element, each 0 or 1.
using Genes = std::vector<std::uint8_t>;

/// Full truth table genotype: 2^n genes.
struct TtBitstring {
  int n = 0;
  Genes bits;
  friend bool operator==(const TtBitstring&, const TtBitstring&) = default;
};

/// One gene per degree-d monomial, in increasing mask order: C(n, d) genes.
struct RanfBitstring {
  int n = 0;
  int d = 0;
  Genes bits;
  friend bool operator==(const RanfBitstring&, const RanfBitstring&) = default;
};

/// Reduced ANF with exactly k ones at all times.
struct WanfBitstring {
  int n = 0;
  int d = 0;
  int k = 0;
  Genes bits;
  friend bool operator==(const WanfBitstring&, const WanfBitstring&) = default;
};

std::size_t weight(const Genes& g);
std::string genes_to_string(const Genes& g);
/// Throws ParseError on characters other than '0'/'1'.
Genes genes_from_string(std::string_view s);

// Unconstrained bitstring operators (TT and rANF)

void simple_bit_mutation(Genes& g, Rng& rng);
/// Uniformly permutes the inclusive segment between two positions drawn
/// with replacement. Also the "mixing" mutation of the weighted encoding.
void shuffle_mutation(Genes& g, Rng& rng);
/// Cut in [1, len-1]: genes [0, cut) from a, [cut, len) from b.
Genes one_point_crossover(const Genes& a, const Genes& b, std::size_t cut);
Genes one_point_crossover(const Genes& a, const Genes& b, Rng& rng);
Genes uniform_crossover(const Genes& a, const Genes& b, Rng& rng);

/// Simple bit or shuffle mutation, picked with equal probability.
void mutate_bitstring(Genes& g, Rng& rng);
/// One-point or uniform crossover, picked with equal probability.
/// Throws InvalidInput on length mismatch.
Genes crossover_bitstring(const Genes& a, const Genes& b, Rng& rng);

// Weight-preserving operators (wANF)

/// Flips one random 1 and one random 0; identity when either is absent.
void two_bit_inversion(Genes& g, Rng& rng);
/// Left-to-right scan taking each gene from a random parent, clamped so the
/// child has exactly weight(a) ones. Throws InvalidInput if the parents'
/// weights or lengths differ.
Genes balanced_crossover(const Genes& a, const Genes& b, Rng& rng);
void mutate_wanf(Genes& g, Rng& rng);
Genes crossover_wanf(const Genes& a, const Genes& b, Rng& rng);

}  // namespace hbent
