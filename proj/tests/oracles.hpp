#pragma once

// Slow, definition-level reference implementations and random helpers
// shared by the unit tests.

#include <bit>
#include <cstdint>
#include <vector>

#include "hbent/boolfn.hpp"
#include "hbent/random.hpp"

namespace hbent::testing {

inline std::vector<std::int32_t> naive_walsh(const TruthTable& tt) {
  const std::size_t size = tt.size();
  std::vector<std::int32_t> w(size, 0);
  for (std::size_t a = 0; a < size; ++a) {
    std::int32_t sum = 0;
    for (std::size_t x = 0; x < size; ++x) {
      const bool exponent = tt[x] ^ (std::popcount(a & x) & 1);
      sum += exponent ? -1 : 1;
    }
    w[a] = sum;
  }
  return w;
}

/// a_u = XOR of f(x) over all x whose support is contained in u.
inline AnfVector naive_mobius(const TruthTable& tt) {
  AnfVector anf(tt.num_vars());
  for (std::size_t u = 0; u < tt.size(); ++u) {
    bool acc = false;
    for (std::size_t x = 0; x < tt.size(); ++x)
      if ((x & ~u) == 0) acc ^= tt[x];
    anf.set(u, acc);
  }
  return anf;
}

/// Evaluates the ANF at every input by summing the monomials it covers.
inline TruthTable naive_anf_eval(const AnfVector& anf) {
  TruthTable tt(anf.num_vars());
  for (std::size_t x = 0; x < anf.size(); ++x) {
    bool acc = false;
    for (std::size_t u = 0; u < anf.size(); ++u)
      if (anf[u] && (u & ~x) == 0) acc ^= true;
    tt.set(x, acc);
  }
  return tt;
}

inline TruthTable random_tt(int n, Rng& rng) {
  TruthTable tt(n);
  for (auto& w : tt.bits().words()) w = rng();
  if (tt.size() < 64) tt.bits().words()[0] &= (std::uint64_t{1} << tt.size()) - 1;
  return tt;
}

inline AnfVector anf_from_masks(int n, std::initializer_list<std::uint32_t> masks) {
  AnfVector anf(n);
  for (auto m : masks) anf.set(m, true);
  return anf;
}

/// x1x2 + x3x4 + ... + x_{n-1}x_n.
inline AnfVector maiorana_quadratic(int n) {
  AnfVector anf(n);
  for (int j = 1; j < n; j += 2) anf.set(variable_bit(n, j) | variable_bit(n, j + 1), true);
  return anf;
}

}  // namespace hbent::testing
