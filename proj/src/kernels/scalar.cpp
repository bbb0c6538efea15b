#include <algorithm>
#include <cstdlib>

#include "hbent/kernels.hpp"

namespace hbent::kernels {
namespace {

constexpr std::uint64_t kLowMasks[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

void mobius_scalar(std::span<std::uint64_t> words, int n) {
  const int in_word = std::min(n, 6);
  for (auto& w : words) {
    for (int s = 0; s < in_word; ++s) w ^= (w & kLowMasks[s]) << (1u << s);
  }
  const std::size_t count = words.size();
  for (std::size_t h = 1; h < count; h <<= 1) {
    for (std::size_t block = 0; block < count; block += 2 * h) {
      for (std::size_t j = block; j < block + h; ++j) words[j + h] ^= words[j];
    }
  }
}

void fwht_scalar(std::span<std::int32_t> v) {
  const std::size_t size = v.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * h) {
      for (std::size_t j = block; j < block + h; ++j) {
        const std::int32_t a = v[j];
        const std::int32_t b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

void bits_to_signs_scalar(std::span<const std::uint64_t> words, std::span<std::int32_t> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    const bool bit = (words[i >> 6] >> (i & 63)) & 1u;
    out[i] = bit ? -1 : 1;
  }
}

SpectrumExtremes extremes_scalar(std::span<const std::int32_t> v) {
  SpectrumExtremes r;
  for (auto x : v) {
    const std::int32_t a = x < 0 ? -x : x;
    if (a > r.max_abs) {
      r.max_abs = a;
      r.count = 1;
    } else if (a == r.max_abs) {
      ++r.count;
    }
  }
  return r;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{"scalar", mobius_scalar, fwht_scalar, bits_to_signs_scalar,
                                 extremes_scalar};
  return table;
}

}  // namespace hbent::kernels
