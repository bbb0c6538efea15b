#include <immintrin.h>

#include <bit>

#include "hbent/kernels.hpp"

namespace hbent::kernels {

const KernelTable& avx2_table() noexcept;

namespace {

constexpr std::uint64_t kLowMasks[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

void mobius_avx2(std::span<std::uint64_t> words, int n) {
  const std::size_t count = words.size();
  if (count < 4) {
    scalar_kernels().mobius(words, n);
    return;
  }
  // count >= 4 implies n >= 8, so all six in-word stages apply.
  std::uint64_t* p = words.data();
  const __m256i lane13 = _mm256_set_epi64x(-1, 0, -1, 0);
  const __m256i lane23 = _mm256_set_epi64x(-1, -1, 0, 0);
  for (std::size_t i = 0; i < count; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    for (int s = 0; s < 6; ++s) {
      const __m256i m = _mm256_set1_epi64x(static_cast<long long>(kLowMasks[s]));
      v = _mm256_xor_si256(v, _mm256_slli_epi64(_mm256_and_si256(v, m), 1 << s));
    }
    // word strides 1 and 2 inside the register
    __m256i sw = _mm256_permute4x64_epi64(v, 0b10110001);
    v = _mm256_xor_si256(v, _mm256_and_si256(sw, lane13));
    sw = _mm256_permute4x64_epi64(v, 0b01001110);
    v = _mm256_xor_si256(v, _mm256_and_si256(sw, lane23));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p + i), v);
  }
  for (std::size_t h = 4; h < count; h <<= 1) {
    for (std::size_t block = 0; block < count; block += 2 * h) {
      for (std::size_t j = block; j < block + h; j += 4) {
        const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + j));
        const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + j + h));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(p + j + h), _mm256_xor_si256(lo, hi));
      }
    }
  }
}

void fwht_avx2(std::span<std::int32_t> values) {
  const std::size_t size = values.size();
  if (size < 8) {
    scalar_kernels().fwht(values);
    return;
  }
  std::int32_t* p = values.data();
  for (std::size_t i = 0; i < size; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    // lanes with the stride bit set take partner - self
    __m256i sw = _mm256_shuffle_epi32(v, 0b10110001);
    v = _mm256_blend_epi32(_mm256_add_epi32(v, sw), _mm256_sub_epi32(sw, v), 0b10101010);
    sw = _mm256_shuffle_epi32(v, 0b01001110);
    v = _mm256_blend_epi32(_mm256_add_epi32(v, sw), _mm256_sub_epi32(sw, v), 0b11001100);
    sw = _mm256_permute2x128_si256(v, v, 0x01);
    v = _mm256_blend_epi32(_mm256_add_epi32(v, sw), _mm256_sub_epi32(sw, v), 0b11110000);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p + i), v);
  }
  for (std::size_t h = 8; h < size; h <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * h) {
      for (std::size_t j = block; j < block + h; j += 8) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + j));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + j + h));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(p + j), _mm256_add_epi32(a, b));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(p + j + h), _mm256_sub_epi32(a, b));
      }
    }
  }
}

void bits_to_signs_avx2(std::span<const std::uint64_t> words, std::span<std::int32_t> out) {
  const std::size_t size = out.size();
  if (size < 8) {
    scalar_kernels().bits_to_signs(words, out);
    return;
  }
  const __m256i probe = _mm256_setr_epi32(1, 2, 4, 8, 16, 32, 64, 128);
  const __m256i one = _mm256_set1_epi32(1);
  for (std::size_t i = 0; i < size; i += 8) {
    const auto byte = static_cast<int>((words[i >> 6] >> (i & 63)) & 0xFFu);
    const __m256i hit =
        _mm256_cmpeq_epi32(_mm256_and_si256(_mm256_set1_epi32(byte), probe), probe);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), _mm256_or_si256(hit, one));
  }
}

SpectrumExtremes extremes_avx2(std::span<const std::int32_t> values) {
  const std::size_t size = values.size();
  if (size < 8) return scalar_kernels().extremes(values);
  const std::int32_t* p = values.data();
  __m256i vmax = _mm256_setzero_si256();
  for (std::size_t i = 0; i < size; i += 8) {
    const __m256i v = _mm256_abs_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i)));
    vmax = _mm256_max_epi32(vmax, v);
  }
  __m128i m = _mm_max_epi32(_mm256_castsi256_si128(vmax), _mm256_extracti128_si256(vmax, 1));
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, 0b01001110));
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, 0b10110001));
  const std::int32_t max_abs = _mm_cvtsi128_si32(m);

  const __m256i target = _mm256_set1_epi32(max_abs);
  std::uint32_t count = 0;
  for (std::size_t i = 0; i < size; i += 8) {
    const __m256i v = _mm256_abs_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i)));
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(v, target)));
    count += static_cast<std::uint32_t>(std::popcount(static_cast<unsigned>(mask)));
  }
  return {max_abs, count};
}

}  // namespace

const KernelTable& avx2_table() noexcept {
  static const KernelTable table{"avx2", mobius_avx2, fwht_avx2, bits_to_signs_avx2,
                                 extremes_avx2};
  return table;
}

}  // namespace hbent::kernels
