#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Inner loops of the transforms. Every kernel set must produce results
// bit-identical to the scalar reference.

namespace hbent::kernels {

struct SpectrumExtremes {
  std::int32_t max_abs = 0;
  std::uint32_t count = 0;  // entries with |v| == max_abs
};

struct KernelTable {
  std::string_view name;
  // In-place binary Möbius butterfly over the 2^n bits packed in `words`
  // (ceil(2^n / 64) words, unused high bits zero).
  void (*mobius)(std::span<std::uint64_t> words, int n);
  // In-place unnormalized fast Walsh–Hadamard transform; size is a power of two.
  void (*fwht)(std::span<std::int32_t> values);
  // out[i] = bit i of words ? -1 : +1
  void (*bits_to_signs)(std::span<const std::uint64_t> words, std::span<std::int32_t> out);
  SpectrumExtremes (*extremes)(std::span<const std::int32_t> values);
};

const KernelTable& scalar_kernels() noexcept;

/// AVX2 table, or nullptr when not compiled in or not supported by the CPU.
const KernelTable* avx2_kernels() noexcept;

/// Best table for this host. HBENT_KERNELS=scalar in the environment forces
/// the reference path. Chosen once, on first use.
const KernelTable& active_kernels() noexcept;

}  // namespace hbent::kernels
