#include <algorithm>
#include <stdexcept>

#include "hbent/encodings.hpp"
#include "hbent/errors.hpp"
#include "hbent/kernels.hpp"

namespace hbent {

std::string_view encoding_name(Encoding e) noexcept {
  switch (e) {
    case Encoding::gp:
      return "gp";
    case Encoding::tt:
      return "tt";
    case Encoding::ranf:
      return "ranf";
    case Encoding::wanf:
      return "wanf";
  }
  return "?";
}

std::string_view encoding_label(Encoding e) noexcept {
  switch (e) {
    case Encoding::gp:
      return "GP";
    case Encoding::tt:
      return "TT";
    case Encoding::ranf:
      return "rANF";
    case Encoding::wanf:
      return "wANF";
  }
  return "?";
}

Encoding parse_encoding(std::string_view name) {
  for (Encoding e : {Encoding::gp, Encoding::tt, Encoding::ranf, Encoding::wanf})
    if (name == encoding_name(e) || name == encoding_label(e)) return e;
  throw InvalidInput("unknown encoding '" + std::string(name) + "'");
}

Decoder::Decoder(int n, int d)
    : n_(n),
      d_(d),
      monomials_((check_num_vars(n), homogeneous_monomials(n, d))),
      degree_mask_(degree_mask(n, d)),
      gp_(n) {
  if (d < 0 || d > n) throw InvalidInput("degree must be in [0, n]");
}

Decoded Decoder::repair(const TruthTable& raw) const {
  const auto& k = kernels::active_kernels();
  BitVector bits = raw.bits();
  k.mobius(bits.words(), n_);
  bits &= degree_mask_;
  AnfVector anf(n_, bits);
  k.mobius(bits.words(), n_);
  return {TruthTable(n_, std::move(bits)), std::move(anf)};
}

Decoded Decoder::decode(const GpTree& tree) const { return repair(gp_.evaluate(tree)); }

Decoded Decoder::decode(const TtBitstring& g) const {
  if (g.bits.size() != (std::size_t{1} << n_)) throw InvalidInput("TT genotype length mismatch");
  BitVector bits(g.bits.size());
  for (std::size_t i = 0; i < g.bits.size(); ++i)
    if (g.bits[i]) bits.set(i, true);
  return repair(TruthTable(n_, std::move(bits)));
}

AnfVector Decoder::expand(const Genes& bits) const {
  if (bits.size() != monomials_.size())
    throw InvalidInput("reduced ANF length " + std::to_string(bits.size()) + ", expected " +
                       std::to_string(monomials_.size()));
  AnfVector anf(n_);
  for (std::size_t j = 0; j < bits.size(); ++j)
    if (bits[j]) anf.set(monomials_[j], true);
  return anf;
}

Genes Decoder::reduce(const AnfVector& anf) const {
  Genes bits(monomials_.size());
  for (std::size_t j = 0; j < monomials_.size(); ++j) bits[j] = anf[monomials_[j]];
  return bits;
}

Decoded Decoder::decode(const RanfBitstring& g) const {
  AnfVector anf = expand(g.bits);
  BitVector bits = anf.bits();
  kernels::active_kernels().mobius(bits.words(), n_);
  return {TruthTable(n_, std::move(bits)), std::move(anf)};
}

Decoded Decoder::decode(const WanfBitstring& g) const {
  if (weight(g.bits) != static_cast<std::size_t>(g.k))
    throw std::logic_error("wANF genotype weight " + std::to_string(weight(g.bits)) +
                           " != k=" + std::to_string(g.k) + " (operator defect)");
  AnfVector anf = expand(g.bits);
  BitVector bits = anf.bits();
  kernels::active_kernels().mobius(bits.words(), n_);
  return {TruthTable(n_, std::move(bits)), std::move(anf)};
}

Decoded Decoder::decode(const Genotype& g) const {
  return std::visit([this](const auto& x) { return decode(x); }, g);
}

Decoded decode_gp(const GpTree& tree, int n, int d) { return Decoder(n, d).decode(tree); }
Decoded decode_tt(const TtBitstring& g, int d) { return Decoder(g.n, d).decode(g); }
Decoded decode_ranf(const RanfBitstring& g) { return Decoder(g.n, g.d).decode(g); }
Decoded decode_wanf(const WanfBitstring& g) { return Decoder(g.n, g.d).decode(g); }

namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

Genes random_genes(std::size_t len, Rng& rng) {
  Genes g(len);
  std::uint64_t pool = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if ((i & 63) == 0) pool = rng();
    g[i] = (pool >> (i & 63)) & 1u;
  }
  return g;
}

}  // namespace

Genotype random_genotype(Encoding encoding, int n, int d, std::optional<int> k, Rng& rng,
                         const GpConfig& config) {
  check_num_vars(n);
  if (d < 0 || d > n) throw InvalidInput("degree must be in [0, n]");
  const std::size_t len = binomial(n, d);
  if (k && (*k < 0 || static_cast<std::size_t>(*k) > len))
    throw InvalidInput("k=" + std::to_string(*k) + " outside [0, C(n,d)=" + std::to_string(len) +
                       "]");
  switch (encoding) {
    case Encoding::gp:
      return random_tree(n, rng, config);
    case Encoding::tt:
      return TtBitstring{n, random_genes(std::size_t{1} << n, rng)};
    case Encoding::ranf:
      return RanfBitstring{n, d, random_genes(len, rng)};
    case Encoding::wanf: {
      if (!k) throw InvalidInput("wANF requires k");
      Genes g(len, 0);
      std::fill_n(g.begin(), *k, std::uint8_t{1});
      std::shuffle(g.begin(), g.end(), rng);
      return WanfBitstring{n, d, *k, std::move(g)};
    }
  }
  throw InvalidInput("unknown encoding");
}

Genotype crossover(const Genotype& a, const Genotype& b, Rng& rng, const GpConfig& config) {
  if (a.index() != b.index()) throw InvalidInput("crossover between different encodings");
  return std::visit(
      [&](const auto& x) -> Genotype {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, GpTree>) {
          return crossover_gp(x, y, rng, config);
        } else if constexpr (std::is_same_v<T, WanfBitstring>) {
          return WanfBitstring{x.n, x.d, x.k, crossover_wanf(x.bits, y.bits, rng)};
        } else {
          T child = x;
          child.bits = crossover_bitstring(x.bits, y.bits, rng);
          return child;
        }
      },
      a);
}

void mutate(Genotype& g, int n, Rng& rng, const GpConfig& config) {
  std::visit(
      [&](auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GpTree>) {
          x = subtree_mutation(x, n, rng, config);
        } else if constexpr (std::is_same_v<T, WanfBitstring>) {
          mutate_wanf(x.bits, rng);
        } else {
          mutate_bitstring(x.bits, rng);
        }
      },
      g);
}

std::string serialize(const Genotype& g) {
  return std::visit(
      [](const auto& x) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, GpTree>)
          return x.to_string();
        else
          return genes_to_string(x.bits);
      },
      g);
}

}  // namespace hbent
