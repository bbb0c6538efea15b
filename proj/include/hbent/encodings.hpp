#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hbent/bitstring.hpp"
#include "hbent/boolfn.hpp"
#include "hbent/gp.hpp"
#include "hbent/random.hpp"

namespace hbent {

enum class Encoding { gp, tt, ranf, wanf };

std::string_view encoding_name(Encoding e) noexcept;  // "gp", "tt", "ranf", "wanf"
std::string_view encoding_label(Encoding e) noexcept;  // "GP", "TT", "rANF", "wANF"
Encoding parse_encoding(std::string_view name);

using Genotype = std::variant<GpTree, TtBitstring, RanfBitstring, WanfBitstring>;

/// Corrected function: ANF restricted to degree d, and its truth table.
struct Decoded {
  TruthTable tt;
  AnfVector anf;
};

/// Decoding context for one (n, d): monomial index, degree mask and GP
/// variable tables are built once and reused for every evaluation.
class Decoder {
 public:
  Decoder(int n, int d);

  int num_vars() const noexcept { return n_; }
  int degree() const noexcept { return d_; }
  const std::vector<std::uint32_t>& monomials() const noexcept { return monomials_; }

  /// Möbius, drop monomials of other degrees, Möbius back.
  Decoded repair(const TruthTable& raw) const;
  Decoded decode(const GpTree& tree) const;
  Decoded decode(const TtBitstring& g) const;
  Decoded decode(const RanfBitstring& g) const;
  /// Throws std::logic_error if the weight invariant is broken.
  Decoded decode(const WanfBitstring& g) const;
  Decoded decode(const Genotype& g) const;

  /// Expands reduced-ANF genes into a full ANF.
  AnfVector expand(const Genes& bits) const;
  /// Inverse of expand for a homogeneous degree-d ANF.
  Genes reduce(const AnfVector& anf) const;

  TruthTable raw_truth_table(const GpTree& tree) const { return gp_.evaluate(tree); }

 private:
  int n_;
  int d_;
  std::vector<std::uint32_t> monomials_;
  BitVector degree_mask_;
  GpEvaluator gp_;
};

Decoded decode_gp(const GpTree& tree, int n, int d);
Decoded decode_tt(const TtBitstring& g, int d);
Decoded decode_ranf(const RanfBitstring& g);
Decoded decode_wanf(const WanfBitstring& g);

/// TT/rANF: i.i.d. uniform genes; wANF: uniform k-subset; GP: ramped
/// half-and-half. Throws InvalidInput for k > C(n, d) or a missing k under wANF.
Genotype random_genotype(Encoding encoding, int n, int d, std::optional<int> k, Rng& rng,
                         const GpConfig& config = {});

/// Crossover for two genotypes of the same alternative.
Genotype crossover(const Genotype& a, const Genotype& b, Rng& rng, const GpConfig& config);
/// The encoding's mutation operator (subtree mutation for GP).
void mutate(Genotype& g, int n, Rng& rng, const GpConfig& config);

/// Bitstrings as 0/1 text, trees as prefix s-expressions.
std::string serialize(const Genotype& g);

}  // namespace hbent
