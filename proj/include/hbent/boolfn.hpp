#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hbent/bitvec.hpp"

namespace hbent {

inline constexpr int kMaxVars = 16;

/// Throws InvalidInput unless 1 <= n <= kMaxVars.
void check_num_vars(int n);

/// Fixed-length 2^n bit column. Index i encodes the input (x_1, ..., x_n)
/// with x_1 as the most significant bit. The same convention indexes
/// truth tables and ANF monomial masks, hence one template for both.
template <class Tag>
class BooleanVector {
 public:
  explicit BooleanVector(int n) : n_(n), bits_((check_num_vars(n), std::size_t{1} << n)) {}
  BooleanVector(int n, BitVector bits);

  int num_vars() const noexcept { return n_; }
  std::size_t size() const noexcept { return bits_.size(); }

  bool operator[](std::size_t i) const noexcept { return bits_.get(i); }
  void set(std::size_t i, bool v) noexcept { bits_.set(i, v); }
  void flip(std::size_t i) noexcept { bits_.flip(i); }

  const BitVector& bits() const noexcept { return bits_; }
  BitVector& bits() noexcept { return bits_; }

  friend bool operator==(const BooleanVector&, const BooleanVector&) = default;

 private:
  int n_;
  BitVector bits_;
};

struct TruthTableTag {};
struct AnfTag {};

using TruthTable = BooleanVector<TruthTableTag>;
/// Coefficient at mask a is h(a), the coefficient of the monomial prod_{j in a} x_j.
using AnfVector = BooleanVector<AnfTag>;

struct WalshSpectrum {
  int n = 0;
  std::vector<std::int32_t> values;
};

// Transforms

AnfVector mobius_transform(const TruthTable& tt);
TruthTable anf_to_truth_table(const AnfVector& anf);
WalshSpectrum walsh_hadamard(const TruthTable& tt);

// Properties

int nonlinearity(const WalshSpectrum& spectrum);
/// 2^{n-1} - 2^{n/2-1}; n must be even.
int bent_nonlinearity(int n);
/// Odd n is never bent.
bool is_bent(const WalshSpectrum& spectrum);
/// Degree of the zero function is 0.
int algebraic_degree(const AnfVector& anf);
/// The zero function is not homogeneous of any degree.
bool is_homogeneous(const AnfVector& anf, int d);
AnfVector homogeneity_repair(const AnfVector& anf, int d);
std::size_t monomial_count(const AnfVector& anf);

/// Bit vector with ones exactly at the masks of Hamming weight d.
BitVector degree_mask(int n, int d);

/// Weight-d masks of n variables in increasing integer order.
std::vector<std::uint32_t> homogeneous_monomials(int n, int d);

/// Mask bit used for variable x_j (1-based).
constexpr std::uint32_t variable_bit(int n, int j) { return std::uint32_t{1} << (n - j); }

// Text forms

std::string to_hex(const BitVector& bits);
BitVector bits_from_hex(std::string_view hex);
inline std::string to_hex(const TruthTable& tt) { return to_hex(tt.bits()); }
inline std::string to_hex(const AnfVector& anf) { return to_hex(anf.bits()); }
/// n is derived from the digit count (4 * digits = 2^n).
TruthTable truth_table_from_hex(std::string_view hex);
AnfVector anf_from_hex(std::string_view hex);

std::string monomial_name(int n, std::uint32_t mask);
/// "x1*x2 + x3*x4*x5", terms in increasing mask order; "0" for the zero function.
std::string to_monomial_form(const AnfVector& anf);
/// Inverse of to_monomial_form. Throws ParseError on malformed text or a
/// variable index above n.
AnfVector parse_monomial_form(std::string_view text, int n);
/// Largest variable index mentioned in a monomial-form string (0 if none).
int max_variable_in_monomial_form(std::string_view text);

}  // namespace hbent
