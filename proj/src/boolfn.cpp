#include "hbent/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>

#include "hbent/errors.hpp"
#include "hbent/kernels.hpp"

namespace hbent {

void check_num_vars(int n) {
  if (n < 1 || n > kMaxVars)
    throw InvalidInput("variable count must be in [1, " + std::to_string(kMaxVars) +
                       "], got " + std::to_string(n));
}

template <class Tag>
BooleanVector<Tag>::BooleanVector(int n, BitVector bits) : n_(n), bits_(std::move(bits)) {
  check_num_vars(n);
  if (bits_.size() != (std::size_t{1} << n))
    throw InvalidInput("expected " + std::to_string(std::size_t{1} << n) + " bits, got " +
                       std::to_string(bits_.size()));
}

template class BooleanVector<TruthTableTag>;
template class BooleanVector<AnfTag>;

AnfVector mobius_transform(const TruthTable& tt) {
  BitVector bits = tt.bits();
  kernels::active_kernels().mobius(bits.words(), tt.num_vars());
  return AnfVector(tt.num_vars(), std::move(bits));
}

TruthTable anf_to_truth_table(const AnfVector& anf) {
  BitVector bits = anf.bits();
  kernels::active_kernels().mobius(bits.words(), anf.num_vars());
  return TruthTable(anf.num_vars(), std::move(bits));
}

WalshSpectrum walsh_hadamard(const TruthTable& tt) {
  const auto& k = kernels::active_kernels();
  WalshSpectrum spectrum{tt.num_vars(), std::vector<std::int32_t>(tt.size())};
  k.bits_to_signs(tt.bits().words(), spectrum.values);
  k.fwht(spectrum.values);
  return spectrum;
}

int nonlinearity(const WalshSpectrum& spectrum) {
  const auto ext = kernels::active_kernels().extremes(spectrum.values);
  return (1 << (spectrum.n - 1)) - ext.max_abs / 2;
}

int bent_nonlinearity(int n) {
  if (n % 2 != 0) throw InvalidInput("bent functions exist only for even n");
  return (1 << (n - 1)) - (1 << (n / 2 - 1));
}

bool is_bent(const WalshSpectrum& spectrum) {
  if (spectrum.n % 2 != 0) return false;
  const std::int32_t target = std::int32_t{1} << (spectrum.n / 2);
  return std::all_of(spectrum.values.begin(), spectrum.values.end(),
                     [target](std::int32_t v) { return v == target || v == -target; });
}

int algebraic_degree(const AnfVector& anf) {
  int degree = 0;
  for (std::size_t a = 0; a < anf.size(); ++a)
    if (anf[a]) degree = std::max(degree, std::popcount(static_cast<std::uint32_t>(a)));
  return degree;
}

bool is_homogeneous(const AnfVector& anf, int d) {
  bool any = false;
  for (std::size_t a = 0; a < anf.size(); ++a) {
    if (!anf[a]) continue;
    if (std::popcount(static_cast<std::uint32_t>(a)) != d) return false;
    any = true;
  }
  return any;
}

BitVector degree_mask(int n, int d) {
  BitVector mask(std::size_t{1} << n);
  for (std::size_t a = 0; a < mask.size(); ++a)
    if (std::popcount(static_cast<std::uint32_t>(a)) == d) mask.set(a, true);
  return mask;
}

AnfVector homogeneity_repair(const AnfVector& anf, int d) {
  AnfVector out = anf;
  out.bits() &= degree_mask(anf.num_vars(), d);
  return out;
}

std::size_t monomial_count(const AnfVector& anf) { return anf.bits().popcount(); }

std::vector<std::uint32_t> homogeneous_monomials(int n, int d) {
  check_num_vars(n);
  std::vector<std::uint32_t> masks;
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << n); ++a)
    if (std::popcount(a) == d) masks.push_back(a);
  return masks;
}

// Hex: the bit string b_0 b_1 ... b_{N-1} read as a big-endian binary number,
// so the first digit carries b_0..b_3 with b_0 as its high bit.

std::string to_hex(const BitVector& bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = (bits.size() + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned v = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t i = 4 * d + j;
      v = (v << 1) | ((i < bits.size() && bits.get(i)) ? 1u : 0u);
    }
    out[d] = kDigits[v];
  }
  return out;
}

BitVector bits_from_hex(std::string_view hex) {
  if (hex.empty()) throw ParseError("empty hex string", 0);
  BitVector bits(4 * hex.size());
  for (std::size_t d = 0; d < hex.size(); ++d) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[d])));
    unsigned v;
    if (c >= '0' && c <= '9')
      v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      v = static_cast<unsigned>(c - 'a' + 10);
    else
      throw ParseError(std::string("invalid hex digit '") + hex[d] + "'", d);
    for (std::size_t j = 0; j < 4; ++j) bits.set(4 * d + j, (v >> (3 - j)) & 1u);
  }
  return bits;
}

namespace {

int vars_from_hex_length(std::string_view hex) {
  const std::size_t bits = 4 * hex.size();
  if (!std::has_single_bit(bits))
    throw ParseError("hex length " + std::to_string(hex.size()) + " is not 2^(n-2)", hex.size());
  const int n = std::countr_zero(bits);
  if (n > kMaxVars) throw ParseError("more than 2^16 bits", hex.size());
  return n;
}

}  // namespace

TruthTable truth_table_from_hex(std::string_view hex) {
  const int n = vars_from_hex_length(hex);
  return TruthTable(n, bits_from_hex(hex));
}

AnfVector anf_from_hex(std::string_view hex) {
  const int n = vars_from_hex_length(hex);
  return AnfVector(n, bits_from_hex(hex));
}

std::string monomial_name(int n, std::uint32_t mask) {
  if (mask == 0) return "1";
  std::string out;
  for (int j = 1; j <= n; ++j) {
    if (!(mask & variable_bit(n, j))) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(j);
  }
  return out;
}

std::string to_monomial_form(const AnfVector& anf) {
  std::string out;
  for (std::size_t a = 0; a < anf.size(); ++a) {
    if (!anf[a]) continue;
    if (!out.empty()) out += " + ";
    out += monomial_name(anf.num_vars(), static_cast<std::uint32_t>(a));
  }
  return out.empty() ? "0" : out;
}

namespace {

class MonomialParser {
 public:
  explicit MonomialParser(std::string_view text) : text_(text) {}

  struct Factor {
    int index;  // 1-based
    std::size_t position;
  };

  // Calls on_term(factors) once per non-zero term.
  template <class OnTerm>
  void parse(OnTerm&& on_term) {
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    while (true) {
      std::vector<Factor> vars;
      bool constant_one = false;
      bool zero = false;
      parse_term(vars, constant_one, zero);
      if (!zero) on_term(vars);
      skip_space();
      if (at_end()) break;
      if (text_[pos_] != '+') throw ParseError("expected '+'", pos_);
      ++pos_;
      skip_space();
    }
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void parse_term(std::vector<Factor>& vars, bool& one, bool& zero) {
    while (true) {
      skip_space();
      if (at_end()) throw ParseError("expected a factor", pos_);
      const char c = text_[pos_];
      if (c == '1') {
        ++pos_;
        one = true;
      } else if (c == '0') {
        ++pos_;
        zero = true;
      } else if (c == 'x' || c == 'X') {
        const std::size_t factor_pos = pos_++;
        const std::size_t start = pos_;
        int index = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          index = index * 10 + (text_[pos_] - '0');
          if (index > 1000) throw ParseError("variable index too large", start);
          ++pos_;
        }
        if (pos_ == start) throw ParseError("expected variable index after 'x'", start);
        if (index < 1) throw ParseError("variable indices start at 1", start);
        vars.push_back({index, factor_pos});
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      }
      skip_space();
      if (at_end()) return;
      if (text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      // Juxtaposition ("x1x2", "x1 x2") is multiplication too.
      if (text_[pos_] != 'x' && text_[pos_] != 'X') return;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

int max_variable_in_monomial_form(std::string_view text) {
  int max_var = 0;
  MonomialParser(text).parse([&](const auto& vars) {
    for (const auto& f : vars) max_var = std::max(max_var, f.index);
  });
  return max_var;
}

AnfVector parse_monomial_form(std::string_view text, int n) {
  AnfVector anf(n);
  MonomialParser(text).parse([&](const auto& vars) {
    std::uint32_t mask = 0;
    for (const auto& f : vars) {
      if (f.index > n)
        throw ParseError(
            "variable x" + std::to_string(f.index) + " exceeds n=" + std::to_string(n),
            f.position);
      mask |= variable_bit(n, f.index);
    }
    anf.flip(mask);
  });
  return anf;
}

}  // namespace hbent
