#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hbent/boolfn.hpp"
#include "hbent/encodings.hpp"

namespace hbent {

/// Fitness kept as an exact integer scaled by 2^n:
///   nl * 2^n + (2^n - max_count)   on the nonlinearity branch,
///   -|terms - k| * 2^n             on the penalty branch.
/// Ordering compares the scaled integer only.
struct FitnessValue {
  int n = 0;
  std::int64_t scaled = 0;
  int nl = 0;
  int max_count = 0;
  std::optional<int> penalty;  // |terms - k| when penalized

  double value() const noexcept { return static_cast<double>(scaled) / static_cast<double>(std::int64_t{1} << n); }
  bool penalized() const noexcept { return penalty.has_value(); }
  /// Floor of value().
  std::int64_t integer_part() const noexcept;

  friend bool operator==(const FitnessValue& a, const FitnessValue& b) noexcept {
    return a.scaled == b.scaled;
  }
  friend std::strong_ordering operator<=>(const FitnessValue& a, const FitnessValue& b) noexcept {
    return a.scaled <=> b.scaled;
  }
};

/// Decimal with 6 fractional digits.
std::string format_fitness(const FitnessValue& f);

enum class FitnessKind { bent, bent_k };
std::string_view fitness_name(FitnessKind kind) noexcept;  // "bent", "bent-k"
FitnessKind parse_fitness(std::string_view name);

/// Number of spectrum entries whose magnitude equals the maximum.
int count_max_values(const WalshSpectrum& spectrum);

FitnessValue fitness_from_spectrum(const WalshSpectrum& spectrum);
FitnessValue fit_bent(const TruthTable& tt);
/// The spectrum is only computed when the ANF has exactly k monomials.
FitnessValue fit_bent_k(const AnfVector& anf, const TruthTable& tt, int k);

/// Reusable evaluator with scratch space; one per run, not thread-safe.
class FitnessFunction {
 public:
  FitnessFunction(FitnessKind kind, int n, std::optional<int> k);

  FitnessValue operator()(const Decoded& f);

  FitnessKind kind() const noexcept { return kind_; }
  /// Walsh spectra computed so far.
  std::int64_t spectrum_evaluations() const noexcept { return spectra_; }

 private:
  FitnessValue from_truth_table(const TruthTable& tt);

  FitnessKind kind_;
  int n_;
  std::optional<int> k_;
  std::vector<std::int32_t> scratch_;
  std::int64_t spectra_ = 0;
};

}  // namespace hbent
