#include "hbent/fitness.hpp"

#include <cstdio>
#include <cstdlib>

#include "hbent/errors.hpp"
#include "hbent/kernels.hpp"

namespace hbent {

std::int64_t FitnessValue::integer_part() const noexcept {
  const std::int64_t scale = std::int64_t{1} << n;
  // scaled is a multiple of scale on the penalty branch, nonnegative otherwise
  return scaled >= 0 ? scaled / scale : -((-scaled + scale - 1) / scale);
}

std::string format_fitness(const FitnessValue& f) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", f.value());
  return buf;
}

std::string_view fitness_name(FitnessKind kind) noexcept {
  return kind == FitnessKind::bent ? "bent" : "bent-k";
}

FitnessKind parse_fitness(std::string_view name) {
  if (name == "bent") return FitnessKind::bent;
  if (name == "bent-k" || name == "bent_k") return FitnessKind::bent_k;
  throw InvalidInput("unknown fitness '" + std::string(name) + "'");
}

int count_max_values(const WalshSpectrum& spectrum) {
  return static_cast<int>(kernels::active_kernels().extremes(spectrum.values).count);
}

namespace {

FitnessValue from_extremes(int n, kernels::SpectrumExtremes ext) {
  const std::int64_t size = std::int64_t{1} << n;
  FitnessValue f;
  f.n = n;
  f.nl = static_cast<int>(size / 2 - ext.max_abs / 2);
  f.max_count = static_cast<int>(ext.count);
  f.scaled = static_cast<std::int64_t>(f.nl) * size + (size - f.max_count);
  return f;
}

FitnessValue penalty_value(int n, int terms, int k) {
  FitnessValue f;
  f.n = n;
  f.penalty = std::abs(terms - k);
  f.scaled = -static_cast<std::int64_t>(*f.penalty) * (std::int64_t{1} << n);
  return f;
}

}  // namespace

FitnessValue fitness_from_spectrum(const WalshSpectrum& spectrum) {
  return from_extremes(spectrum.n, kernels::active_kernels().extremes(spectrum.values));
}

FitnessValue fit_bent(const TruthTable& tt) { return fitness_from_spectrum(walsh_hadamard(tt)); }

FitnessValue fit_bent_k(const AnfVector& anf, const TruthTable& tt, int k) {
  const auto terms = static_cast<int>(monomial_count(anf));
  if (terms != k) return penalty_value(anf.num_vars(), terms, k);
  return fit_bent(tt);
}

FitnessFunction::FitnessFunction(FitnessKind kind, int n, std::optional<int> k)
    : kind_(kind), n_(n), k_(k), scratch_(std::size_t{1} << n) {
  check_num_vars(n);
  if (kind == FitnessKind::bent_k && !k) throw InvalidInput("bent-k fitness requires k");
}

FitnessValue FitnessFunction::from_truth_table(const TruthTable& tt) {
  const auto& kern = kernels::active_kernels();
  kern.bits_to_signs(tt.bits().words(), scratch_);
  kern.fwht(scratch_);
  ++spectra_;
  return from_extremes(n_, kern.extremes(scratch_));
}

FitnessValue FitnessFunction::operator()(const Decoded& f) {
  if (kind_ == FitnessKind::bent_k) {
    const auto terms = static_cast<int>(monomial_count(f.anf));
    if (terms != *k_) return penalty_value(n_, terms, *k_);
  }
  return from_truth_table(f.tt);
}

}  // namespace hbent
