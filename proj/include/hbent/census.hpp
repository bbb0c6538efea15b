#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hbent/boolfn.hpp"

namespace hbent {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Enumeration refuses more than 2^24 candidates.
inline constexpr int kMaxEnumerationTerms = 24;

BigInt binomial_big(int n, int k);

/// |HB_{n,2}| = 2^{h^2-h} prod_{i<h} (2^{2i+1}-1), h = n/2. Throws InvalidInput for odd n.
BigInt quadratic_bent_count(int n);
/// prod_{i<h} (1 - 2^{-(2i+1)}), the exact value of |HB_{n,2}| / 2^{C(n,2)}.
Rational quadratic_density_product(int n);
/// Partial product prod_{i<terms} (1 - (1/2)(1/4)^i) of (1/2; 1/4)_inf.
double asymptotic_quadratic_density(int terms);

/// Callback receives the candidate index (bit j = j-th degree-d monomial
/// present) and the bent function's ANF, in ascending candidate order.
using BentVisitor = std::function<void(std::uint64_t candidate, const AnfVector& anf)>;

/// Exhaustive scan of homogeneous degree-d functions (optionally only those
/// with k_filter terms) for bent ones. Candidate ranges are split across
/// `workers` threads and merged in index order. Throws InfeasibleEnumeration
/// when C(n,d) > 24 and InvalidInput for odd n.
void for_each_homogeneous_bent(int n, int d, std::optional<int> k_filter, const BentVisitor& visit,
                               int workers = 1);
std::vector<AnfVector> enumerate_homogeneous_bent(int n, int d, std::optional<int> k_filter = {},
                                                  int workers = 1);

/// Rank criterion: a homogeneous quadratic function is bent iff its
/// symplectic matrix over F_2 is nonsingular. Throws InvalidInput for other
/// degrees.
bool quadratic_bent_oracle(const AnfVector& anf);

enum class CensusSource { enumeration, closed_form, published_reference };

struct TermDensity {
  int k = 0;
  BigInt count;
  BigInt space;  // C(C(n,d), k)
  Rational density() const { return Rational(count, space); }
};

struct DensityReport {
  int n = 0;
  int d = 0;
  CensusSource source = CensusSource::enumeration;
  BigInt total_count;
  BigInt space;  // 2^{C(n,d)}
  std::vector<TermDensity> by_terms;  // nonzero rows, ascending k

  Rational density() const { return Rational(total_count, space); }
};

/// Enumerates when feasible, otherwise falls back to the quadratic closed
/// form (no per-k rows) or, for (8, 3), to the embedded published counts.
DensityReport density_report(int n, int d, int workers = 1);

/// Six significant digits.
std::string format_decimal(const Rational& r, int significant = 6);
std::string report_text(const DensityReport& report);
/// Header: k,count,density_numerator,density_denominator,density_decimal
std::string report_csv(const DensityReport& report);

// Reference data

struct PublishedCubicCount {
  int k;
  std::uint64_t count;
  double density;  // as printed
};

inline constexpr std::uint64_t kPublishedCubicBentN6 = 30;
inline constexpr std::uint64_t kPublishedCubicBentN8 = 293'760;

/// Counts of cubic homogeneous bent functions in 8 variables by term count.
std::span<const PublishedCubicCount> published_cubic_counts_n8();
/// Term counts for which cubic homogeneous bent functions are known to exist.
/// Throws UnknownData for n outside {6, 8, 10, 12, 16}.
std::vector<int> known_cubic_k_values(int n);

}  // namespace hbent
