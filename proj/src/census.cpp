#include "hbent/census.hpp"

#include <bit>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <iomanip>
#include <sstream>
#include <thread>

#include "hbent/errors.hpp"
#include "hbent/kernels.hpp"

namespace hbent {

BigInt binomial_big(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt quadratic_bent_count(int n) {
  if (n < 2 || n % 2 != 0) throw InvalidInput("quadratic bent count needs even n >= 2");
  const int h = n / 2;
  BigInt count = BigInt(1) << (h * h - h);
  for (int i = 0; i < h; ++i) count *= (BigInt(1) << (2 * i + 1)) - 1;
  return count;
}

Rational quadratic_density_product(int n) {
  if (n < 2 || n % 2 != 0) throw InvalidInput("quadratic density needs even n >= 2");
  Rational p = 1;
  for (int i = 0; i < n / 2; ++i) p *= 1 - Rational(BigInt(1), BigInt(1) << (2 * i + 1));
  return p;
}

double asymptotic_quadratic_density(int terms) {
  if (terms < 1) throw InvalidInput("terms must be at least 1");
  double p = 1.0;
  double q = 1.0;
  for (int i = 0; i < terms; ++i) {
    p *= 1.0 - 0.5 * q;
    q *= 0.25;
  }
  return p;
}

namespace {

std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// k-subset with the given rank in ascending integer (colex) order.
std::uint64_t unrank_colex(std::uint64_t rank, int k) {
  std::uint64_t c = 0;
  for (int i = k; i >= 1; --i) {
    int v = i - 1;
    while (binomial_u64(v + 1, i) <= rank) ++v;
    c |= std::uint64_t{1} << v;
    rank -= binomial_u64(v, i);
  }
  return c;
}

std::uint64_t next_same_popcount(std::uint64_t c) {
  const std::uint64_t low = c & (~c + 1);
  const std::uint64_t ripple = c + low;
  return ripple | (((c ^ ripple) >> 2) / low);
}

struct Found {
  std::uint64_t candidate;
  AnfVector anf;
};

class BentScanner {
 public:
  BentScanner(int n, int d)
      : n_(n),
        monomials_(homogeneous_monomials(n, d)),
        kern_(kernels::active_kernels()),
        signs_(std::size_t{1} << n) {
    const std::size_t size = std::size_t{1} << n;
    const std::size_t half = size / 2;
    const std::size_t dev = std::size_t{1} << (n / 2 - 1);
    weight_lo_ = half - dev;
    weight_hi_ = half + dev;
    target_ = std::int32_t{1} << (n / 2);
    for (auto mask : monomials_) {
      AnfVector single(n);
      single.set(mask, true);
      monomial_tables_.push_back(anf_to_truth_table(single).bits());
    }
  }

  BitVector table_of(std::uint64_t candidate) const {
    BitVector tt(std::size_t{1} << n_);
    for (std::size_t j = 0; j < monomials_.size(); ++j)
      if ((candidate >> j) & 1u) tt ^= monomial_tables_[j];
    return tt;
  }

  void toggle(BitVector& tt, std::uint64_t changed) const {
    while (changed) {
      tt ^= monomial_tables_[static_cast<std::size_t>(std::countr_zero(changed))];
      changed &= changed - 1;
    }
  }

  bool bent(const BitVector& tt) {
    const std::size_t w = tt.popcount();
    if (w != weight_lo_ && w != weight_hi_) return false;
    kern_.bits_to_signs(tt.words(), signs_);
    kern_.fwht(signs_);
    for (auto v : signs_)
      if (v != target_ && v != -target_) return false;
    return true;
  }

  AnfVector anf_of(std::uint64_t candidate) const {
    AnfVector anf(n_);
    for (std::size_t j = 0; j < monomials_.size(); ++j)
      if ((candidate >> j) & 1u) anf.set(monomials_[j], true);
    return anf;
  }

  // All candidates in [first, last).
  void scan_all(std::uint64_t first, std::uint64_t last, std::vector<Found>& out) {
    if (first >= last) return;
    BitVector tt = table_of(first);
    for (std::uint64_t c = first;; ++c) {
      if (bent(tt)) out.push_back({c, anf_of(c)});
      if (c + 1 == last) break;
      toggle(tt, c ^ (c + 1));
    }
  }

  // `count` popcount-k candidates starting at colex rank `first_rank`.
  void scan_weight(int k, std::uint64_t first_rank, std::uint64_t count, std::vector<Found>& out) {
    if (count == 0) return;
    std::uint64_t c = unrank_colex(first_rank, k);
    BitVector tt = table_of(c);
    for (std::uint64_t i = 0;; ++i) {
      if (bent(tt)) out.push_back({c, anf_of(c)});
      if (i + 1 == count || k == 0) break;
      const std::uint64_t next = next_same_popcount(c);
      toggle(tt, c ^ next);
      c = next;
    }
  }

  std::size_t terms() const { return monomials_.size(); }

 private:
  int n_;
  std::vector<std::uint32_t> monomials_;
  const kernels::KernelTable& kern_;
  std::vector<BitVector> monomial_tables_;
  std::vector<std::int32_t> signs_;
  std::size_t weight_lo_ = 0, weight_hi_ = 0;
  std::int32_t target_ = 0;
};

}  // namespace

void for_each_homogeneous_bent(int n, int d, std::optional<int> k_filter, const BentVisitor& visit,
                               int workers) {
  check_num_vars(n);
  if (n % 2 != 0) throw InvalidInput("bent functions exist only for even n");
  if (d < 0 || d > n) throw InvalidInput("degree must be in [0, n]");
  const int m = static_cast<int>(binomial_u64(n, d));
  if (m > kMaxEnumerationTerms)
    throw InfeasibleEnumeration("C(" + std::to_string(n) + "," + std::to_string(d) + ")=" +
                                std::to_string(m) + " exceeds the enumeration bound of " +
                                std::to_string(kMaxEnumerationTerms) + " monomials");
  if (k_filter && (*k_filter < 0 || *k_filter > m)) return;

  const std::uint64_t total = k_filter ? binomial_u64(m, *k_filter) : (std::uint64_t{1} << m);
  const auto chunks = static_cast<std::uint64_t>(std::max(1, workers));
  std::vector<std::vector<Found>> results(chunks);
  auto work = [&](std::uint64_t w) {
    BentScanner scanner(n, d);
    const std::uint64_t begin = total * w / chunks;
    const std::uint64_t end = total * (w + 1) / chunks;
    if (k_filter)
      scanner.scan_weight(*k_filter, begin, end - begin, results[w]);
    else
      scanner.scan_all(begin, end, results[w]);
  };
  if (chunks == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::uint64_t w = 0; w < chunks; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& chunk : results)
    for (const auto& f : chunk) visit(f.candidate, f.anf);
}

std::vector<AnfVector> enumerate_homogeneous_bent(int n, int d, std::optional<int> k_filter,
                                                  int workers) {
  std::vector<AnfVector> out;
  for_each_homogeneous_bent(
      n, d, k_filter, [&](std::uint64_t, const AnfVector& anf) { out.push_back(anf); }, workers);
  return out;
}

bool quadratic_bent_oracle(const AnfVector& anf) {
  const int n = anf.num_vars();
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
  for (std::size_t a = 0; a < anf.size(); ++a) {
    if (!anf[a]) continue;
    if (std::popcount(static_cast<std::uint32_t>(a)) != 2)
      throw InvalidInput("rank oracle needs a homogeneous quadratic ANF");
    // matrix row/column r corresponds to mask bit r
    const int i = std::countr_zero(static_cast<std::uint32_t>(a));
    const int j = 31 - std::countl_zero(static_cast<std::uint32_t>(a));
    rows[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
    rows[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
  }
  int rank = 0;
  for (int col = 0; col < n; ++col) {
    const std::uint32_t bit = std::uint32_t{1} << col;
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (rows[static_cast<std::size_t>(r)] & bit) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
    for (int r = 0; r < n; ++r)
      if (r != rank && (rows[static_cast<std::size_t>(r)] & bit))
        rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(rank)];
    ++rank;
  }
  return rank == n;
}

DensityReport density_report(int n, int d, int workers) {
  check_num_vars(n);
  if (n % 2 != 0) throw InvalidInput("bent functions exist only for even n");
  if (d < 0 || d > n) throw InvalidInput("degree must be in [0, n]");
  const int m = static_cast<int>(binomial_u64(n, d));
  DensityReport report;
  report.n = n;
  report.d = d;
  report.space = BigInt(1) << m;

  if (m <= kMaxEnumerationTerms) {
    report.source = CensusSource::enumeration;
    std::vector<BigInt> per_k(static_cast<std::size_t>(m) + 1);
    for_each_homogeneous_bent(
        n, d, std::nullopt,
        [&](std::uint64_t candidate, const AnfVector&) {
          per_k[static_cast<std::size_t>(std::popcount(candidate))] += 1;
        },
        workers);
    for (int k = 0; k <= m; ++k) {
      const auto& c = per_k[static_cast<std::size_t>(k)];
      report.total_count += c;
      if (c != 0) report.by_terms.push_back({k, c, binomial_big(m, k)});
    }
    return report;
  }
  if (d == 2) {
    report.source = CensusSource::closed_form;
    report.total_count = quadratic_bent_count(n);
    return report;
  }
  if (n == 8 && d == 3) {
    report.source = CensusSource::published_reference;
    for (const auto& row : published_cubic_counts_n8()) {
      report.by_terms.push_back({row.k, BigInt(row.count), binomial_big(m, row.k)});
      report.total_count += row.count;
    }
    return report;
  }
  throw InfeasibleEnumeration("C(" + std::to_string(n) + "," + std::to_string(d) + ")=" +
                              std::to_string(m) + " exceeds the enumeration bound of " +
                              std::to_string(kMaxEnumerationTerms) +
                              " monomials and no closed form or reference data exists");
}

std::string format_decimal(const Rational& r, int significant) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  const Float v = Float(numerator(r)) / Float(denominator(r));
  std::ostringstream os;
  os << std::setprecision(significant) << v;
  return os.str();
}

namespace {

std::string source_label(CensusSource s) {
  switch (s) {
    case CensusSource::enumeration:
      return "exhaustive enumeration";
    case CensusSource::closed_form:
      return "closed-form quadratic count (per-k rows need enumeration)";
    case CensusSource::published_reference:
      return "published reference, not recomputed";
  }
  return "?";
}

}  // namespace

std::string report_text(const DensityReport& report) {
  std::ostringstream os;
  os << "n: " << report.n << "\n"
     << "degree: " << report.d << "\n"
     << "source: " << source_label(report.source) << "\n"
     << "homogeneous functions: " << report.space << "\n"
     << "bent count: " << report.total_count << "\n"
     << "density: " << report.total_count << "/" << report.space << " ~ "
     << format_decimal(report.density()) << "\n";
  if (!report.by_terms.empty()) {
    os << "terms  count  density\n";
    for (const auto& row : report.by_terms)
      os << row.k << "  " << row.count << "  " << row.count << "/" << row.space << " ~ "
         << format_decimal(row.density()) << "\n";
  }
  return os.str();
}

std::string report_csv(const DensityReport& report) {
  std::ostringstream os;
  if (report.source == CensusSource::published_reference)
    os << "# published reference, not recomputed\n";
  os << "k,count,density_numerator,density_denominator,density_decimal\n";
  for (const auto& row : report.by_terms)
    os << row.k << "," << row.count << "," << row.count << "," << row.space << ","
       << format_decimal(row.density()) << "\n";
  return os.str();
}

}  // namespace hbent
