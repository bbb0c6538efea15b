#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hbent/encodings.hpp"
#include "hbent/fitness.hpp"
#include "hbent/random.hpp"

namespace hbent {

struct LocalSearchConfig {
  double fraction = 0.01;
  int trials = 30;
};

struct EngineConfig {
  static constexpr int tournament_size = 3;

  int population_size = 500;
  std::int64_t max_evaluations = 1'000'000;
  double p_mut = 0.5;
  Encoding encoding = Encoding::ranf;
  int n = 6;
  int d = 2;
  std::optional<int> k;
  FitnessKind fitness = FitnessKind::bent;
  std::optional<LocalSearchConfig> local_search;
  std::uint64_t seed = 0;
  GpConfig gp;

  /// Throws ConfigError.
  void validate() const;
};

struct Individual {
  Genotype genotype;
  FitnessValue fitness;
};

struct TracePoint {
  std::int64_t evaluation;
  FitnessValue best;
};

struct RunResult {
  FitnessValue best_fitness;
  std::string best_genotype;
  std::string best_anf;
  std::string best_truth_table;  // hex
  std::size_t best_terms = 0;
  std::int64_t evaluations_used = 0;
  bool success = false;
  std::vector<TracePoint> fitness_trace;  // one point per best-so-far improvement
  std::uint64_t seed = 0;
};

/// Called once per fitness evaluation, in evaluation order.
using EvaluationObserver = std::function<void(const Decoded&, const FitnessValue&)>;

/// True iff the function is bent, homogeneous of degree d, and the fitness
/// is on the nonlinearity branch.
bool is_success(const Decoded& f, const FitnessValue& fitness, int d);

/// Per-run evaluation state: decoder, fitness scratch, evaluation counter and
/// best-of-run bookkeeping. Confined to one thread.
class SearchContext {
 public:
  explicit SearchContext(const EngineConfig& config, EvaluationObserver observer = {});

  const EngineConfig& config() const noexcept { return config_; }
  FitnessValue evaluate(const Genotype& g);
  Genotype crossover(const Genotype& a, const Genotype& b, Rng& rng) const;
  void mutate(Genotype& g, Rng& rng) const;

  std::int64_t evaluations() const noexcept { return evaluations_; }
  bool budget_exhausted() const noexcept { return evaluations_ >= config_.max_evaluations; }
  bool solved() const noexcept { return solved_; }
  RunResult result() const;

 private:
  EngineConfig config_;
  Decoder decoder_;
  FitnessFunction fitness_;
  EvaluationObserver observer_;
  std::int64_t evaluations_ = 0;
  bool solved_ = false;
  std::optional<Individual> best_;
  std::optional<Decoded> best_decoded_;
  std::vector<TracePoint> trace_;
};

struct LocalSearchResult {
  Individual individual;
  std::int64_t evaluations_spent = 0;
};

/// Hill climbing by repeated mutation. A strictly better mutant replaces the
/// current solution and resets the trial counter; `trials` consecutive
/// failures end the search. Stops early when the context's budget runs out
/// or the problem is solved.
LocalSearchResult local_search(Individual start, SearchContext& context, int trials, Rng& rng);

/// Steady-state 3-tournament elimination. Deterministic for a given config.
RunResult run_sst(const EngineConfig& config, const EvaluationObserver& observer = {});

/// At most max_points points, always keeping the first and last.
std::vector<TracePoint> downsample_trace(const std::vector<TracePoint>& trace,
                                         std::size_t max_points);

}  // namespace hbent
