#include "hbent/engine.hpp"

#include <algorithm>
#include <cmath>

#include "hbent/errors.hpp"

namespace hbent {

void EngineConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };
  if (n < 1 || n > kMaxVars) fail("n must be in [1, 16]");
  if (d < 0 || d > n) fail("degree must be in [0, n]");
  if (population_size < tournament_size) fail("population size must be at least 3");
  if (max_evaluations < 1) fail("evaluation budget must be positive");
  if (!(p_mut >= 0.0 && p_mut <= 1.0)) fail("mutation probability must be in [0, 1]");
  if (encoding == Encoding::wanf && !k) fail("wANF encoding requires k");
  if (fitness == FitnessKind::bent_k && !k) fail("bent-k fitness requires k");
  if (k) {
    const auto terms = homogeneous_monomials(n, d).size();
    if (*k < 0 || static_cast<std::size_t>(*k) > terms)
      fail("k must be in [0, C(n,d)=" + std::to_string(terms) + "]");
  }
  if (local_search) {
    if (local_search->trials < 1) fail("local search trials must be at least 1");
    if (!(local_search->fraction >= 0.0 && local_search->fraction <= 1.0))
      fail("local search fraction must be in [0, 1]");
  }
  if (encoding == Encoding::gp &&
      (gp.init_min_depth < 0 || gp.init_min_depth > gp.init_max_depth ||
       gp.init_max_depth > gp.max_depth))
    fail("GP depths must satisfy 0 <= init_min <= init_max <= max");
}

bool is_success(const Decoded& f, const FitnessValue& fitness, int d) {
  const int n = f.tt.num_vars();
  if (n % 2 != 0 || fitness.penalized()) return false;
  const std::int64_t optimum = static_cast<std::int64_t>(bent_nonlinearity(n)) << n;
  return fitness.scaled == optimum && is_homogeneous(f.anf, d);
}

SearchContext::SearchContext(const EngineConfig& config, EvaluationObserver observer)
    : config_((config.validate(), config)),
      decoder_(config.n, config.d),
      fitness_(config.fitness, config.n, config.k),
      observer_(std::move(observer)) {}

FitnessValue SearchContext::evaluate(const Genotype& g) {
  Decoded decoded = decoder_.decode(g);
  const FitnessValue fit = fitness_(decoded);
  ++evaluations_;
  if (observer_) observer_(decoded, fit);
  if (!best_ || fit > best_->fitness) {
    best_ = Individual{g, fit};
    trace_.push_back({evaluations_, fit});
    if (is_success(decoded, fit, config_.d)) solved_ = true;
    best_decoded_ = std::move(decoded);
  }
  return fit;
}

Genotype SearchContext::crossover(const Genotype& a, const Genotype& b, Rng& rng) const {
  return hbent::crossover(a, b, rng, config_.gp);
}

void SearchContext::mutate(Genotype& g, Rng& rng) const { hbent::mutate(g, config_.n, rng, config_.gp); }

RunResult SearchContext::result() const {
  RunResult r;
  r.seed = config_.seed;
  r.evaluations_used = evaluations_;
  r.success = solved_;
  r.fitness_trace = trace_;
  if (best_) {
    r.best_fitness = best_->fitness;
    r.best_genotype = serialize(best_->genotype);
    r.best_anf = to_monomial_form(best_decoded_->anf);
    r.best_truth_table = to_hex(best_decoded_->tt);
    r.best_terms = monomial_count(best_decoded_->anf);
  }
  return r;
}

LocalSearchResult local_search(Individual start, SearchContext& context, int trials, Rng& rng) {
  LocalSearchResult out{std::move(start), 0};
  int failures = 0;
  while (failures < trials && !context.budget_exhausted() && !context.solved()) {
    Genotype candidate = out.individual.genotype;
    context.mutate(candidate, rng);
    const FitnessValue fit = context.evaluate(candidate);
    ++out.evaluations_spent;
    if (fit > out.individual.fitness) {
      out.individual = Individual{std::move(candidate), fit};
      failures = 0;
    } else {
      ++failures;
    }
  }
  return out;
}

namespace {

class SteadyState {
 public:
  SteadyState(const EngineConfig& config, const EvaluationObserver& observer)
      : ctx_(config, observer), rng_(config.seed) {}

  RunResult run() {
    const auto& cfg = ctx_.config();
    population_.reserve(static_cast<std::size_t>(cfg.population_size));
    for (int i = 0; i < cfg.population_size; ++i) {
      Genotype g = random_genotype(cfg.encoding, cfg.n, cfg.d, cfg.k, rng_, cfg.gp);
      FitnessValue f = ctx_.evaluate(g);
      population_.push_back({std::move(g), f});
    }
    std::int64_t iteration = 0;
    while (!ctx_.budget_exhausted() && !ctx_.solved()) {
      step();
      ++iteration;
      if (cfg.local_search && iteration % cfg.population_size == 0) apply_local_search();
    }
    return ctx_.result();
  }

 private:
  void step() {
    const auto& cfg = ctx_.config();
    const std::size_t size = population_.size();
    std::size_t pick[3];
    pick[0] = uniform_index(rng_, size);
    do pick[1] = uniform_index(rng_, size);
    while (pick[1] == pick[0]);
    do pick[2] = uniform_index(rng_, size);
    while (pick[2] == pick[0] || pick[2] == pick[1]);

    FitnessValue worst = population_[pick[0]].fitness;
    for (auto p : pick) worst = std::min(worst, population_[p].fitness);
    std::size_t tied[3];
    std::size_t n_tied = 0;
    for (std::size_t t = 0; t < 3; ++t)
      if (population_[pick[t]].fitness == worst) tied[n_tied++] = t;
    const std::size_t loser = n_tied == 1 ? tied[0] : tied[uniform_index(rng_, n_tied)];

    std::size_t parents[2];
    std::size_t np = 0;
    for (std::size_t t = 0; t < 3; ++t)
      if (t != loser) parents[np++] = pick[t];

    Genotype child =
        ctx_.crossover(population_[parents[0]].genotype, population_[parents[1]].genotype, rng_);
    if (bernoulli(rng_, cfg.p_mut)) ctx_.mutate(child, rng_);
    const FitnessValue f = ctx_.evaluate(child);
    population_[pick[loser]] = Individual{std::move(child), f};
  }

  void apply_local_search() {
    const auto& ls = *ctx_.config().local_search;
    std::size_t best = 0;
    for (std::size_t i = 1; i < population_.size(); ++i)
      if (population_[i].fitness > population_[best].fitness) best = i;
    std::vector<std::size_t> targets{best};
    const auto extra = static_cast<std::size_t>(
        std::ceil(ls.fraction * static_cast<double>(population_.size())));
    for (std::size_t i = 0; i < extra; ++i) targets.push_back(uniform_index(rng_, population_.size()));
    for (auto t : targets) {
      if (ctx_.budget_exhausted() || ctx_.solved()) return;
      population_[t] = local_search(population_[t], ctx_, ls.trials, rng_).individual;
    }
  }

  SearchContext ctx_;
  Rng rng_;
  std::vector<Individual> population_;
};

}  // namespace

RunResult run_sst(const EngineConfig& config, const EvaluationObserver& observer) {
  return SteadyState(config, observer).run();
}

std::vector<TracePoint> downsample_trace(const std::vector<TracePoint>& trace,
                                         std::size_t max_points) {
  if (trace.size() <= max_points || max_points < 2) return trace;
  std::vector<TracePoint> out;
  out.reserve(max_points);
  const std::size_t last = trace.size() - 1;
  for (std::size_t i = 0; i < max_points; ++i) out.push_back(trace[i * last / (max_points - 1)]);
  return out;
}

}  // namespace hbent
