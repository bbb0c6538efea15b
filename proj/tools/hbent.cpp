// Command-line front end: evolve, census, verify, density-formula.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "hbent/boolfn.hpp"
#include "hbent/census.hpp"
#include "hbent/errors.hpp"
#include "hbent/fitness.hpp"
#include "hbent/harness.hpp"

namespace fs = std::filesystem;
using namespace hbent;

namespace {

struct EvolveOptions {
  int n = 6;
  int degree = 2;
  std::string encoding = "ranf";
  std::string k = "unrestricted";
  std::string fitness = "bent";
  int runs = 30;
  std::uint64_t seed = 0;
  std::int64_t evaluations = 1'000'000;
  int population = 500;
  double pmut = 0.5;
  bool local_search = false;
  double ls_fraction = 0.01;
  int ls_trials = 30;
  int workers = 1;
  std::string out = "results";
  std::string name;
};

std::optional<int> parse_k(const std::string& text) {
  if (text == "unrestricted") return std::nullopt;
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw ConfigError("--k expects an integer or 'unrestricted', got '" + text + "'");
  return k;
}

int run_evolve(const EvolveOptions& o) {
  ExperimentSpec spec;
  auto& e = spec.engine;
  e.n = o.n;
  e.d = o.degree;
  e.encoding = parse_encoding(o.encoding);
  e.k = parse_k(o.k);
  e.fitness = parse_fitness(o.fitness);
  e.population_size = o.population;
  e.max_evaluations = o.evaluations;
  e.p_mut = o.pmut;
  if (o.local_search) e.local_search = LocalSearchConfig{o.ls_fraction, o.ls_trials};
  spec.runs = o.runs;
  spec.base_seed = o.seed;
  spec.workers = o.workers;
  spec.output_path = o.out;
  spec.name = o.name;
  if (spec.name.empty()) {
    spec.name = "n" + std::to_string(o.n) + "_d" + std::to_string(o.degree) + "_" + o.encoding +
                "_" + (e.k ? "k" + std::to_string(*e.k) : std::string("unrestricted")) + "_" +
                o.fitness + (o.local_search ? "_ls" : "");
  }

  const auto batch = run_experiment(spec, [&](int i, const RunResult& r) {
    std::cout << "run " << i << " seed " << r.seed << ": " << (r.success ? "success" : "failure")
              << " best=" << format_fitness(r.best_fitness) << " terms=" << r.best_terms
              << " evaluations=" << r.evaluations_used << std::endl;
  });
  std::cout << "records: " << batch.records_file.string() << "\n";
  std::cout << "table: " << batch.table_file.string() << "\n";
  std::cout << "successes: " << batch.successes << "/" << spec.runs << std::endl;
  return 0;
}

int run_census(int n, int d, const std::string& out, int workers) {
  const auto report = density_report(n, d, workers);
  std::cout << report_text(report);
  if (!out.empty()) {
    fs::create_directories(out);
    const auto base = fs::path(out) / ("census_n" + std::to_string(n) + "_d" + std::to_string(d));
    std::ofstream(base.string() + ".csv") << report_csv(report);
    std::ofstream(base.string() + ".txt") << report_text(report);
    std::cout << "wrote " << base.string() << ".csv\n";
  }
  return 0;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

int run_verify(const std::string& file, std::optional<int> degree, std::optional<int> n_opt,
               const std::string& format) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = trim(buf.str());

  bool hex = format == "hex";
  if (format == "auto")
    hex = !text.empty() &&
          std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isxdigit(c); });

  TruthTable tt(1);
  AnfVector anf(1);
  if (hex) {
    tt = truth_table_from_hex(text);
    if (n_opt && *n_opt != tt.num_vars())
      throw InvalidInput("hex length implies n = " + std::to_string(tt.num_vars()));
    anf = mobius_transform(tt);
  } else {
    const int n = n_opt ? *n_opt : std::max(1, max_variable_in_monomial_form(text));
    anf = parse_monomial_form(text, n);
    tt = anf_to_truth_table(anf);
  }
  const int n = tt.num_vars();
  const auto spectrum = walsh_hadamard(tt);
  const int deg = algebraic_degree(anf);
  const int d = degree.value_or(deg);

  std::cout << "n: " << n << "\n"
            << "degree: " << deg << "\n"
            << "homogeneous(" << d << "): " << (is_homogeneous(anf, d) ? "true" : "false") << "\n"
            << "terms: " << monomial_count(anf) << "\n"
            << "nl: " << nonlinearity(spectrum) << "\n"
            << "bent: " << (is_bent(spectrum) ? "true" : "false") << "\n"
            << "fit_bent: " << format_fitness(fit_bent(tt)) << "\n"
            << "anf: " << to_monomial_form(anf) << "\n"
            << "truth_table: " << to_hex(tt) << "\n";
  return 0;
}

int run_density_formula(std::optional<int> n_opt, int terms) {
  auto print = [](int n) {
    const auto count = quadratic_bent_count(n);
    const BigInt space = BigInt(1) << (n * (n - 1) / 2);
    std::cout << "n=" << n << " count=" << count << " space=2^" << n * (n - 1) / 2
              << " density=" << format_decimal(Rational(count, space)) << "\n";
  };
  if (n_opt) {
    print(*n_opt);
  } else {
    for (int n = 2; n <= 16; n += 2) print(n);
  }
  std::ostringstream limit;
  limit.precision(10);
  limit << std::fixed << asymptotic_quadratic_density(terms);
  std::cout << "limit (" << terms << "-term product): " << limit.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evolve and count homogeneous bent Boolean functions"};
  app.require_subcommand(1);
  app.set_config("--config", "", "INI file; keys go under a [evolve] section, flags override them");

  EvolveOptions ev;
  auto* evolve = app.add_subcommand("evolve", "run a batch of evolutionary searches");
  evolve->fallthrough();  // lets --config follow the subcommand name
  evolve->add_option("--n", ev.n, "number of variables")->capture_default_str();
  evolve->add_option("--degree", ev.degree, "target degree")->capture_default_str();
  evolve->add_option("--encoding", ev.encoding, "gp, tt, ranf or wanf")
      ->check(CLI::IsMember({"gp", "tt", "ranf", "wanf"}))
      ->capture_default_str();
  evolve->add_option("--k", ev.k, "monomial count or 'unrestricted'")->capture_default_str();
  evolve->add_option("--fitness", ev.fitness, "bent or bent-k")
      ->check(CLI::IsMember({"bent", "bent-k"}))
      ->capture_default_str();
  evolve->add_option("--runs", ev.runs, "independent runs")->capture_default_str();
  evolve->add_option("--seed", ev.seed, "base seed; run i uses seed + i")->capture_default_str();
  evolve->add_option("--evaluations", ev.evaluations, "evaluation budget per run")
      ->capture_default_str();
  evolve->add_option("--population", ev.population, "population size")->capture_default_str();
  evolve->add_option("--pmut", ev.pmut, "mutation probability")->capture_default_str();
  evolve->add_flag("--local-search", ev.local_search, "enable local search");
  evolve->add_option("--ls-fraction", ev.ls_fraction, "fraction of the population refined")
      ->capture_default_str();
  evolve->add_option("--ls-trials", ev.ls_trials, "failed trials before local search stops")
      ->capture_default_str();
  evolve->add_option("--workers", ev.workers, "concurrent runs")->capture_default_str();
  evolve->add_option("--out", ev.out, "output directory")->capture_default_str();
  evolve->add_option("--name", ev.name, "record file stem");

  int census_n = 0, census_d = 0, census_workers = 1;
  std::string census_out;
  auto* census = app.add_subcommand("census", "count homogeneous bent functions");
  census->add_option("n", census_n, "number of variables")->required();
  census->add_option("d", census_d, "degree")->required();
  census->add_option("--out", census_out, "write CSV and text report here");
  census->add_option("--workers", census_workers, "enumeration threads")->capture_default_str();

  std::string verify_file, verify_format = "auto";
  std::optional<int> verify_degree, verify_n;
  auto* verify = app.add_subcommand("verify", "report properties of a function");
  verify->add_option("file", verify_file, "hex truth table or ANF in monomial form")->required();
  verify->add_option("--degree", verify_degree, "degree for the homogeneity check");
  verify->add_option("--n", verify_n, "number of variables for ANF input");
  verify->add_option("--format", verify_format, "auto, hex or anf")
      ->check(CLI::IsMember({"auto", "hex", "anf"}))
      ->capture_default_str();

  std::optional<int> formula_n;
  int formula_terms = 30;
  auto* formula = app.add_subcommand("density-formula", "closed-form quadratic counts");
  formula->add_option("--n", formula_n, "even number of variables (default: all up to 16)");
  formula->add_option("--terms", formula_terms, "terms in the limit product")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*evolve) return run_evolve(ev);
    if (*census) return run_census(census_n, census_d, census_out, census_workers);
    if (*verify) return run_verify(verify_file, verify_degree, verify_n, verify_format);
    if (*formula) return run_density_formula(formula_n, formula_terms);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
