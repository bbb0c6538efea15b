#include "hbent/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include "json.hpp"
#include <sstream>
#include <thread>

#include "hbent/errors.hpp"

namespace hbent {

namespace fs = std::filesystem;

void ExperimentSpec::validate() const {
  if (runs < 1) throw ConfigError("runs must be at least 1");
  if (workers < 1) throw ConfigError("workers must be at least 1");
  if (name.empty() || name.find_first_of("/\\") != std::string::npos)
    throw ConfigError("experiment name must be a plain file name");
  engine.validate();
}

std::string run_record_json(const ExperimentSpec& spec, int run_index, const RunResult& r) {
  const auto& e = spec.engine;
  nlohmann::ordered_json j;
  j["name"] = spec.name;
  j["run"] = run_index;
  j["seed"] = r.seed;
  j["n"] = e.n;
  j["degree"] = e.d;
  j["encoding"] = encoding_name(e.encoding);
  j["k"] = e.k ? nlohmann::ordered_json(*e.k) : nlohmann::ordered_json(nullptr);
  j["fitness"] = fitness_name(e.fitness);
  j["local_search"] = e.local_search.has_value();
  j["population"] = e.population_size;
  j["max_evaluations"] = e.max_evaluations;
  j["p_mut"] = e.p_mut;
  j["success"] = r.success;
  j["evaluations_used"] = r.evaluations_used;
  j["best_fitness"] = format_fitness(r.best_fitness);
  j["best_fitness_scaled"] = r.best_fitness.scaled;
  j["nonlinearity"] = r.best_fitness.penalized() ? nlohmann::ordered_json(nullptr)
                                                 : nlohmann::ordered_json(r.best_fitness.nl);
  j["max_count"] = r.best_fitness.penalized() ? nlohmann::ordered_json(nullptr)
                                              : nlohmann::ordered_json(r.best_fitness.max_count);
  j["terms"] = r.best_terms;
  j["best_genotype"] = r.best_genotype;
  j["best_anf"] = r.best_anf;
  j["best_truth_table"] = r.best_truth_table;
  auto trace = nlohmann::ordered_json::array();
  for (const auto& p : downsample_trace(r.fitness_trace, 1000))
    trace.push_back({p.evaluation, format_fitness(p.best)});
  j["trace"] = std::move(trace);
  return j.dump();
}

// SuccessTable

std::string SuccessTable::row_label(const EngineConfig& c) {
  if (c.encoding == Encoding::wanf || c.fitness == FitnessKind::bent_k) return std::to_string(*c.k);
  return "unrestricted";
}

std::string SuccessTable::column_label(const EngineConfig& c) {
  std::string label(encoding_label(c.encoding));
  if (c.local_search) label += "/LS";
  return label;
}

const std::vector<std::string>& SuccessTable::standard_columns() {
  static const std::vector<std::string> cols = {"GP", "TT", "rANF", "wANF", "rANF/LS", "wANF/LS"};
  return cols;
}

bool SuccessTable::RowOrder::operator()(const RowKey& a, const RowKey& b) const {
  if (a.first != b.first) return a.first < b.first;
  const bool ua = a.second == "unrestricted";
  const bool ub = b.second == "unrestricted";
  if (ua != ub) return ua;
  if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
  return a.second < b.second;
}

void SuccessTable::set(int n, const std::string& row, const std::string& column, SuccessCell cell) {
  const auto& std_cols = standard_columns();
  if (std::find(std_cols.begin(), std_cols.end(), column) == std_cols.end() &&
      std::find(extra_columns_.begin(), extra_columns_.end(), column) == extra_columns_.end())
    extra_columns_.push_back(column);
  rows_[{n, row}][column] = cell;
}

const SuccessCell* SuccessTable::find(int n, const std::string& row,
                                      const std::string& column) const {
  auto r = rows_.find({n, row});
  if (r == rows_.end()) return nullptr;
  auto c = r->second.find(column);
  return c == r->second.end() ? nullptr : &c->second;
}

std::string SuccessTable::to_csv() const {
  std::vector<std::string> columns = standard_columns();
  columns.insert(columns.end(), extra_columns_.begin(), extra_columns_.end());
  std::ostringstream os;
  os << "n,weight";
  for (const auto& c : columns) os << "," << c;
  os << "\n";
  for (const auto& [key, cells] : rows_) {
    os << key.first << "," << key.second;
    for (const auto& c : columns) {
      os << ",";
      if (key.second == "unrestricted" && c.rfind("wANF", 0) == 0) {
        os << "--";
        continue;
      }
      if (auto it = cells.find(c); it != cells.end())
        os << it->second.successes << "/" << it->second.runs;
    }
    os << "\n";
  }
  return os.str();
}

SuccessTable SuccessTable::from_csv(const std::string& text) {
  SuccessTable table;
  std::istringstream is(text);
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream fs(s);
    while (std::getline(fs, field, ',')) out.push_back(field);
    if (!s.empty() && s.back() == ',') out.emplace_back();
    return out;
  };
  if (!std::getline(is, line)) return table;
  const auto header = split(line);
  if (header.size() < 2 || header[0] != "n" || header[1] != "weight")
    throw ParseError("success table header must start with n,weight", 0);
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != header.size())
      throw ParseError("success table row " + std::to_string(line_no) + " has " +
                           std::to_string(fields.size()) + " fields",
                       line_no);
    const int n = std::stoi(fields[0]);
    for (std::size_t c = 2; c < fields.size(); ++c) {
      const auto& cell = fields[c];
      const auto slash = cell.find('/');
      if (cell.empty() || cell == "--" || slash == std::string::npos) continue;
      table.set(n, fields[1], header[c],
                {std::stoi(cell.substr(0, slash)), std::stoi(cell.substr(slash + 1))});
    }
  }
  return table;
}

// Batch runner

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + p.string());
}

fs::path run_file(const ExperimentSpec& spec, int i) {
  char suffix[32];
  std::snprintf(suffix, sizeof suffix, "_run%03d.jsonl", i);
  return spec.output_path / "runs" / (spec.name + suffix);
}

}  // namespace

BatchResult run_experiment(const ExperimentSpec& spec,
                           const std::function<void(int, const RunResult&)>& on_run) {
  spec.validate();
  fs::create_directories(spec.output_path / "runs");

  BatchResult batch;
  batch.runs.resize(static_cast<std::size_t>(spec.runs));
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex mutex;

  auto worker = [&] {
    while (!failed) {
      const int i = next++;
      if (i >= spec.runs) return;
      try {
        EngineConfig config = spec.engine;
        config.seed = spec.base_seed + static_cast<std::uint64_t>(i);
        RunResult result = run_sst(config);
        write_file(run_file(spec, i), run_record_json(spec, i, result) + "\n");
        std::lock_guard lock(mutex);
        if (on_run) on_run(i, result);
        batch.runs[static_cast<std::size_t>(i)] = std::move(result);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  const int threads = std::min(spec.workers, spec.runs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  std::string records;
  for (int i = 0; i < spec.runs; ++i) {
    records += read_file(run_file(spec, i));
    if (batch.runs[static_cast<std::size_t>(i)].success) ++batch.successes;
  }
  batch.records_file = spec.output_path / (spec.name + ".jsonl");
  write_file(batch.records_file, records);

  batch.table_file = spec.output_path / "success_table.csv";
  SuccessTable table =
      fs::exists(batch.table_file) ? SuccessTable::from_csv(read_file(batch.table_file)) : SuccessTable{};
  table.set(spec.engine.n, SuccessTable::row_label(spec.engine),
            SuccessTable::column_label(spec.engine), {batch.successes, spec.runs});
  write_file(batch.table_file, table.to_csv());
  return batch;
}

}  // namespace hbent
