#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hbent/engine.hpp"

namespace hbent {

struct ExperimentSpec {
  std::string name = "experiment";
  EngineConfig engine;  // seed is replaced by base_seed + run index
  int runs = 30;
  std::uint64_t base_seed = 0;
  std::filesystem::path output_path = ".";
  int workers = 1;

  void validate() const;
};

/// One JSON object on one line. The trace is downsampled to 1000 points.
std::string run_record_json(const ExperimentSpec& spec, int run_index, const RunResult& result);

struct SuccessCell {
  int successes = 0;
  int runs = 0;
};

/// Success counts keyed by (n, weight label) rows and encoding columns.
class SuccessTable {
 public:
  using RowKey = std::pair<int, std::string>;

  static std::string row_label(const EngineConfig& config);     // "unrestricted" or k
  static std::string column_label(const EngineConfig& config);  // "rANF", "wANF/LS", ...
  static const std::vector<std::string>& standard_columns();

  void set(int n, const std::string& row, const std::string& column, SuccessCell cell);
  const SuccessCell* find(int n, const std::string& row, const std::string& column) const;

  /// Cells render as "successes/runs"; wANF cells of unrestricted rows as "--".
  std::string to_csv() const;
  static SuccessTable from_csv(const std::string& text);

 private:
  struct RowOrder {
    bool operator()(const RowKey& a, const RowKey& b) const;
  };
  std::map<RowKey, std::map<std::string, SuccessCell>, RowOrder> rows_;
  std::vector<std::string> extra_columns_;
};

struct BatchResult {
  std::vector<RunResult> runs;
  int successes = 0;
  std::filesystem::path records_file;
  std::filesystem::path table_file;
};

/// Runs spec.runs independent runs on up to spec.workers threads. Each run
/// writes runs/<name>_run<i>.jsonl; afterwards the records are concatenated
/// in run order into <name>.jsonl and the success cell is merged into
/// success_table.csv. A failing run stops the batch; files of finished runs
/// stay on disk and the error is rethrown.
BatchResult run_experiment(const ExperimentSpec& spec,
                           const std::function<void(int, const RunResult&)>& on_run = {});

}  // namespace hbent
